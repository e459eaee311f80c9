#pragma once

#include <cmath>
#include <cstdint>

// Small shared helpers for the geometric sums that appear in mass arms.
// Internal to the library sources.

namespace k3stab::detail {

// 1 + ratio + ... + ratio^(j-1), j >= 0.  Stable for ratio near 1.
inline double geom_sum(double ratio, std::int64_t j) {
  if (j <= 0) return 0.0;
  if (ratio == 1.0) return static_cast<double>(j);
  const double lr = std::log(ratio);
  return std::expm1(static_cast<double>(j) * lr) / std::expm1(lr);
}

// q^1 + q^2 + ... + q^j, j >= 0.
inline double sum_q_up(double q, std::int64_t j) {
  return q * geom_sum(q, j);
}

// q^0 + q^-1 + ... + q^-(j-1), j >= 0.
inline double sum_q_down(double q, std::int64_t j) {
  return geom_sum(1.0 / q, j);
}

// Value of the boundary vertex function with apex n at index k:
//   0 at k = n, 1 + q + ... + q^(j-1) at n - j, 1 + 1/q + ... at n + j.
inline double vertex_value(std::int64_t n, double q, std::int64_t k) {
  if (k == n) return 0.0;
  if (k < n) return geom_sum(q, n - k);
  return geom_sum(1.0 / q, k - n);
}

}  // namespace k3stab::detail
