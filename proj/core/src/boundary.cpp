#include "k3stab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <tuple>

#include "qseries.hpp"

namespace k3stab {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("weight q must be positive and finite");
  }
}

void require_ray(const Ray& ray) {
  if (!(ray.v >= 0.0) || !(ray.w >= 0.0) || !(ray.v + ray.w > 0.0)) {
    throw DomainError("ray coordinates must be non-negative, not both zero");
  }
}

// Skeleton with zero tail steps; callers fill the steps from their own
// evaluation one index outside the window.
MassFunction from_values(double q, Window w,
                         const std::vector<double>& values) {
  MassFunction out;
  out.q = q;
  out.window = w;
  out.values = values;
  const TailKind kind = (q == 1.0) ? TailKind::Affine : TailKind::Geometric;
  out.left = {kind, w.lo, values.front(), 0.0, (q == 1.0) ? 1.0 : q};
  out.right = {kind, w.hi, values.back(), 0.0, (q == 1.0) ? 1.0 : 1.0 / q};
  return out;
}

}  // namespace

MassFunction vertex_p(std::int64_t n, double q, Window window) {
  require_positive_q(q);
  Window w = window;
  w.lo = std::min(w.lo, n - 1);
  w.hi = std::max(w.hi, n + 1);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(w.width()));
  for (std::int64_t k = w.lo; k <= w.hi; ++k) {
    values.push_back(detail::vertex_value(n, q, k));
  }
  MassFunction out = from_values(q, w, values);
  out.left.step = detail::vertex_value(n, q, w.lo - 1) - values.front();
  out.right.step = detail::vertex_value(n, q, w.hi + 1) - values.back();
  return out;
}

MassFunction vertex_q(Window window, double q) {
  require_positive_q(q);
  std::vector<double> values(static_cast<std::size_t>(window.width()), 1.0);
  MassFunction out = from_values(q, window, values);
  out.left.kind = TailKind::Affine;
  out.right.kind = TailKind::Affine;
  out.left.ratio = 1.0;
  out.right.ratio = 1.0;
  return out;
}

MassFunction pi_on_square(std::int64_t n, double u01, Ray ray, double q,
                          Window window) {
  require_positive_q(q);
  require_ray(ray);
  if (!(u01 >= 0.0) || !(u01 <= 1.0)) {
    throw DomainError("square fraction must lie in [0, 1]");
  }
  Window w = window;
  w.lo = std::min(w.lo, n - 1);
  w.hi = std::max(w.hi, n + 2);
  const double scale_n = std::pow(q, static_cast<double>(-n));
  const double scale_n1 = std::pow(q, static_cast<double>(-n - 1));
  const auto eval = [&](std::int64_t k) {
    return ray.w +
           ray.v * ((1.0 - u01) * scale_n * detail::vertex_value(n, q, k) +
                    u01 * scale_n1 * detail::vertex_value(n + 1, q, k));
  };
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(w.width()));
  for (std::int64_t k = w.lo; k <= w.hi; ++k) values.push_back(eval(k));
  MassFunction out = from_values(q, w, values);
  out.left.step = eval(w.lo - 1) - values.front();
  out.right.step = eval(w.hi + 1) - values.back();
  return out;
}

MassFunction pi_param(const SquareCoord& s, Window window) {
  require_positive_q(s.q);
  require_ray(s.ray);
  if (std::isnan(s.u)) throw DomainError("square coordinate u is NaN");

  if (std::isinf(s.u)) {
    const bool blue_at_plus = s.q > 1.0;
    const bool at_plus = s.u > 0.0;
    if (s.q == 1.0 || s.ray.v == 0.0 || at_plus != blue_at_plus) {
      return vertex_q(window, s.q);
    }
    // Blue end: entrywise limit of the interior formula,
    // w + v*q^-k/(q-1) for q>1 and its q <-> 1/q reflection below.
    const double coef =
        (s.q > 1.0) ? 1.0 / (s.q - 1.0) : s.q / (1.0 - s.q);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(window.width()));
    for (std::int64_t k = window.lo; k <= window.hi; ++k) {
      values.push_back(s.ray.w +
                       s.ray.v * coef *
                           std::pow(s.q, static_cast<double>(-k)));
    }
    MassFunction out = from_values(s.q, window, values);
    const auto eval = [&](std::int64_t k) {
      return s.ray.w +
             s.ray.v * coef * std::pow(s.q, static_cast<double>(-k));
    };
    out.left.step = eval(window.lo - 1) - values.front();
    out.right.step = eval(window.hi + 1) - values.back();
    return out;
  }

  const double nf = std::floor(s.u);
  const auto n = static_cast<std::int64_t>(nf);
  return pi_on_square(n, s.u - nf, s.ray, s.q, window);
}

double hom_functional(std::int64_t n, double q) {
  require_positive_q(q);
  if (q == 1.0) return 1.0;
  return std::pow(q, static_cast<double>(-n));
}

LaxDescriptor lax_red_point() {
  LaxDescriptor d;
  d.Z_O = Complex(0.0, 0.0);
  d.Z_k = Complex(-1.0, 0.0);
  d.massless = {atom_structure()};
  d.support_property = true;
  return d;
}

LaxDescriptor lax_vertex_p0() {
  LaxDescriptor d;
  d.Z_O = Complex(1.0, 0.0);
  d.Z_k = Complex(0.0, 0.0);
  d.massless = {atom_sky(0)};
  d.support_property = false;
  return d;
}

double support_ratio(std::int64_t r, std::int64_t m,
                     const LaxDescriptor& lax) {
  if (r < 1) throw DomainError("support ratio requires rank r >= 1");
  const double rd = static_cast<double>(r);
  const double md = static_cast<double>(m);
  const Complex charge = rd * lax.Z_O + md * lax.Z_k;
  return std::abs(charge) / std::sqrt(rd * rd + md * md);
}

double imn_phase(const ChartPoint& chart, std::int64_t m, std::int64_t n) {
  if (region(chart) != Region::WMinus) {
    throw DomainError("kernel phases are defined on the lower region");
  }
  if (!(n >= m && m >= 1)) {
    throw DomainError("kernel class requires n >= m >= 1");
  }
  const Complex charge =
      Complex(static_cast<double>(n), 0.0) -
      static_cast<double>(m) * chart.z;
  return std::arg(charge) / pi;
}

ThresholdWitness threshold_witness(const ChartPoint& chart, double t,
                                   int depth) {
  if (region(chart) != Region::WMinus) {
    throw DomainError("threshold witness is defined on the lower region");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("threshold slope offset must be positive");
  }
  if (depth < 1) throw DomainError("threshold depth must be at least 1");

  const double s0 = 1.0 + t;
  ThresholdWitness out;
  out.sup_below = -std::numeric_limits<double>::infinity();
  out.inf_above = std::numeric_limits<double>::infinity();
  for (std::int64_t m = 1; m <= depth; ++m) {
    const double target = static_cast<double>(m) * s0;
    const double fl = std::floor(target);
    std::int64_t n_hi = static_cast<std::int64_t>(fl) + 1;
    std::int64_t n_lo = static_cast<std::int64_t>(fl);
    if (fl == target) n_lo -= 1;  // the ratio must stay strictly below
    if (n_hi >= m) {
      out.sup_below = std::max(out.sup_below, imn_phase(chart, m, n_hi));
    }
    if (n_lo >= m) {
      out.inf_above = std::min(out.inf_above, imn_phase(chart, m, n_lo));
    }
  }
  return out;
}

bool semistable_class_predicate(std::int64_t r, std::int64_t n) {
  if (r == 0) return n >= 1;
  if (r >= 1) return n == 0 || -n >= r;
  return false;
}

std::vector<PhasePoint> phase_cloud(const ChartPoint& chart,
                                    std::int64_t r_max, std::int64_t n_max,
                                    bool include_shifts) {
  if (region(chart) != Region::WMinus) {
    throw DomainError("phase cloud is defined on the lower region");
  }
  if (r_max < 0 || n_max < 0) {
    throw DomainError("phase cloud bounds must be non-negative");
  }
  std::vector<PhasePoint> cloud;
  for (std::int64_t r = 0; r <= r_max; ++r) {
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      if (!semistable_class_predicate(r, n)) continue;
      double phase;
      if (r == 0) {
        phase = 1.0;
      } else {
        const Complex charge =
            -static_cast<double>(r) * chart.z - static_cast<double>(n);
        phase = std::arg(charge) / pi;
      }
      cloud.push_back({r, n, phase});
    }
  }
  if (include_shifts) {
    const std::size_t base = cloud.size();
    cloud.reserve(2 * base);
    for (std::size_t i = 0; i < base; ++i) {
      cloud.push_back({-cloud[i].r, -cloud[i].n, cloud[i].phase + 1.0});
    }
    std::sort(cloud.begin(), cloud.end(),
              [](const PhasePoint& x, const PhasePoint& y) {
                return std::tie(x.r, x.n) < std::tie(y.r, y.n);
              });
  }
  return cloud;
}

std::string phase_cloud_csv(const std::vector<PhasePoint>& cloud) {
  std::string out = "r,n,phase\n";
  char buf[96];
  for (const PhasePoint& p : cloud) {
    std::snprintf(buf, sizeof(buf), "%lld,%lld,%.12g\n",
                  static_cast<long long>(p.r), static_cast<long long>(p.n),
                  p.phase);
    out += buf;
  }
  return out;
}

}  // namespace k3stab
