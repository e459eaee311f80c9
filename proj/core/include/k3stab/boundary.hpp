#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3stab/chart.hpp"
#include "k3stab/mass.hpp"
#include "k3stab/mukai.hpp"

namespace k3stab {

// Massless vertex function: value 0 at index n, 1+q+..+q^(j-1) at n-j,
// 1+1/q+..+q^-(j-1) at n+j.  At q=1 this is |k-n|.  The window is widened
// to cover [n-1, n+1] so the tails stay valid.
MassFunction vertex_p(std::int64_t n, double q, Window window = {});

// Constant window of ones.
MassFunction vertex_q(Window window = {}, double q = 1.0);

// Projective ray [v:w], both coordinates non-negative, not both zero.
struct Ray {
  double v = 1.0;
  double w = 0.0;
};

// Point of the parameter square.  u may be +-infinity.
struct SquareCoord {
  double u = 0.0;
  Ray ray;
  double q = 1.0;
};

// Convex-combination formula on square n with explicit fraction
// u01 in [0, 1]:
//   value(k) = w + v*((1-u01)*q^-n*P_n(k) + u01*q^-(n+1)*P_(n+1)(k)).
// Exposed separately so seam equality between adjacent squares is exact:
// (n-1, u01=1) and (n, u01=0) run through identical expressions.  The
// window is widened to cover [n-1, n+2].
MassFunction pi_on_square(std::int64_t n, double u01, Ray ray, double q,
                          Window window = {});

// Square parametrization of the closed image.  Finite u decomposes as
// n + u01 with n = floor(u); the infinite endpoints take the limit
// values: the red end (both ends at q=1, -inf at q>1, +inf at q<1) is the
// constant function, the blue end is value(k) = w + v*delta*q^-(k+1)
// with delta = q/(q-1) (q-reflected for q<1), the entrywise limit of the
// interior formula.
MassFunction pi_param(const SquareCoord& s, Window window = {});

// Graded hom dimension functional against T^n k_x: 1 at q=1, q^-n else.
double hom_functional(std::int64_t n, double q);

// Central charge on the basis classes plus the massless atoms of a
// boundary lax stability condition.
struct LaxDescriptor {
  Complex Z_O;
  Complex Z_k;
  std::vector<ObjectAtom> massless;
  bool support_property = false;
};

LaxDescriptor lax_red_point();
LaxDescriptor lax_vertex_p0();

// |r*Z_O + m*Z_k| / sqrt(r^2 + m^2) for the class r[O_X] + m[k_x],
// in the norm making the basis orthonormal.  Requires r >= 1.
double support_ratio(std::int64_t r, std::int64_t m,
                     const LaxDescriptor& lax);

// Phase of the stable kernel object with class m[O_X] - n[k_x]:
// arg(n - m*z)/pi, in (0, 1).  Requires the chart in WMinus and
// n >= m >= 1.
double imn_phase(const ChartPoint& chart, std::int64_t m, std::int64_t n);

struct ThresholdWitness {
  double sup_below = 0.0;  // sup of phases over ratios n/m above 1+t
  double inf_above = 0.0;  // inf of phases over ratios n/m below 1+t
};

// Two-sided approximation of the phase threshold at slope 1+t by kernel
// classes with m <= depth.  Both fields converge to arg((1+t) - z)/pi;
// sup_below <= inf_above with gap O(1/depth).
ThresholdWitness threshold_witness(const ChartPoint& chart, double t,
                                   int depth);

// Lattice membership of the semistable classes r[O_X] + n[k_x]:
// (r = 0, n >= 1) or (r >= 1, n = 0) or (r >= 1, -n >= r).
bool semistable_class_predicate(std::int64_t r, std::int64_t n);

struct PhasePoint {
  std::int64_t r = 0;
  std::int64_t n = 0;
  double phase = 0.0;
};

// Phases of all semistable classes with 0 <= r <= r_max, |n| <= n_max,
// sorted by (r, n).  Torsion classes carry phase exactly 1.  With
// include_shifts the negated classes at phase+1 are added.
std::vector<PhasePoint> phase_cloud(const ChartPoint& chart,
                                    std::int64_t r_max, std::int64_t n_max,
                                    bool include_shifts = false);

// CSV with header "r,n,phase", 12 significant digits.
std::string phase_cloud_csv(const std::vector<PhasePoint>& cloud);

}  // namespace k3stab
