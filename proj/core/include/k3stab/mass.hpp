#pragma once

#include <cstdint>
#include <vector>

#include "k3stab/chart.hpp"
#include "k3stab/hn.hpp"

namespace k3stab {

// Tolerance for classifying the wall equality b = a + q*c.
inline constexpr double eps_triangle = 1e-12;
// Projective comparison tolerance after sup-normalization.
inline constexpr double eps_projective = 1e-9;

// Inclusive index window [lo, hi].
struct Window {
  std::int64_t lo = -16;
  std::int64_t hi = 16;

  std::int64_t width() const { return hi - lo + 1; }
};

enum class TailKind { Affine, Geometric };

// Closed form for values beyond one edge of the window.  `start` is the
// value at `anchor` (the edge index); moving outward, consecutive
// increments begin at `step` and are multiplied by `ratio` each step
// (ratio 1 for the affine case).
struct TailDescriptor {
  TailKind kind = TailKind::Affine;
  std::int64_t anchor = 0;
  double start = 0.0;
  double step = 0.0;
  double ratio = 1.0;

  // Value at |distance| indices beyond the anchor, distance >= 0.
  double value_at(std::int64_t distance) const;
};

// Sequence of masses of the twist family, indexed by twist power, with
// explicit window values and two tail descriptors so any index is
// computable.  Values are projective: any positive rescaling represents
// the same point.
struct MassFunction {
  double q = 1.0;
  Window window;
  std::vector<double> values;
  TailDescriptor left;
  TailDescriptor right;

  double value_at(std::int64_t index) const;
  double sup() const;                 // max over the window
  MassFunction normalized() const;    // divided by sup
  MassFunction shifted(std::int64_t offset) const;  // index translation
};

// Proportionality on the common window after sup-normalization.
bool approx_equal(const MassFunction& f, const MassFunction& g,
                  double tol = eps_projective);

// Masses of the three distinguished atoms at p with weight q:
//   WMinus / WZero: a, b, c = masses of (k_x, T k_x, O_X)
//   WPlus:          a, b, c = masses of (T^-1 k_x, k_x, O_X)
// Each mass is |Z| * q^phase with the region phases; a (WMinus/WZero)
// and b (WPlus) always equal q.  On the wall, b = a + q*c exactly.
struct MassABC {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

MassABC mass_abc(const ChartPoint& p, double q = 1.0);

enum class TriangleStatus { StrictInterior, OnWall, Violated };

// Checks the weighted triangle inequalities in the convention where the
// wall is b = a + q*c; the other two sides (a < b + c, c < a + b/q) must
// be strict.  Classification uses eps_triangle relative to the sides.
TriangleStatus triangle_check(double a, double b, double c, double q = 1.0);

// Mass of the n-fold point twist at p computed directly from the oracle
// filtration: sum of |Z(factor)| * q^phase(factor).  Canonical regions.
double mass_from_factors(const ChartPoint& p, std::int64_t n, double q = 1.0);

// Mass sequence of the twist family at a stability point.  The closed
// forms are evaluated at twist 0 and the indices shifted by p.twist.
// WPlus points are evaluated directly through the twist-equivariant
// form (kink one index to the left), which keeps canonicalization
// consistency a genuine cross-check.  The window is widened if needed so
// that it covers the kink, keeping the tails valid at every index.
MassFunction mass_vector(const StabilityPoint& p, double q = 1.0,
                         Window window = {});

enum class Cell {
  Delta0,       // open two-cell between walls 0 and 1, heart side
  DeltaMinus1,  // its image under the inverse twist, tilted side
  I0,           // the wall itself
};

struct InversionResult {
  ChartPoint chart;
  double residual = 0.0;  // log-ratio residual of the final iterate
  int iterations = 0;
};

// Recovers the chart parameter from a mass triple.
//   Delta0:      (a,b,c) masses of (k_x, T k_x, O_X), strict inequalities,
//                target in WMinus
//   DeltaMinus1: (a,b,c) masses of (T^-1 k_x, k_x, O_X), strict
//                inequalities in the shifted convention, target in WPlus
//   I0:          wall triple b = a + q*c, target on the negative reals
// q = 1 uses the arccos closed forms; I0 is closed-form for every q
// (z = -c*q/a); the remaining q != 1 cells run a damped Newton iteration
// on (log r, theta) with analytic Jacobian, falling back to bisection.
// Throws TriangleViolation when the triple is not in the stated cell and
// NoConvergence if the iteration fails.
InversionResult invert_cell(double a, double b, double c, Cell cell,
                            double q = 1.0);

struct CellId {
  enum class Kind {
    Delta,     // index = left kink index
    Interval,  // index = wall index
    VertexP,   // index = zero index
    RedPoint,
    BlueQHom,
    EdgePP,    // index = n for the segment between vertices n and n+1
    Outside,
  };

  Kind kind = Kind::Outside;
  std::int64_t index = 0;

  friend bool operator==(const CellId&, const CellId&) = default;
};

// Identifies which cell a mass window belongs to by pattern matching, in
// the order: RedPoint, BlueQHom, VertexP, Delta/Interval (one fit, wall
// equality selects Interval), EdgePP, Outside.  Ties broken by smallest
// index.  Windows narrower than 5 indices, or zeros without radius-2
// context, throw AmbiguousWindow.
CellId classify_mass_point(const MassFunction& f);

std::string to_string(const CellId& id);

}  // namespace k3stab
