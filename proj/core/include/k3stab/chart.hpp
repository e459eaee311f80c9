#pragma once

#include <complex>
#include <vector>

#include "k3stab/mukai.hpp"

namespace k3stab {

using Complex = std::complex<double>;

// Distance below which a chart parameter counts as sitting on the
// forbidden ray [0, +inf).
inline constexpr double eps_domain = 1e-12;
// Half-width of the real-axis wall for region classification.
inline constexpr double eps_wall = 1e-12;

enum class Region {
  WMinus,  // Im z < 0, heart = coherent sheaves
  WZero,   // Im z = 0, Re z < 0 (the wall)
  WPlus,   // Im z > 0, tilted heart
};

// Chart parameter z, constrained to C minus the ray [0, +inf).
struct ChartPoint {
  Complex z;
};

// Point of the stability manifold, recorded as (twist power, chart).
// Canonical form has region(chart) in {WMinus, WZero}.
struct StabilityPoint {
  std::int64_t twist = 0;
  ChartPoint chart;
};

// Euclidean distance from z to the ray [0, +inf).
double distance_to_forbidden_ray(Complex z);

// Classifies the chart parameter.  Wall membership is decided with
// eps_wall; points within eps_domain of the forbidden ray throw
// DomainError rather than being nudged into a region.
Region region(const ChartPoint& p);

// Central charge, normalized so Z(class_point()) = -1 and
// Z(class_structure()) = -z:  Z(v) = -v1*z - v2 + v1.
Complex central_charge(const ChartPoint& p, const MukaiVector& v);

// Phase of a (semi)stable atom at p, pinned per region:
//   WMinus: phi(k_x) = 1, phi(O_X) = arg(-z)/pi in (0,1),
//           phi(T k_x) = 1 + arg(1-z)/pi in (1,2)
//   WZero:  phi(O_X) = 0, phi(k_x) = phi(T k_x) = phi(T^-1 k_x) = 1
//           (T^-1 k_x is semistable, not stable, on the wall; it is
//           admitted here because wall filtrations contain it)
//   WPlus:  phi(k_x) = 1, phi(O_X) = arg(z)/pi - 1 in (-1,0),
//           phi(T^-1 k_x) = arg(z-1)/pi in (0,1)
// Shifts add the shift amount.  Throws NotStableError for any other atom
// (e.g. twists of a point by two or more in either direction).
double phase_of_stable(const ChartPoint& p, const ObjectAtom& atom);

// One row of the per-region table of (semi)stable atoms.
struct RegionTableEntry {
  ObjectAtom atom;
  Complex charge;
  double phase;
};
using RegionTable = std::vector<RegionTableEntry>;

// The atoms admitted by phase_of_stable in the region of p, with their
// charges and phases, shift 0.
RegionTable region_table(const ChartPoint& p);

// Rewrites a point in canonical form.  WMinus/WZero points are returned
// unchanged.  A WPlus point (k, z) becomes (k-1, w) where w is the WMinus
// chart parameter carrying the same masses: with (a,b,c) = (|z-1|, 1, |z|),
//   w = -((b/a) e^{i theta} - 1),  theta = arccos((a^2+b^2-c^2)/(2ab)).
// Idempotent.
StabilityPoint canonicalize(const StabilityPoint& p);

}  // namespace k3stab
