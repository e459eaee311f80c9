#pragma once

#include <cstdint>
#include <vector>

#include "k3stab/chart.hpp"

namespace k3stab {

// One filtration factor together with its phase at the chart point the
// list was computed for.
struct Factor {
  ObjectAtom atom;
  double phase = 0.0;
};

using FactorList = std::vector<Factor>;

// Factor list of the n-fold twist of a point sheaf, by the closed forms:
//   WMinus: n in {0,1}: stable, the object itself
//           n >= 2:   [T k_x, O_X, O_X[-1], ..., O_X[-n+2]]
//           n <= -1:  [O_X[-n], ..., O_X[1], k_x]
//   WZero:  n in {-1,0,1}: semistable, the object itself
//           n >= 2:   as WMinus
//           n <= -2:  [O_X[-n], ..., O_X[2], T^-1 k_x]
// Factors are listed by strictly decreasing phase; phases are evaluated
// at the given chart point, whose region must match the region argument.
FactorList hn_closed_form(const ChartPoint& p, Region reg, std::int64_t n);

// Same lists, built without the closed forms: starting from the stable
// base cases, the exact triangles
//   T^{n-1} k_x -> T^n k_x -> O_X[-n+2]   (ascending)
//   O_X[-n]     -> T^n k_x -> T^{n+1} k_x (descending)
// append/prepend one factor per step.  Each step checks the strictly
// decreasing phase order and throws PhaseOrderViolation on failure.
// Chart must be in WMinus or WZero.
FactorList hn_oracle(const ChartPoint& p, std::int64_t n);

// Largest and smallest factor phase of the n-fold twist at p.
struct PhaseSpread {
  double upper = 0.0;
  double lower = 0.0;

  double width() const { return upper - lower; }
};

PhaseSpread phase_spread(const ChartPoint& p, std::int64_t n);

// Reduces T^n k_x to a semistable twist by repeatedly applying the twist
// (or its inverse) chosen by which end of the filtration is a shift of
// the structure sheaf.  Returns the number of steps and the direction
// used (+1 when ascending twists were applied, -1 when descending;
// +1 for inputs that are already semistable).  The phase spread strictly
// decreases at every step; violation throws PhaseOrderViolation.
struct TwistReduction {
  std::int64_t steps = 0;
  int direction = +1;
};

TwistReduction twist_reduce(const ChartPoint& p, std::int64_t n);

}  // namespace k3stab
