#pragma once

#include <stdexcept>
#include <string>

namespace k3stab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chart parameter on or too close to the forbidden ray [0, +inf).
struct DomainError : Error {
  using Error::Error;
};

// Integer arithmetic on lattice vectors left the supported range.
struct OverflowError : Error {
  using Error::Error;
};

// Atom has no (semi)stable phase in the requested region.
struct NotStableError : Error {
  using Error::Error;
};

// A constructed filtration failed the decreasing-phase check.
struct PhaseOrderViolation : Error {
  using Error::Error;
};

// Mass triple violates the (q-)triangle inequalities required by a cell.
struct TriangleViolation : Error {
  using Error::Error;
};

// Iterative inversion did not reach the requested residual.
struct NoConvergence : Error {
  using Error::Error;
};

// Window too narrow to identify a cell pattern.
struct AmbiguousWindow : Error {
  using Error::Error;
};

}  // namespace k3stab
