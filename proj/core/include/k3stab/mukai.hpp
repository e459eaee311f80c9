#pragma once

#include <cstdint>
#include <string>

#include "k3stab/errors.hpp"

namespace k3stab {

// Numerical K-group of the surface: rank-2 integral lattice with basis
// the classes of the structure sheaf and of a point.  Coordinates are
// stored in that basis written out, i.e. v = (v1, v2) means
// v = v1*[structure sheaf in degree 0 and 2] ... concretely the two
// distinguished classes are
//   class_structure() = (1, 1)   and   class_point() = (0, 1).
struct MukaiVector {
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector class_structure();  // (1, 1)
MukaiVector class_point();      // (0, 1)

// Symmetric pairing (a1,a2).(b1,b2) = a1*b2 + a2*b1.  Throws OverflowError
// if any intermediate leaves the int64 range; inputs are expected to stay
// within |coord| <= 2^31.
std::int64_t pairing(const MukaiVector& a, const MukaiVector& b);

// Reflection in the spherical class of the structure sheaf:
// v -> v - (v.class_structure()) * class_structure().  Involution; in
// coordinates (v1, v2) -> (-v2, -v1).
MukaiVector twist_class(const MukaiVector& v);

enum class ClassKind {
  Spherical,  // v.v == 2
  SemiRigid,  // v.v == 0, v != 0
  Other,
};

ClassKind classify_class(const MukaiVector& v);

// Combination r*class_structure() + n*class_point() = (r, r+n).
MukaiVector combine_class(std::int64_t r, std::int64_t n);

// The distinguished objects tracked by the engine, up to shift:
//   SkyTwist(t): t-fold spherical twist of a point sheaf (t may be negative),
//   Structure:   the structure sheaf,
//   IdealMN:     kernel of a generic surjection from m copies of the
//                structure sheaf onto n points (n >= m >= 1).
enum class AtomKind { SkyTwist, Structure, IdealMN };

struct ObjectAtom {
  AtomKind kind = AtomKind::Structure;
  std::int64_t twist = 0;  // SkyTwist only
  std::int64_t m = 0;      // IdealMN only
  std::int64_t n = 0;      // IdealMN only
  std::int64_t shift = 0;  // homological shift [s]

  ObjectAtom shifted(std::int64_t s) const;

  friend bool operator==(const ObjectAtom&, const ObjectAtom&) = default;
};

ObjectAtom atom_sky(std::int64_t twist, std::int64_t shift = 0);
ObjectAtom atom_structure(std::int64_t shift = 0);
ObjectAtom atom_ideal(std::int64_t m, std::int64_t n, std::int64_t shift = 0);

// Class in the lattice; the shift contributes a sign (-1)^s.
// SkyTwist alternates: (0,1) for even twist, (-1,0) for odd.
// IdealMN(m,n) has class (m, m-n).
MukaiVector atom_class(const ObjectAtom& atom);

std::string to_string(const MukaiVector& v);
std::string to_string(const ObjectAtom& atom);

}  // namespace k3stab
