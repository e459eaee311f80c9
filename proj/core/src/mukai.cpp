#include "k3stab/mukai.hpp"

namespace k3stab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("lattice pairing: product overflows int64");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("lattice pairing: sum overflows int64");
  }
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) {
    throw OverflowError("lattice reflection: negation overflows int64");
  }
  return -a;
}

}  // namespace

MukaiVector class_structure() { return {1, 1}; }
MukaiVector class_point() { return {0, 1}; }

std::int64_t pairing(const MukaiVector& a, const MukaiVector& b) {
  return checked_add(checked_mul(a.v1, b.v2), checked_mul(a.v2, b.v1));
}

MukaiVector twist_class(const MukaiVector& v) {
  return {checked_neg(v.v2), checked_neg(v.v1)};
}

ClassKind classify_class(const MukaiVector& v) {
  const std::int64_t self = pairing(v, v);
  if (self == 2) return ClassKind::Spherical;
  if (self == 0 && !(v.v1 == 0 && v.v2 == 0)) return ClassKind::SemiRigid;
  return ClassKind::Other;
}

MukaiVector combine_class(std::int64_t r, std::int64_t n) {
  return {r, checked_add(r, n)};
}

ObjectAtom ObjectAtom::shifted(std::int64_t s) const {
  ObjectAtom out = *this;
  out.shift = checked_add(out.shift, s);
  return out;
}

ObjectAtom atom_sky(std::int64_t twist, std::int64_t shift) {
  ObjectAtom a;
  a.kind = AtomKind::SkyTwist;
  a.twist = twist;
  a.shift = shift;
  return a;
}

ObjectAtom atom_structure(std::int64_t shift) {
  ObjectAtom a;
  a.kind = AtomKind::Structure;
  a.shift = shift;
  return a;
}

ObjectAtom atom_ideal(std::int64_t m, std::int64_t n, std::int64_t shift) {
  ObjectAtom a;
  a.kind = AtomKind::IdealMN;
  a.m = m;
  a.n = n;
  a.shift = shift;
  return a;
}

MukaiVector atom_class(const ObjectAtom& atom) {
  MukaiVector base;
  switch (atom.kind) {
    case AtomKind::SkyTwist:
      // Reflection swaps (0,1) <-> (-1,0); only the parity of the twist
      // count survives on classes.
      base = (atom.twist % 2 == 0) ? MukaiVector{0, 1} : MukaiVector{-1, 0};
      break;
    case AtomKind::Structure:
      base = class_structure();
      break;
    case AtomKind::IdealMN:
      base = {atom.m, checked_add(atom.m, checked_neg(atom.n))};
      break;
  }
  const bool odd_shift = (atom.shift % 2) != 0;
  if (odd_shift) {
    base = {checked_neg(base.v1), checked_neg(base.v2)};
  }
  return base;
}

std::string to_string(const MukaiVector& v) {
  return "(" + std::to_string(v.v1) + ", " + std::to_string(v.v2) + ")";
}

std::string to_string(const ObjectAtom& atom) {
  std::string body;
  switch (atom.kind) {
    case AtomKind::SkyTwist:
      if (atom.twist == 0) {
        body = "k_x";
      } else if (atom.twist == 1) {
        body = "T k_x";
      } else {
        body = "T^" + std::to_string(atom.twist) + " k_x";
      }
      break;
    case AtomKind::Structure:
      body = "O_X";
      break;
    case AtomKind::IdealMN:
      body = "I_{" + std::to_string(atom.m) + "," + std::to_string(atom.n) + "}";
      break;
  }
  if (atom.shift != 0) {
    body += "[" + std::to_string(atom.shift) + "]";
  }
  return body;
}

}  // namespace k3stab
