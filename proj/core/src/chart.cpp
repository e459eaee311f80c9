#include "k3stab/chart.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace k3stab {

namespace {

constexpr double pi = std::numbers::pi;

[[noreturn]] void throw_forbidden(Complex z) {
  throw DomainError("chart parameter " + std::to_string(z.real()) + "+" +
                    std::to_string(z.imag()) +
                    "i lies on the forbidden ray [0, +inf)");
}

}  // namespace

double distance_to_forbidden_ray(Complex z) {
  if (z.real() >= 0.0) return std::abs(z.imag());
  return std::abs(z);
}

Region region(const ChartPoint& p) {
  if (distance_to_forbidden_ray(p.z) < eps_domain) throw_forbidden(p.z);
  const double im = p.z.imag();
  if (std::abs(im) <= eps_wall) {
    // distance check above already rejected Re >= 0 on the axis
    return Region::WZero;
  }
  return im < 0.0 ? Region::WMinus : Region::WPlus;
}

Complex central_charge(const ChartPoint& p, const MukaiVector& v) {
  const double r = static_cast<double>(v.v1);
  const double s = static_cast<double>(v.v2);
  return -r * p.z - Complex(s - r, 0.0);
}

namespace {

double phase_unshifted(const ChartPoint& p, Region reg, const ObjectAtom& atom) {
  switch (reg) {
    case Region::WMinus:
      if (atom.kind == AtomKind::Structure) return std::arg(-p.z) / pi;
      if (atom.kind == AtomKind::SkyTwist && atom.twist == 0) return 1.0;
      if (atom.kind == AtomKind::SkyTwist && atom.twist == 1) {
        return 1.0 + std::arg(Complex(1.0, 0.0) - p.z) / pi;
      }
      break;
    case Region::WZero:
      if (atom.kind == AtomKind::Structure) return 0.0;
      if (atom.kind == AtomKind::SkyTwist && atom.twist >= -1 && atom.twist <= 1) {
        return 1.0;
      }
      break;
    case Region::WPlus:
      if (atom.kind == AtomKind::Structure) return std::arg(p.z) / pi - 1.0;
      if (atom.kind == AtomKind::SkyTwist && atom.twist == 0) return 1.0;
      if (atom.kind == AtomKind::SkyTwist && atom.twist == -1) {
        return std::arg(p.z - Complex(1.0, 0.0)) / pi;
      }
      break;
  }
  throw NotStableError("atom " + to_string(atom) +
                       " has no semistable phase in this region");
}

}  // namespace

double phase_of_stable(const ChartPoint& p, const ObjectAtom& atom) {
  const Region reg = region(p);
  ObjectAtom base = atom;
  base.shift = 0;
  return phase_unshifted(p, reg, base) + static_cast<double>(atom.shift);
}

RegionTable region_table(const ChartPoint& p) {
  const Region reg = region(p);
  std::vector<ObjectAtom> atoms;
  switch (reg) {
    case Region::WMinus:
      atoms = {atom_sky(0), atom_structure(), atom_sky(1)};
      break;
    case Region::WZero:
      atoms = {atom_sky(0), atom_structure(), atom_sky(1), atom_sky(-1)};
      break;
    case Region::WPlus:
      atoms = {atom_sky(0), atom_structure(), atom_sky(-1)};
      break;
  }
  RegionTable table;
  table.reserve(atoms.size());
  for (const ObjectAtom& a : atoms) {
    table.push_back({a, central_charge(p, atom_class(a)),
                     phase_unshifted(p, reg, a)});
  }
  return table;
}

StabilityPoint canonicalize(const StabilityPoint& p) {
  if (region(p.chart) != Region::WPlus) return p;
  const Complex z = p.chart.z;
  const double a = std::abs(z - Complex(1.0, 0.0));
  const double b = 1.0;
  const double c = std::abs(z);
  // Triangle sides (a, b, c) are the masses of the three basic atoms after
  // one inverse twist; the cosine rule recovers the WMinus parameter.
  double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
  cosine = std::clamp(cosine, -1.0, 1.0);
  const double theta = std::acos(cosine);
  const Complex w = -((b / a) * std::polar(1.0, theta) - Complex(1.0, 0.0));
  return {p.twist - 1, {w}};
}

}  // namespace k3stab
