#include "k3stab/hn.hpp"

#include <string>

namespace k3stab {

namespace {

Factor make_factor(const ChartPoint& p, const ObjectAtom& atom) {
  return {atom, phase_of_stable(p, atom)};
}

void check_decreasing(const FactorList& fs) {
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (!(fs[i - 1].phase > fs[i].phase)) {
      throw PhaseOrderViolation(
          "factors " + to_string(fs[i - 1].atom) + " and " +
          to_string(fs[i].atom) + " are not in decreasing phase order");
    }
  }
}

bool semistable_twist(Region reg, std::int64_t n) {
  if (reg == Region::WZero) return n >= -1 && n <= 1;
  return n == 0 || n == 1;  // WMinus
}

}  // namespace

FactorList hn_closed_form(const ChartPoint& p, Region reg, std::int64_t n) {
  if (region(p) != reg) {
    throw DomainError("chart point does not lie in the requested region");
  }
  if (reg == Region::WPlus) {
    throw DomainError("closed forms are stated for canonical regions only");
  }

  FactorList fs;
  if (semistable_twist(reg, n)) {
    fs.push_back(make_factor(p, atom_sky(n)));
  } else if (n >= 2) {
    fs.push_back(make_factor(p, atom_sky(1)));
    for (std::int64_t i = 0; i >= -n + 2; --i) {
      fs.push_back(make_factor(p, atom_structure(i)));
    }
  } else if (reg == Region::WMinus) {  // n <= -1
    for (std::int64_t i = -n; i >= 1; --i) {
      fs.push_back(make_factor(p, atom_structure(i)));
    }
    fs.push_back(make_factor(p, atom_sky(0)));
  } else {  // WZero, n <= -2
    for (std::int64_t i = -n; i >= 2; --i) {
      fs.push_back(make_factor(p, atom_structure(i)));
    }
    fs.push_back(make_factor(p, atom_sky(-1)));
  }
  check_decreasing(fs);
  return fs;
}

FactorList hn_oracle(const ChartPoint& p, std::int64_t n) {
  const Region reg = region(p);
  if (reg == Region::WPlus) {
    throw DomainError("oracle runs on canonical regions only");
  }

  if (semistable_twist(reg, n)) {
    return {make_factor(p, atom_sky(n))};
  }

  if (n >= 2) {
    // Ascend from the stable single twist, appending the cone factor
    // O_X[-m+2] of each step m-1 -> m at the bottom of the list.
    FactorList fs = {make_factor(p, atom_sky(1))};
    for (std::int64_t m = 2; m <= n; ++m) {
      Factor bottom = make_factor(p, atom_structure(-m + 2));
      if (!(fs.back().phase > bottom.phase)) {
        throw PhaseOrderViolation("ascending step " + std::to_string(m) +
                                  " breaks the phase order");
      }
      fs.push_back(bottom);
    }
    return fs;
  }

  // Descend, prepending the fibre factor O_X[-m] of each step m+1 -> m
  // at the top of the list.
  const std::int64_t base = (reg == Region::WZero) ? -1 : 0;
  FactorList fs = {make_factor(p, atom_sky(base))};
  for (std::int64_t m = base - 1; m >= n; --m) {
    Factor top = make_factor(p, atom_structure(-m));
    if (!(top.phase > fs.front().phase)) {
      throw PhaseOrderViolation("descending step " + std::to_string(m) +
                                " breaks the phase order");
    }
    fs.insert(fs.begin(), top);
  }
  return fs;
}

PhaseSpread phase_spread(const ChartPoint& p, std::int64_t n) {
  const FactorList fs = hn_oracle(p, n);
  return {fs.front().phase, fs.back().phase};
}

TwistReduction twist_reduce(const ChartPoint& p, std::int64_t n) {
  TwistReduction out;
  std::int64_t m = n;
  FactorList fs = hn_oracle(p, m);
  double width = fs.front().phase - fs.back().phase;
  while (fs.size() > 1) {
    if (fs.back().atom.kind == AtomKind::Structure) {
      out.direction = -1;
      m -= 1;
    } else {
      out.direction = +1;
      m += 1;
    }
    out.steps += 1;
    fs = hn_oracle(p, m);
    const double next_width = fs.front().phase - fs.back().phase;
    if (!(next_width < width)) {
      throw PhaseOrderViolation("twist reduction failed to shrink the spread");
    }
    width = next_width;
  }
  return out;
}

}  // namespace k3stab
