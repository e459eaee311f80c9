#include <doctest.h>

#include "k3stab/hn.hpp"

using namespace k3stab;
using doctest::Approx;

namespace {
const ChartPoint below{{0.0, -1.0}};  // z = -i
const ChartPoint wall{{-2.0, 0.0}};
}  // namespace

TEST_CASE("semistable twists are their own filtration") {
  for (std::int64_t n : {0, 1}) {
    const FactorList fs = hn_oracle(below, n);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].atom == atom_sky(n));
  }
  for (std::int64_t n : {-1, 0, 1}) {
    const FactorList fs = hn_oracle(wall, n);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].atom == atom_sky(n));
    CHECK(fs[0].phase == 1.0);
  }
  // T^-1 k_x is unstable below the wall: two factors, not one.
  CHECK(hn_oracle(below, -1).size() == 2);
}

TEST_CASE("ascending filtration below the wall") {
  const FactorList fs = hn_oracle(below, 3);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].atom == atom_sky(1));
  CHECK(fs[1].atom == atom_structure());
  CHECK(fs[2].atom == atom_structure(-1));
  CHECK(fs[0].phase == Approx(1.25).epsilon(1e-15));
  CHECK(fs[1].phase == 0.5);
  CHECK(fs[2].phase == -0.5);
}

TEST_CASE("descending filtration below the wall") {
  const FactorList fs = hn_oracle(below, -2);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].atom == atom_structure(2));
  CHECK(fs[1].atom == atom_structure(1));
  CHECK(fs[2].atom == atom_sky(0));
  CHECK(fs[0].phase == 2.5);
  CHECK(fs[2].phase == 1.0);
}

TEST_CASE("descending filtration on the wall ends in the inverse twist") {
  const FactorList fs = hn_oracle(wall, -3);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].atom == atom_structure(3));
  CHECK(fs[1].atom == atom_structure(2));
  CHECK(fs[2].atom == atom_sky(-1));
  CHECK(fs[0].phase == 3.0);
  CHECK(fs[1].phase == 2.0);
  CHECK(fs[2].phase == 1.0);
}

TEST_CASE("oracle agrees with the closed forms factor by factor") {
  for (std::int64_t n = -8; n <= 8; ++n) {
    const FactorList a = hn_oracle(below, n);
    const FactorList b = hn_closed_form(below, Region::WMinus, n);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].atom == b[i].atom);
      CHECK(a[i].phase == b[i].phase);
    }
    const FactorList c = hn_oracle(wall, n);
    const FactorList d = hn_closed_form(wall, Region::WZero, n);
    REQUIRE(c.size() == d.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i].atom == d[i].atom);
      CHECK(c[i].phase == d[i].phase);
    }
  }
}

TEST_CASE("closed forms demand the matching region") {
  CHECK_THROWS_AS(hn_closed_form(below, Region::WZero, 3), DomainError);
  CHECK_THROWS_AS(hn_closed_form({{0.0, 1.0}}, Region::WPlus, 3), DomainError);
  CHECK_THROWS_AS(hn_oracle({{0.0, 1.0}}, 3), DomainError);
}

TEST_CASE("phase spread widens with the twist power") {
  const PhaseSpread one = phase_spread(below, 0);
  CHECK(one.upper == 1.0);
  CHECK(one.lower == 1.0);
  CHECK(one.width() == 0.0);

  const PhaseSpread three = phase_spread(below, 3);
  CHECK(three.upper == Approx(1.25).epsilon(1e-15));
  CHECK(three.lower == -0.5);

  CHECK(phase_spread(below, 9).width() > phase_spread(below, 5).width());
}

TEST_CASE("twist reduction counts the steps to a semistable twist") {
  const TwistReduction up = twist_reduce(below, 5);
  CHECK(up.steps == 4);
  CHECK(up.direction == -1);

  const TwistReduction down = twist_reduce(below, -3);
  CHECK(down.steps == 3);
  CHECK(down.direction == +1);

  const TwistReduction still_ = twist_reduce(below, 1);
  CHECK(still_.steps == 0);
  CHECK(still_.direction == +1);

  const TwistReduction wall_down = twist_reduce(wall, -3);
  CHECK(wall_down.steps == 2);
  CHECK(wall_down.direction == +1);

  const TwistReduction wall_up = twist_reduce(wall, 4);
  CHECK(wall_up.steps == 3);
  CHECK(wall_up.direction == -1);
}
