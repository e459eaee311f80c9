#include <doctest.h>

#include <cmath>
#include <complex>

#include "k3stab/mass.hpp"

using namespace k3stab;
using doctest::Approx;

namespace {
const ChartPoint below{{0.0, -1.0}};  // z = -i
const ChartPoint wall{{-2.0, 0.0}};
const ChartPoint above{{0.0, 1.0}};  // z = i
constexpr double tight = 1e-14;
const double root2 = std::sqrt(2.0);

MassFunction make(double q, Window w, std::vector<double> vals) {
  MassFunction f;
  f.q = q;
  f.window = w;
  f.values = std::move(vals);
  f.left = {TailKind::Affine, w.lo, f.values.front(), 0.0, 1.0};
  f.right = {TailKind::Affine, w.hi, f.values.back(), 0.0, 1.0};
  return f;
}
}  // namespace

TEST_CASE("tail descriptors extend the window") {
  const TailDescriptor affine{TailKind::Affine, 0, 10.0, 2.0, 1.0};
  CHECK(affine.value_at(0) == 10.0);
  CHECK(affine.value_at(3) == 16.0);

  const TailDescriptor geo{TailKind::Geometric, 0, 1.0, 1.0, 0.5};
  CHECK(geo.value_at(0) == 1.0);
  CHECK(geo.value_at(1) == 2.0);
  CHECK(geo.value_at(2) == Approx(2.5).epsilon(tight));
}

TEST_CASE("distinguished masses per region") {
  const MassABC m0 = mass_abc(below, 1.0);
  CHECK(m0.a == 1.0);
  CHECK(m0.b == Approx(root2).epsilon(tight));
  CHECK(m0.c == 1.0);

  const MassABC mw = mass_abc(wall, 1.0);
  CHECK(mw.a == 1.0);
  CHECK(mw.b == 3.0);
  CHECK(mw.c == 2.0);

  const MassABC mw2 = mass_abc(wall, 2.0);
  CHECK(mw2.a == 2.0);
  CHECK(mw2.b == 6.0);
  CHECK(mw2.c == 2.0);

  const MassABC mp = mass_abc(above, 1.0);
  CHECK(mp.a == Approx(root2).epsilon(tight));
  CHECK(mp.b == 1.0);
  CHECK(mp.c == 1.0);

  CHECK_THROWS_AS(mass_abc(below, 0.0), DomainError);
  CHECK_THROWS_AS(mass_abc(below, -2.0), DomainError);
}

TEST_CASE("the wall equality holds exactly for wall charts") {
  for (double q : {1.0, 2.0, 0.5, 2.7}) {
    const MassABC m = mass_abc(wall, q);
    CHECK(m.b == m.a + q * m.c);
    CHECK(triangle_check(m.a, m.b, m.c, q) == TriangleStatus::OnWall);
  }
}

TEST_CASE("weighted triangle classification") {
  CHECK(triangle_check(1.0, 2.0, 1.5) == TriangleStatus::StrictInterior);
  CHECK(triangle_check(1.0, 2.5, 1.5) == TriangleStatus::OnWall);
  CHECK(triangle_check(1.0, 3.0, 1.5) == TriangleStatus::Violated);
  // a-side and c-side equalities count as violations.
  CHECK(triangle_check(3.0, 1.0, 1.5) == TriangleStatus::Violated);
  CHECK(triangle_check(1.0, 2.0, 3.0) == TriangleStatus::Violated);

  CHECK(triangle_check(1.0, 2.0, 0.5, 2.0) == TriangleStatus::OnWall);
  CHECK(triangle_check(1.0, 2.0, 0.6, 2.0) == TriangleStatus::StrictInterior);

  // Classification is scale invariant.
  CHECK(triangle_check(1e8, 2.5e8, 1.5e8) == TriangleStatus::OnWall);
  CHECK(triangle_check(1e-8, 2e-8, 1.5e-8) == TriangleStatus::StrictInterior);

  CHECK_THROWS_AS(triangle_check(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(triangle_check(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(triangle_check(1.0, 1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("mass from filtration factors") {
  CHECK(mass_from_factors(below, 0, 1.0) == 1.0);
  CHECK(mass_from_factors(below, 0, 3.5) == 3.5);
  CHECK(mass_from_factors(below, 3, 1.0) == Approx(root2 + 2.0).epsilon(tight));
  CHECK(mass_from_factors(wall, 1, 1.0) == 3.0);
  CHECK(mass_from_factors(wall, -3, 1.0) == 7.0);
}

TEST_CASE("mass sequence below the wall at weight one") {
  const MassFunction f = mass_vector({0, below}, 1.0, {-2, 3});
  CHECK(f.window.lo == -2);
  CHECK(f.window.hi == 3);
  REQUIRE(f.values.size() == 6);
  CHECK(f.values[0] == 3.0);
  CHECK(f.values[1] == 2.0);
  CHECK(f.values[2] == 1.0);
  CHECK(f.values[3] == Approx(root2).epsilon(tight));
  CHECK(f.values[4] == Approx(1.0 + root2).epsilon(tight));
  CHECK(f.values[5] == Approx(2.0 + root2).epsilon(tight));

  // Affine tails reproduce the closed form outside the window.
  CHECK(f.left.kind == TailKind::Affine);
  CHECK(f.value_at(-5) == 6.0);
  CHECK(f.value_at(10) == Approx(9.0 + root2).epsilon(tight));
}

TEST_CASE("mass sequence on the wall at weight one") {
  const MassFunction f = mass_vector({0, wall}, 1.0, {-1, 3});
  CHECK(f.value_at(-1) == 3.0);
  CHECK(f.value_at(0) == 1.0);
  CHECK(f.value_at(1) == 3.0);
  CHECK(f.value_at(2) == 5.0);
}

TEST_CASE("window widening covers the kink span") {
  const MassFunction f = mass_vector({0, below}, 1.0, {0, 0});
  CHECK(f.window.lo == -1);
  CHECK(f.window.hi == 2);

  const MassFunction g = mass_vector({5, below}, 1.0, {-2, 3});
  CHECK(g.window.lo == -2);
  CHECK(g.window.hi == 7);
}

TEST_CASE("mass sequence agrees with the factor sums") {
  for (double q : {1.0, 0.5, 2.7}) {
    const MassFunction f = mass_vector({0, below}, q, {-4, 4});
    const MassFunction g = mass_vector({0, wall}, q, {-4, 4});
    for (std::int64_t n = -10; n <= 10; ++n) {
      const double direct = mass_from_factors(below, n, q);
      CHECK(f.value_at(n) == Approx(direct).epsilon(1e-12));
      const double direct_wall = mass_from_factors(wall, n, q);
      CHECK(g.value_at(n) == Approx(direct_wall).epsilon(1e-12));
    }
  }
}

TEST_CASE("twist acts by index translation") {
  const MassFunction f = mass_vector({0, below}, 2.7, {-12, 12});
  const MassFunction g = mass_vector({1, below}, 2.7, {-11, 13});
  const MassFunction fs = f.shifted(1);
  CHECK(fs.window.lo == g.window.lo);
  CHECK(fs.window.hi == g.window.hi);
  for (std::int64_t k = g.window.lo; k <= g.window.hi; ++k) {
    CHECK(fs.value_at(k) == g.value_at(k));
  }
}

TEST_CASE("mass sequence above the wall matches its canonical form") {
  const MassFunction f = mass_vector({0, above}, 1.0, {-4, 4});
  CHECK(f.value_at(0) == 1.0);
  CHECK(f.value_at(-1) == Approx(root2).epsilon(tight));
  CHECK(f.value_at(1) == 2.0);
  CHECK(f.value_at(-2) == Approx(root2 + 1.0).epsilon(tight));

  const StabilityPoint canon = canonicalize({0, above});
  const MassFunction g = mass_vector(canon, 1.0, {-4, 4});
  CHECK(approx_equal(f, g));
}

TEST_CASE("projective comparison") {
  const MassFunction f = mass_vector({0, below}, 1.0, {-4, 4});
  MassFunction g = f;
  for (double& v : g.values) v *= 3.0;
  g.left.start *= 3.0;
  g.left.step *= 3.0;
  g.right.start *= 3.0;
  g.right.step *= 3.0;
  CHECK(approx_equal(f, g));

  g.values[4] += 0.01;
  CHECK(!approx_equal(f, g));

  const MassFunction far = mass_vector({40, below}, 1.0, {38, 42});
  CHECK(!approx_equal(f, far));
}

TEST_CASE("wall inversion is closed form for every weight") {
  const InversionResult r = invert_cell(1.0, 3.0, 2.0, Cell::I0, 1.0);
  CHECK(r.chart.z == Complex(-2.0, 0.0));
  CHECK(r.residual <= 1e-12);

  const InversionResult r2 = invert_cell(2.0, 6.0, 2.0, Cell::I0, 2.0);
  CHECK(r2.chart.z == Complex(-2.0, 0.0));

  CHECK_THROWS_AS(invert_cell(1.0, 2.0, 2.0, Cell::I0, 1.0),
                  TriangleViolation);
}

TEST_CASE("two-cell inversion recovers the chart at weight one") {
  const ChartPoint z0{{-0.7, -1.3}};
  const MassABC m = mass_abc(z0, 1.0);
  const InversionResult r = invert_cell(m.a, m.b, m.c, Cell::Delta0, 1.0);
  CHECK(std::abs(r.chart.z - z0.z) <= 1e-12);
  CHECK(r.residual <= 1e-12);

  const ChartPoint z1{{-0.4, 0.9}};
  const MassABC mp = mass_abc(z1, 1.0);
  const InversionResult rp =
      invert_cell(mp.a, mp.b, mp.c, Cell::DeltaMinus1, 1.0);
  CHECK(std::abs(rp.chart.z - z1.z) <= 1e-12);
}

TEST_CASE("two-cell inversion recovers the chart at other weights") {
  for (double q : {0.5, 2.0, 5.0}) {
    const ChartPoint z0{{-0.7, -1.3}};
    const MassABC m = mass_abc(z0, q);
    const InversionResult r = invert_cell(m.a, m.b, m.c, Cell::Delta0, q);
    CHECK(std::abs(r.chart.z - z0.z) <= 1e-7);
    CHECK(r.residual <= 1e-7);
    CHECK(region(r.chart) == Region::WMinus);

    const ChartPoint z1{{-0.3, 1.1}};
    const MassABC mp = mass_abc(z1, q);
    const InversionResult rp =
        invert_cell(mp.a, mp.b, mp.c, Cell::DeltaMinus1, q);
    CHECK(std::abs(rp.chart.z - z1.z) <= 1e-7);
    CHECK(region(rp.chart) == Region::WPlus);
  }
}

TEST_CASE("two-cell inversion rejects triples outside the cell") {
  CHECK_THROWS_AS(invert_cell(1.0, 2.5, 1.5, Cell::Delta0, 1.0),
                  TriangleViolation);
  CHECK_THROWS_AS(invert_cell(1.0, 5.0, 1.0, Cell::Delta0, 1.0),
                  TriangleViolation);
  CHECK_THROWS_AS(invert_cell(0.0, 1.0, 1.0, Cell::Delta0, 1.0), DomainError);
  CHECK_THROWS_AS(invert_cell(1.0, 1.0, 1.0, Cell::Delta0, 0.0), DomainError);
}

TEST_CASE("cell identification from mass windows") {
  CHECK(classify_mass_point(mass_vector({0, below}, 1.0, {-8, 8})) ==
        CellId{CellId::Kind::Delta, 0});
  CHECK(classify_mass_point(mass_vector({3, below}, 1.0, {-8, 8})) ==
        CellId{CellId::Kind::Delta, 3});
  CHECK(classify_mass_point(mass_vector({0, below}, 2.0, {-8, 8})) ==
        CellId{CellId::Kind::Delta, 0});
  CHECK(classify_mass_point(mass_vector({0, wall}, 1.0, {-8, 8})) ==
        CellId{CellId::Kind::Interval, 0});
  CHECK(classify_mass_point(mass_vector({-2, wall}, 2.0, {-8, 8})) ==
        CellId{CellId::Kind::Interval, -2});
  CHECK(classify_mass_point(mass_vector({0, above}, 1.0, {-8, 8})) ==
        CellId{CellId::Kind::Delta, -1});
}

TEST_CASE("cell identification of boundary patterns") {
  CHECK(classify_mass_point(make(1.0, {-2, 2}, {2, 1, 0, 1, 2})) ==
        CellId{CellId::Kind::VertexP, 0});
  CHECK(classify_mass_point(make(1.0, {-2, 2}, {5, 5, 5, 5, 5})) ==
        CellId{CellId::Kind::RedPoint, 0});
  CHECK(classify_mass_point(make(2.0, {-2, 2}, {16, 8, 4, 2, 1})) ==
        CellId{CellId::Kind::BlueQHom, 0});
  CHECK(classify_mass_point(make(1.0, {-2, 2}, {2.7, 1.7, 0.7, 0.3, 1.3})) ==
        CellId{CellId::Kind::EdgePP, 0});
  CHECK(classify_mass_point(make(1.0, {-2, 2}, {1.0, 2.0, 1.5, 2.2, 3.0})) ==
        CellId{CellId::Kind::Outside, 0});
  CHECK(classify_mass_point(make(1.0, {-2, 2}, {1, 0, 1, 0, 1})) ==
        CellId{CellId::Kind::Outside, 0});
}

TEST_CASE("cell identification needs context") {
  CHECK_THROWS_AS(classify_mass_point(make(1.0, {0, 3}, {3, 2, 1, 2})),
                  AmbiguousWindow);
  CHECK_THROWS_AS(classify_mass_point(make(1.0, {-2, 2}, {4, 3, 2, 1, 0})),
                  AmbiguousWindow);
}

TEST_CASE("cell names") {
  CHECK(to_string(CellId{CellId::Kind::Delta, 3}) == "Delta(3)");
  CHECK(to_string(CellId{CellId::Kind::Interval, -2}) == "Interval(-2)");
  CHECK(to_string(CellId{CellId::Kind::VertexP, 0}) == "VertexP(0)");
  CHECK(to_string(CellId{CellId::Kind::RedPoint, 0}) == "RedPoint");
  CHECK(to_string(CellId{CellId::Kind::BlueQHom, 0}) == "BlueQHom");
  CHECK(to_string(CellId{CellId::Kind::EdgePP, 1}) == "EdgePP(1)");
  CHECK(to_string(CellId{CellId::Kind::Outside, 0}) == "Outside");
}
