#include <doctest.h>

#include <cmath>
#include <limits>

#include "k3stab/boundary.hpp"

using namespace k3stab;
using doctest::Approx;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double tight = 1e-14;
const double pi_d = 3.14159265358979323846;
}  // namespace

TEST_CASE("massless vertex function") {
  const MassFunction p0 = vertex_p(0, 1.0, {-2, 2});
  REQUIRE(p0.values.size() == 5);
  CHECK(p0.values[0] == 2.0);
  CHECK(p0.values[1] == 1.0);
  CHECK(p0.values[2] == 0.0);
  CHECK(p0.values[3] == 1.0);
  CHECK(p0.values[4] == 2.0);
  CHECK(p0.value_at(5) == 5.0);
  CHECK(p0.value_at(-7) == 7.0);

  const MassFunction p0q = vertex_p(0, 2.0, {-2, 2});
  CHECK(p0q.values[0] == 3.0);
  CHECK(p0q.values[1] == 1.0);
  CHECK(p0q.values[2] == 0.0);
  CHECK(p0q.values[3] == 1.0);
  CHECK(p0q.values[4] == 1.5);
  CHECK(p0q.value_at(3) == Approx(1.75).epsilon(tight));
  CHECK(p0q.value_at(5) == Approx(1.9375).epsilon(tight));
  CHECK(p0q.value_at(-4) == Approx(15.0).epsilon(tight));

  // The window widens to cover the apex.
  const MassFunction p3 = vertex_p(3, 1.0, {-2, 2});
  CHECK(p3.window.hi == 4);
  CHECK(p3.value_at(3) == 0.0);

  CHECK_THROWS_AS(vertex_p(0, 0.0), DomainError);
}

TEST_CASE("constant vertex function") {
  const MassFunction q = vertex_q({-3, 3});
  REQUIRE(q.values.size() == 7);
  for (double v : q.values) CHECK(v == 1.0);
  CHECK(q.value_at(100) == 1.0);
  CHECK(q.value_at(-100) == 1.0);
}

TEST_CASE("square formula hits the documented samples") {
  const MassFunction f = pi_param({0.0, {1.0, 0.0}, 1.0}, {-2, 2});
  const MassFunction p0 = vertex_p(0, 1.0, {-2, 2});
  REQUIRE(f.values.size() == p0.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    CHECK(f.values[i] == p0.values[i]);
  }

  const MassFunction g = pi_param({0.5, {1.0, 1.0}, 1.0}, {-2, 2});
  CHECK(g.value_at(-2) == 3.5);
  CHECK(g.value_at(-1) == 2.5);
  CHECK(g.value_at(0) == 1.5);
  CHECK(g.value_at(1) == 1.5);
  CHECK(g.value_at(2) == 2.5);
}

TEST_CASE("adjacent squares agree bitwise on the seam") {
  const Ray ray{0.7, 0.3};
  for (double q : {1.0, 2.0, 0.5}) {
    for (std::int64_t n : {-3LL, 0LL, 2LL}) {
      const MassFunction left = pi_on_square(n, 1.0, ray, q, {-8, 8});
      const MassFunction right = pi_on_square(n + 1, 0.0, ray, q, {-8, 8});
      REQUIRE(left.window.lo == right.window.lo);
      REQUIRE(left.window.hi == right.window.hi);
      for (std::size_t i = 0; i < left.values.size(); ++i) {
        CHECK(left.values[i] == right.values[i]);
      }
    }
  }
}

TEST_CASE("square translation is ray rescaling") {
  const double q = 2.0;
  const MassFunction base = pi_on_square(0, 0.3, {1.0, 0.5}, q, {-8, 8});
  const MassFunction moved = pi_on_square(1, 0.3, {q * 1.0, 0.5}, q, {-7, 9});
  CHECK(approx_equal(base.shifted(1), moved, 1e-12));
}

TEST_CASE("infinite ends of the parameter square") {
  // Red ends: the constant ray.
  const MassFunction red1 = pi_param({inf, {1.0, 0.0}, 1.0}, {-3, 3});
  for (double v : red1.values) CHECK(v == 1.0);
  const MassFunction red2 = pi_param({-inf, {1.0, 0.0}, 2.0}, {-3, 3});
  for (double v : red2.values) CHECK(v == 1.0);
  const MassFunction red3 = pi_param({inf, {0.0, 1.0}, 2.0}, {-3, 3});
  for (double v : red3.values) CHECK(v == 1.0);

  // Blue end at q = 2: w + v * q^-k / (q - 1).
  const MassFunction blue = pi_param({inf, {1.0, 0.0}, 2.0}, {-1, 1});
  REQUIRE(blue.values.size() == 3);
  CHECK(blue.values[0] == 2.0);
  CHECK(blue.values[1] == 1.0);
  CHECK(blue.values[2] == 0.5);
  CHECK(blue.value_at(3) == Approx(0.125).epsilon(tight));

  // The reflected blue end sits at u = -inf for q < 1.
  const MassFunction blue_r = pi_param({-inf, {1.0, 0.0}, 0.5}, {-1, 1});
  CHECK(blue_r.values[0] == 0.5);
  CHECK(blue_r.values[1] == 1.0);
  CHECK(blue_r.values[2] == 2.0);
}

TEST_CASE("square parameter validation") {
  CHECK_THROWS_AS(pi_on_square(0, 1.5, {1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(pi_on_square(0, -0.1, {1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(pi_on_square(0, 0.5, {-1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(pi_on_square(0, 0.5, {0.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(pi_on_square(0, 0.5, {1.0, 0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(
      pi_param({std::numeric_limits<double>::quiet_NaN(), {1.0, 0.0}, 1.0}),
      DomainError);
}

TEST_CASE("graded hom functional") {
  CHECK(hom_functional(0, 1.0) == 1.0);
  CHECK(hom_functional(7, 1.0) == 1.0);
  CHECK(hom_functional(-2, 2.0) == 4.0);
  CHECK(hom_functional(2, 2.0) == 0.25);
  CHECK(hom_functional(1, 3.0) == Approx(1.0 / 3.0).epsilon(tight));
  CHECK_THROWS_AS(hom_functional(0, 0.0), DomainError);
}

TEST_CASE("boundary lax descriptors") {
  const LaxDescriptor red = lax_red_point();
  CHECK(red.Z_O == Complex(0.0, 0.0));
  CHECK(red.Z_k == Complex(-1.0, 0.0));
  REQUIRE(red.massless.size() == 1);
  CHECK(red.massless[0] == atom_structure());
  CHECK(red.support_property);

  const LaxDescriptor vp = lax_vertex_p0();
  CHECK(vp.Z_O == Complex(1.0, 0.0));
  CHECK(vp.Z_k == Complex(0.0, 0.0));
  REQUIRE(vp.massless.size() == 1);
  CHECK(vp.massless[0] == atom_sky(0));
  CHECK(!vp.support_property);
}

TEST_CASE("support ratios") {
  const LaxDescriptor red = lax_red_point();
  const double bound = 2.0 / std::sqrt(5.0);
  CHECK(support_ratio(1, -2, red) == Approx(bound).epsilon(tight));
  CHECK(support_ratio(2, -4, red) == Approx(bound).epsilon(tight));
  CHECK(support_ratio(1, -3, red) > bound);
  CHECK(support_ratio(5, 0, red) == 0.0);
  CHECK_THROWS_AS(support_ratio(0, 1, red), DomainError);

  const LaxDescriptor vp = lax_vertex_p0();
  CHECK(support_ratio(2, -1000000, vp) <= 3e-6);
}

TEST_CASE("kernel phases") {
  const ChartPoint below{{0.0, -1.0}};
  CHECK(imn_phase(below, 1, 1) == Approx(0.25).epsilon(tight));
  CHECK(imn_phase(below, 2, 2) == Approx(0.25).epsilon(tight));
  CHECK(imn_phase(below, 1, 2) ==
        Approx(std::atan2(1.0, 2.0) / pi_d).epsilon(tight));
  // Phase decreases as the ratio n/m grows.
  CHECK(imn_phase(below, 1, 3) < imn_phase(below, 1, 2));

  CHECK_THROWS_AS(imn_phase({{0.0, 1.0}}, 1, 1), DomainError);
  CHECK_THROWS_AS(imn_phase(below, 2, 1), DomainError);
  CHECK_THROWS_AS(imn_phase(below, 0, 1), DomainError);
}

TEST_CASE("threshold phases squeeze from both sides") {
  const ChartPoint below{{0.0, -1.0}};
  const double target = std::atan2(1.0, 2.0) / pi_d;  // slope 2, z = -i
  const ThresholdWitness w = threshold_witness(below, 1.0, 100);
  CHECK(w.sup_below < target);
  CHECK(w.inf_above > target);
  CHECK(w.inf_above - w.sup_below < 0.05);

  const ThresholdWitness deep = threshold_witness(below, 1.0, 1000);
  CHECK(deep.inf_above - deep.sup_below < w.inf_above - w.sup_below);

  CHECK_THROWS_AS(threshold_witness(below, 0.0, 10), DomainError);
  CHECK_THROWS_AS(threshold_witness(below, 1.0, 0), DomainError);
  CHECK_THROWS_AS(threshold_witness({{-2.0, 0.0}}, 1.0, 10), DomainError);
}

TEST_CASE("semistable class lattice") {
  CHECK(semistable_class_predicate(0, 1));
  CHECK(semistable_class_predicate(0, 7));
  CHECK(!semistable_class_predicate(0, 0));
  CHECK(!semistable_class_predicate(0, -3));
  CHECK(semistable_class_predicate(1, 0));
  CHECK(semistable_class_predicate(1, -1));
  CHECK(!semistable_class_predicate(1, 1));
  CHECK(semistable_class_predicate(2, -2));
  CHECK(!semistable_class_predicate(2, -1));
  CHECK(semistable_class_predicate(2, 0));
  CHECK(!semistable_class_predicate(3, -2));
  CHECK(!semistable_class_predicate(-1, 0));
}

TEST_CASE("phase cloud and its CSV form") {
  const ChartPoint below{{0.0, -1.0}};
  const std::vector<PhasePoint> cloud = phase_cloud(below, 1, 1);
  REQUIRE(cloud.size() == 3);
  CHECK(cloud[0].r == 0);
  CHECK(cloud[0].n == 1);
  CHECK(cloud[0].phase == 1.0);
  CHECK(cloud[1].r == 1);
  CHECK(cloud[1].n == -1);
  CHECK(cloud[1].phase == Approx(0.25).epsilon(tight));
  CHECK(cloud[2].r == 1);
  CHECK(cloud[2].n == 0);
  CHECK(cloud[2].phase == Approx(0.5).epsilon(tight));

  CHECK(phase_cloud_csv(cloud) == "r,n,phase\n0,1,1\n1,-1,0.25\n1,0,0.5\n");

  const std::vector<PhasePoint> shifted = phase_cloud(below, 1, 1, true);
  REQUIRE(shifted.size() == 6);
  CHECK(shifted[0].r == -1);
  CHECK(shifted[0].n == 0);
  CHECK(shifted[0].phase == Approx(1.5).epsilon(tight));
  CHECK(shifted[5].r == 1);
  CHECK(shifted[5].n == 0);

  CHECK_THROWS_AS(phase_cloud({{0.0, 1.0}}, 1, 1), DomainError);
  CHECK_THROWS_AS(phase_cloud(below, -1, 1), DomainError);
}
