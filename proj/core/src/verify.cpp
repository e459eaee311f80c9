#include "k3stab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "k3stab/boundary.hpp"
#include "k3stab/hn.hpp"
#include "k3stab/mass.hpp"
#include "k3stab/mukai.hpp"

namespace k3stab {

namespace {

constexpr double pi = std::numbers::pi;

bool identical(const MassFunction& f, const MassFunction& g) {
  const auto tail_eq = [](const TailDescriptor& x, const TailDescriptor& y) {
    return x.kind == y.kind && x.anchor == y.anchor && x.start == y.start &&
           x.step == y.step && x.ratio == y.ratio;
  };
  return f.q == g.q && f.window.lo == g.window.lo &&
         f.window.hi == g.window.hi && f.values == g.values &&
         tail_eq(f.left, g.left) && tail_eq(f.right, g.right);
}

struct Recorder {
  PropertyResult res;

  explicit Recorder(std::string name) { res.name = std::move(name); }

  void check(bool ok) {
    res.checks += 1;
    if (!ok) res.failures += 1;
  }

  // Tracks the largest observed value (error statistics).
  void check_max(double value, double bound) {
    res.checks += 1;
    if (!(value <= bound)) res.failures += 1;
    res.worst = std::max(res.worst, value);
  }

  // Tracks the smallest observed value (lower-bound statistics).
  void check_min(double value, double bound) {
    res.checks += 1;
    if (!(value >= bound)) res.failures += 1;
    res.worst = std::min(res.worst, value);
  }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                         std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// ------------------------------------------------------------------ hn

SuiteResult suite_hn(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Recorder oracle("oracle_equals_closed_form");
  Recorder reduce("twist_reduce_reaches_semistable");

  for (std::int64_t i = 0; i < samples; ++i) {
    const Region reg = (i % 2 == 0) ? Region::WMinus : Region::WZero;
    const ChartPoint p = fuzz_chart(reg, rng);
    for (std::int64_t n = -64; n <= 64; ++n) {
      const FactorList a = hn_oracle(p, n);
      const FactorList b = hn_closed_form(p, reg, n);
      bool same = a.size() == b.size();
      for (std::size_t k = 0; same && k < a.size(); ++k) {
        same = a[k].atom == b[k].atom && a[k].phase == b[k].phase;
      }
      oracle.check(same);
    }

    const std::int64_t n = uniform_int(rng, -20, 20);
    const TwistReduction tr = twist_reduce(p, n);
    const std::int64_t reduced = n + tr.direction * tr.steps;
    const PhaseSpread spread = phase_spread(p, reduced);
    bool ok = spread.width() == 0.0;
    if (tr.steps > 0) {
      // One fewer application must still be unstable.
      const std::int64_t before = n + tr.direction * (tr.steps - 1);
      ok = ok && phase_spread(p, before).width() > 0.0;
    }
    reduce.check(ok);
  }

  oracle.res.note = "exact factor/phase agreement, n in [-64,64]";
  reduce.res.note = "spread reaches zero in the reported number of steps";
  return {"hn", {oracle.res, reduce.res}};
}

// ---------------------------------------------------------------- mass

SuiteResult suite_mass(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Recorder factor_sum("mass_matches_factor_sum");
  Recorder triangle("q_triangle_inequalities");
  Recorder equivariance("twist_equivariance_exact");
  Recorder canonical("canonical_form_same_mass");

  const double qs[] = {1.0, 0.5, 2.7};
  for (std::int64_t i = 0; i < samples; ++i) {
    const Region reg = (i % 2 == 0) ? Region::WMinus : Region::WZero;
    const ChartPoint p = fuzz_chart(reg, rng);

    for (double q : qs) {
      const MassFunction f = mass_vector({0, p}, q);
      double worst = 0.0;
      for (std::int64_t n = -32; n <= 32; ++n) {
        const double direct = f.value_at(n);
        const double summed = mass_from_factors(p, n, q);
        worst = std::max(worst, std::abs(direct - summed) / summed);
      }
      factor_sum.check_max(worst, 1e-12);

      const MassABC abc = mass_abc(p, q);
      if (reg == Region::WMinus) {
        triangle.check(triangle_check(abc.a, abc.b, abc.c, q) ==
                       TriangleStatus::StrictInterior);
      } else {
        triangle.check_max(
            std::abs(abc.b - (abc.a + q * abc.c)) / abc.b, 1e-12);
      }
    }

    const double q = qs[static_cast<std::size_t>(i % 3)];
    const std::int64_t t = uniform_int(rng, -5, 5);
    const MassFunction base = mass_vector({t, p}, q, {-12, 12});
    const MassFunction moved = mass_vector({t + 1, p}, q, {-11, 13});
    equivariance.check(identical(base.shifted(1), moved));

    const ChartPoint pp = fuzz_chart(Region::WPlus, rng);
    const StabilityPoint high{t, pp};
    const StabilityPoint low = canonicalize(high);
    canonical.check(approx_equal(mass_vector(high, q), mass_vector(low, q),
                                 eps_projective));
  }

  factor_sum.res.note = "max relative gap, n in [-32,32], q in {1,1/2,2.7}";
  triangle.res.note = "strict inside the region, wall equality on it";
  equivariance.res.note = "shifted window identical bit for bit";
  canonical.res.note = "upper-region point vs canonical form, projective";
  return {"mass",
          {factor_sum.res, triangle.res, equivariance.res, canonical.res}};
}

// ------------------------------------------------------------ roundtrip

SuiteResult suite_roundtrip(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Recorder delta0("delta0_roundtrip");
  Recorder delta1("delta_minus1_roundtrip");
  Recorder wall("wall_roundtrip");
  Recorder deformed("deformed_roundtrip");

  for (std::int64_t i = 0; i < samples; ++i) {
    {
      const ChartPoint p = fuzz_chart(Region::WMinus, rng);
      const MassABC m = mass_abc(p);
      const InversionResult inv = invert_cell(m.a, m.b, m.c, Cell::Delta0);
      delta0.check_max(std::abs(inv.chart.z - p.z), 1e-9);
    }
    {
      const ChartPoint p = fuzz_chart(Region::WPlus, rng);
      const MassABC m = mass_abc(p);
      const InversionResult inv =
          invert_cell(m.a, m.b, m.c, Cell::DeltaMinus1);
      delta1.check_max(std::abs(inv.chart.z - p.z), 1e-9);
    }
    {
      const ChartPoint p = fuzz_chart(Region::WZero, rng);
      const MassABC m = mass_abc(p);
      const InversionResult inv = invert_cell(m.a, m.b, m.c, Cell::I0);
      wall.check_max(std::abs(inv.chart.z - p.z) / std::abs(p.z), 1e-12);
    }
    for (double q : {0.5, 2.0, 5.0}) {
      // A throw out of the inversion counts as a failed check.
      try {
        const ChartPoint p = fuzz_chart(Region::WMinus, rng);
        const MassABC m = mass_abc(p, q);
        const InversionResult inv =
            invert_cell(m.a, m.b, m.c, Cell::Delta0, q);
        deformed.check_max(
            std::max(std::abs(inv.chart.z - p.z), inv.residual), 1e-7);
      } catch (const Error&) {
        deformed.check(false);
      }
      try {
        const ChartPoint pp = fuzz_chart(Region::WPlus, rng);
        const MassABC mp = mass_abc(pp, q);
        const InversionResult invp =
            invert_cell(mp.a, mp.b, mp.c, Cell::DeltaMinus1, q);
        deformed.check_max(
            std::max(std::abs(invp.chart.z - pp.z), invp.residual), 1e-7);
      } catch (const Error&) {
        deformed.check(false);
      }
    }
  }

  delta0.res.note = "|recovered - original|, undeformed lower cell";
  delta1.res.note = "|recovered - original|, undeformed upper cell";
  wall.res.note = "relative recovery error on the wall";
  deformed.res.note = "max of chart error and residual, q in {1/2,2,5}";
  return {"roundtrip", {delta0.res, delta1.res, wall.res, deformed.res}};
}

// ------------------------------------------------------------- boundary

SuiteResult suite_boundary(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Recorder limits("vertex_limits");
  Recorder standard("standard_condition_limits");
  Recorder seam("square_seams_exact");
  Recorder equivariance("square_twist_equivariance");
  Recorder threshold("phase_threshold_gap");
  Recorder classify("cell_classification");

  {
    // (1/n) P_n approaches the constant function.
    const std::int64_t n = 100000;
    const MassFunction p = vertex_p(n, 1.0, {-16, 16});
    double worst = 0.0;
    for (std::int64_t k = -16; k <= 16; ++k) {
      // |v - n| is exact here, so the sup evaluates to exactly 16/n.
      worst = std::max(worst, std::abs(p.value_at(k) - static_cast<double>(n)) /
                                  static_cast<double>(n));
    }
    limits.check_max(worst, 16.0 / static_cast<double>(n));
  }
  {
    // q^-n P_n approaches delta * q^-(k+1).
    const double q = 2.0;
    const std::int64_t n = 60;
    const double delta = q / (q - 1.0);
    const MassFunction p = vertex_p(n, q, {-16, 16});
    double worst = 0.0;
    for (std::int64_t k = -16; k <= 16; ++k) {
      const double got =
          p.value_at(k) * std::pow(q, static_cast<double>(-n));
      const double want = delta * std::pow(q, static_cast<double>(-k - 1));
      worst = std::max(worst, std::abs(got - want));
    }
    limits.check_max(worst, 1e-6);
  }
  {
    // Wall charts degenerate to the red point as c -> 0 and to the
    // massless vertex as the radius grows.
    const MassFunction near_red = mass_vector({0, {Complex(-1e-8, 0.0)}});
    standard.check(approx_equal(near_red, vertex_q(), 1e-6));
    const MassFunction near_p0 = mass_vector({0, {Complex(-1e8, 0.0)}});
    standard.check(approx_equal(near_p0, vertex_p(0, 1.0), 1e-6));
  }

  for (const double q : {1.0, 2.0}) {
    for (std::int64_t n = -8; n <= 8; ++n) {
      const Ray ray{0.7, 0.3};
      const MassFunction right = pi_on_square(n - 1, 1.0, ray, q);
      const MassFunction left = pi_on_square(n, 0.0, ray, q);
      seam.check(identical(right, left));
    }
  }

  for (std::int64_t i = 0; i < samples; ++i) {
    const double q = (i % 2 == 0) ? 1.0 : 2.0;
    const double u = uniform(rng, -4.0, 4.0);
    const double v = uniform(rng, 0.1, 1.0);
    const double w = uniform(rng, 0.1, 1.0);
    const MassFunction base = pi_param({u, {v, w}, q}, {-12, 12});
    const MassFunction moved = pi_param({u + 1.0, {q * v, w}, q}, {-11, 13});
    const MassFunction shifted = base.shifted(1);
    double worst = 0.0;
    for (std::int64_t k = -11; k <= 13; ++k) {
      worst = std::max(worst,
                       std::abs(shifted.value_at(k) - moved.value_at(k)) /
                           std::max(1.0, moved.value_at(k)));
    }
    equivariance.check_max(worst, 1e-12);
  }

  {
    const ThresholdWitness tw =
        threshold_witness({Complex(0.0, -1.0)}, 1.0, 1000);
    const double target = std::arg(Complex(2.0, 1.0)) / pi;
    threshold.check_max(tw.inf_above - tw.sup_below, 1e-2);
    threshold.check_max(std::abs(tw.sup_below - target), 2e-3);
    threshold.check_max(std::abs(tw.inf_above - target), 2e-3);
    threshold.check(tw.sup_below <= target && target <= tw.inf_above);
  }

  classify.check(classify_mass_point(vertex_q()) ==
                 CellId{CellId::Kind::RedPoint, 0});
  classify.check(classify_mass_point(pi_param(
                     {std::numeric_limits<double>::infinity(),
                      {1.0, 0.0},
                      2.0})) == CellId{CellId::Kind::BlueQHom, 0});
  for (std::int64_t n = -6; n <= 6; ++n) {
    classify.check(classify_mass_point(vertex_p(n, 1.0)) ==
                   CellId{CellId::Kind::VertexP, n});
    classify.check(classify_mass_point(vertex_p(n, 2.0)) ==
                   CellId{CellId::Kind::VertexP, n});
  }
  for (std::int64_t i = 0; i < samples; ++i) {
    const double q = (i % 2 == 0) ? 1.0 : 2.0;
    const std::int64_t t = uniform_int(rng, -6, 6);
    const ChartPoint pm = fuzz_chart(Region::WMinus, rng);
    classify.check(classify_mass_point(mass_vector({t, pm}, q)) ==
                   CellId{CellId::Kind::Delta, t});
    const ChartPoint pz = fuzz_chart(Region::WZero, rng);
    classify.check(classify_mass_point(mass_vector({t, pz}, q)) ==
                   CellId{CellId::Kind::Interval, t});
    const double uf = uniform(rng, 0.05, 0.95);
    classify.check(classify_mass_point(pi_on_square(t, uf, {1.0, 0.0}, q)) ==
                   CellId{CellId::Kind::EdgePP, t});
  }

  limits.res.note = "window sup distance from the limit sequence";
  standard.res.note = "wall charts near the red point and the first vertex";
  seam.res.note = "adjacent squares agree bit for bit on the seam";
  equivariance.res.note = "max relative gap under (u,[v:w]) -> (u+1,[qv:w])";
  threshold.res.note = "two-sided gap at depth 1000";
  classify.res.note = "distinguished points and fuzzed interior cells";
  return {"boundary",
          {limits.res, standard.res, seam.res, equivariance.res,
           threshold.res, classify.res}};
}

// ------------------------------------------------------------------ lax

SuiteResult suite_lax(std::int64_t samples, std::uint64_t seed) {
  (void)samples;
  (void)seed;
  Recorder support("red_point_support_bound");
  Recorder vertex("vertex_support_failure");
  Recorder hom("hom_functional_values");

  const LaxDescriptor red = lax_red_point();
  double minimum = std::numeric_limits<double>::infinity();
  for (std::int64_t r = 1; r <= 50; ++r) {
    for (std::int64_t m = -500; m <= -2 * r; ++m) {
      minimum = std::min(minimum, support_ratio(r, m, red));
    }
  }
  // The minimum is tied along m = -2r; compare with room for rounding.
  const double bound = 2.0 / std::sqrt(5.0);
  support.res.worst = minimum;
  support.check(std::abs(minimum - bound) <= 1e-12);
  support.check(minimum >= bound - 1e-12);
  support.check(std::abs(support_ratio(1, -2, red) - minimum) <= 1e-12);

  vertex.check_max(support_ratio(2, -1000000, lax_vertex_p0()), 3e-6);

  hom.check(hom_functional(7, 1.0) == 1.0);
  hom.check(hom_functional(0, 3.0) == 1.0);
  hom.check(hom_functional(-2, 3.0) == 9.0);
  hom.check(hom_functional(2, 2.0) == 0.25);

  support.res.note = "minimum ratio over 1<=r<=50, 2r<=-m<=500";
  vertex.res.note = "ratio at (r,m)=(2,-10^6) under the massless vertex";
  hom.res.note = "graded dimension q^-n";
  return {"lax", {support.res, vertex.res, hom.res}};
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed(); });
}

ChartPoint fuzz_chart(Region reg, std::mt19937_64& rng) {
  const double radius = std::exp(uniform(rng, std::log(0.05), std::log(20.0)));
  if (reg == Region::WZero) return {Complex(-radius, 0.0)};
  const double arg = uniform(rng, 0.02 * pi, 0.98 * pi);
  const double sign = (reg == Region::WMinus) ? -1.0 : 1.0;
  return {std::polar(radius, sign * arg)};
}

SuiteResult run_suite(const std::string& suite, std::int64_t samples,
                      std::uint64_t seed) {
  if (samples < 1) throw DomainError("sample count must be at least 1");
  if (suite == "hn") return suite_hn(samples, seed);
  if (suite == "mass") return suite_mass(samples, seed);
  if (suite == "roundtrip") return suite_roundtrip(samples, seed);
  if (suite == "boundary") return suite_boundary(samples, seed);
  if (suite == "lax") return suite_lax(samples, seed);
  if (suite == "all") {
    SuiteResult all{"all", {}};
    for (const char* name : {"hn", "mass", "roundtrip", "boundary", "lax"}) {
      SuiteResult one = run_suite(name, samples, seed);
      for (PropertyResult& p : one.properties) {
        p.name = one.suite + "." + p.name;
        all.properties.push_back(std::move(p));
      }
    }
    return all;
  }
  throw DomainError("unknown suite '" + suite + "'");
}

std::string suite_report_json(const SuiteResult& r) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyResult& p : r.properties) {
    props.push_back({{"name", p.name},
                     {"checks", p.checks},
                     {"failures", p.failures},
                     {"worst", p.worst},
                     {"note", p.note}});
  }
  const nlohmann::json j{
      {"suite", r.suite}, {"passed", r.passed()}, {"properties", props}};
  return j.dump(2);
}

}  // namespace k3stab
