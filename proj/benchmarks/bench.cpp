#include <benchmark/benchmark.h>

#include <complex>

#include "k3stab/boundary.hpp"
#include "k3stab/chart.hpp"
#include "k3stab/hn.hpp"
#include "k3stab/mass.hpp"
#include "k3stab/tiling.hpp"

namespace {

using namespace k3stab;

const ChartPoint kBelow{{-0.7, -1.3}};

void BM_HnOracle(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hn_oracle(kBelow, n));
  }
}
BENCHMARK(BM_HnOracle)->Arg(8)->Arg(64);

void BM_MassVector(benchmark::State& state) {
  const double q = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mass_vector({0, kBelow}, q, {-32, 32}));
  }
}
BENCHMARK(BM_MassVector)->Arg(10)->Arg(27);

void BM_InvertClosedForm(benchmark::State& state) {
  const MassABC m = mass_abc(kBelow, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_cell(m.a, m.b, m.c, Cell::Delta0, 1.0));
  }
}
BENCHMARK(BM_InvertClosedForm);

void BM_InvertNewton(benchmark::State& state) {
  const MassABC m = mass_abc(kBelow, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_cell(m.a, m.b, m.c, Cell::Delta0, 2.0));
  }
}
BENCHMARK(BM_InvertNewton);

void BM_SquareParametrization(benchmark::State& state) {
  const SquareCoord s{0.4, {0.7, 0.3}, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi_param(s, {-16, 16}));
  }
}
BENCHMARK(BM_SquareParametrization);

void BM_Classify(benchmark::State& state) {
  const MassFunction f = mass_vector({0, kBelow}, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_mass_point(f));
  }
}
BENCHMARK(BM_Classify);

void BM_PhaseCloud(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_cloud(kBelow, 20, 40, true));
  }
}
BENCHMARK(BM_PhaseCloud);

void BM_RenderSvg(benchmark::State& state) {
  RenderSpec spec;
  spec.mode = TilingMode::Disk;
  spec.q = 2.0;
  spec.depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_svg(spec));
  }
}
BENCHMARK(BM_RenderSvg)->Arg(3)->Arg(32);

}  // namespace
