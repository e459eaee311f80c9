#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "k3stab/chart.hpp"

namespace k3stab {

struct PropertyResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  double worst = 0.0;  // extremal statistic, meaning stated in note
  std::string note;
  bool passed() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

// Random chart point strictly inside the requested region, bounded away
// from the forbidden ray and the wall.
ChartPoint fuzz_chart(Region reg, std::mt19937_64& rng);

// Suites: hn, mass, roundtrip, boundary, lax, all.  Deterministic for
// fixed (samples, seed).  Unknown names throw DomainError.
SuiteResult run_suite(const std::string& suite, std::int64_t samples,
                      std::uint64_t seed);

std::string suite_report_json(const SuiteResult& r);

}  // namespace k3stab
