#include <doctest.h>

#include "k3stab/verify.hpp"

using namespace k3stab;

TEST_CASE("fuzzed charts land strictly inside their region") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    CHECK(region(fuzz_chart(Region::WMinus, rng)) == Region::WMinus);
    CHECK(region(fuzz_chart(Region::WZero, rng)) == Region::WZero);
    CHECK(region(fuzz_chart(Region::WPlus, rng)) == Region::WPlus);
  }
}

TEST_CASE("suites are deterministic for a fixed seed") {
  const SuiteResult a = run_suite("hn", 20, 7);
  const SuiteResult b = run_suite("hn", 20, 7);
  REQUIRE(a.properties.size() == b.properties.size());
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    CHECK(a.properties[i].name == b.properties[i].name);
    CHECK(a.properties[i].checks == b.properties[i].checks);
    CHECK(a.properties[i].failures == b.properties[i].failures);
    CHECK(a.properties[i].worst == b.properties[i].worst);
  }
}

TEST_CASE("every suite passes on a small sample budget") {
  for (const char* name : {"hn", "mass", "roundtrip", "boundary", "lax"}) {
    const SuiteResult r = run_suite(name, 25, 20260814);
    INFO(suite_report_json(r));
    CHECK(r.passed());
    CHECK(!r.properties.empty());
    for (const PropertyResult& p : r.properties) {
      CHECK(p.checks > 0);
    }
  }
}

TEST_CASE("the combined suite prefixes property names") {
  const SuiteResult all = run_suite("all", 10, 7);
  CHECK(all.suite == "all");
  CHECK(all.passed());
  bool saw_prefix = false;
  for (const PropertyResult& p : all.properties) {
    if (p.name.rfind("hn.", 0) == 0) saw_prefix = true;
  }
  CHECK(saw_prefix);
}

TEST_CASE("suite reports serialize to JSON") {
  const SuiteResult r = run_suite("lax", 5, 3);
  const std::string text = suite_report_json(r);
  CHECK(text.find("\"suite\"") != std::string::npos);
  CHECK(text.find("\"properties\"") != std::string::npos);
  CHECK(text.find("\"checks\"") != std::string::npos);
  CHECK(text.find("\"failures\"") != std::string::npos);
  CHECK(text.find("\"passed\"") != std::string::npos);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("nope", 10, 7), DomainError);
}
