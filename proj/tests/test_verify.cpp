#include <doctest.h>

#include "spectra/serialize.hpp"
#include "spectra/verify.hpp"
#include "test_util.hpp"

using namespace spectra;

namespace {

nlohmann::json without_time(const VerifyReport& r) {
  auto doc = to_json(r);
  doc.erase("wall_seconds");
  return doc;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names() == std::vector<std::string>{"lemma11", "lemma31", "lemma32", "lemma33", "malcev",
                                                  "multiplicativity", "thm21", "odd22", "gate32"});
  CHECK(error_code_of([] { run_suite("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("suites are deterministic given the seed") {
  for (const char* name : {"lemma11", "malcev", "multiplicativity", "lemma32"}) {
    CAPTURE(name);
    const auto a = run_suite(name, 42);
    const auto b = run_suite(name, 42);
    CHECK(a.passed());
    CHECK(without_time(a) == without_time(b));
    CHECK(a.instances > 0);
    CHECK(a.max_order > 0);
  }
  CHECK(without_time(run_suite("multiplicativity", 1)) != without_time(run_suite("multiplicativity", 2)));
}
