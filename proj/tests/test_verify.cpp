#include "doctest.h"
#include "spl/error.hpp"
#include "spl/verify.hpp"

using namespace spl;

TEST_CASE("every suite passes on a few instances") {
  for (const std::string& name : suite_names()) {
    const int count = name == "lower-bound" ? 5 : 10;
    const SuiteResult r = run_suite(name, 3, count);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.passes() > 0);
    CHECK(r.count == count);
  }
}

TEST_CASE("records are deterministic and ordered") {
  const SuiteResult a = run_suite("correspondence", 5, 12);
  const SuiteResult b = run_suite("correspondence", 5, 12);
  CHECK(dump_json(a.to_json()) == dump_json(b.to_json()));
  for (std::size_t k = 1; k < a.checks.size(); ++k) {
    CHECK(a.checks[k - 1].instance <= a.checks[k].instance);
  }
  const SuiteResult c = run_suite("correspondence", 6, 12);
  CHECK(dump_json(a.to_json()) != dump_json(c.to_json()));
}

TEST_CASE("named checks and bad arguments") {
  const SuiteResult r = run_suite("courant", 1, 4);
  CHECK(r.named("courant-bound").size() == 4);
  CHECK_THROWS_AS(run_suite("nope", 1, 1), Error);
  CHECK_THROWS_AS(run_suite("courant", 1, -1), Error);
  CHECK(run_suite("courant", 1, 0).checks.empty());
}
