#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "portex/checks.hpp"

using namespace portex;

TEST_CASE("bundled k4 fixtures") {
  checks::Result k4 = checks::verify_k4();
  CHECK(k4.pass);
  CHECK(k4.counterexample.empty());
  checks::Result t1 = checks::verify_table1();
  CHECK(t1.pass);
  CHECK(t1.checked == 6);
}

TEST_CASE("randomized suites at smoke scale") {
  checks::Options o{12, 99, 6};
  for (const auto& kind : checks::suite_names()) {
    checks::Result r = checks::run_suite(kind, o);
    INFO(kind << ": " << r.counterexample);
    CHECK(r.pass);
    CHECK(r.checked >= 12);
  }
  CHECK_THROWS_AS(checks::run_suite("nonsense", o), Error);
}

TEST_CASE("oracle and homogeneity suites") {
  checks::Options o{15, 7, 6};
  checks::Result oracle = checks::verify_oracle(o);
  INFO(oracle.counterexample);
  CHECK(oracle.pass);
  checks::Result hom = checks::verify_homogeneity(o);
  INFO(hom.counterexample);
  CHECK(hom.pass);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  checks::Options o{8, 424242, 6};
  checks::Result a = checks::verify_sum(o);
  checks::Result b = checks::verify_sum(o);
  CHECK(a.pass == b.pass);
  CHECK(a.checked == b.checked);
}
