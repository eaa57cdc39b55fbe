#include <doctest.h>

#include <stdexcept>

#include "ttr/verify.hpp"

using namespace ttr;

namespace {

void check_all_claims(const SuiteReport& rep) {
  CHECK(rep.pass());
  for (const auto& c : rep.claims) {
    INFO(rep.suite << "." << c.name << ": " << c.details);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names are stable") {
  const auto& names = verify_suite_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "example1");
  CHECK(names.back() == "l34");
}

TEST_CASE("unknown suite and empty narrowing throw") {
  CHECK_THROWS_AS((void)run_verify_suite("nope"), std::invalid_argument);
  VerifyOptions opts;
  opts.n = 5;  // t31 has no five-vertex case
  CHECK_THROWS_AS((void)run_verify_suite("t31", opts), std::invalid_argument);
}

TEST_CASE("quick suites pass") {
  check_all_claims(run_verify_suite("example1"));
  check_all_claims(run_verify_suite("appendixA5"));
  check_all_claims(run_verify_suite("l32"));
}

TEST_CASE("narrowed desk-scale suites pass") {
  VerifyOptions n7;
  n7.n = 7;
  check_all_claims(run_verify_suite("t33", n7));
  check_all_claims(run_verify_suite("l33", n7));
  check_all_claims(run_verify_suite("l34", n7));
  VerifyOptions n5;
  n5.n = 5;
  check_all_claims(run_verify_suite("t41", n5));
  VerifyOptions t31_72;
  t31_72.n = 7;
  t31_72.l = 2;
  check_all_claims(run_verify_suite("t31", t31_72));
  VerifyOptions t32_72 = t31_72;
  check_all_claims(run_verify_suite("t32", t32_72));
}

TEST_CASE("cross validation smoke run") {
  const auto rep = run_cross_validation(4242, 12, 20000);
  REQUIRE(rep.claims.size() == 3);
  CHECK(rep.claims[0].name == "engines_agree");
  CHECK(rep.claims[0].pass);
  CHECK(rep.claims[1].pass);
}

}  // TEST_SUITE
