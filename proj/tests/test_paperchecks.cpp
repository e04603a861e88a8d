#include <catch2/catch_amalgamated.hpp>

#include "chevkit/paperchecks.hpp"

using namespace chevkit;

namespace {

VerifyContext& ctx17() {
  static VerifyContext ctx(17);
  return ctx;
}

}  // namespace

TEST_CASE("engine selftest passes") {
  const CheckResult r = check_engine_selftest(ctx17());
  CHECK(r.passed());
}

TEST_CASE("construction check passes at p = 17 and p = 7") {
  CHECK(check_construction(ctx17()).passed());
  VerifyContext ctx7(7);
  CHECK(ctx7.field().degree() == 2);
  CHECK(check_construction(ctx7).passed());
}

TEST_CASE("simply connected check passes") {
  CHECK(check_simply_connected(ctx17()).passed());
}

TEST_CASE("census and survey checks pass") {
  CHECK(check_census(ctx17()).passed());
  CHECK(check_survey(ctx17()).passed());
}

TEST_CASE("h1 check passes") { CHECK(check_h1_and_table1().passed()); }

TEST_CASE("derived membership rows") {
  for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
    const CheckResult r = check_lemma_derived_membership(ctx17(), q);
    CHECK(r.passed());
    CHECK(r.details["E_in_derived"] == (q % 4 == 1));
    CHECK(r.details["twisted_E_in_derived"] == (q % 4 == 3));
  }
}

TEST_CASE("theorem decisions") {
  CHECK(theorem_decision(ctx17(), 17).outer_part == "Sym3");
  CHECK(theorem_decision(ctx17(), 7).outer_part == "Sym3");
  CHECK(theorem_decision(ctx17(), 3).outer_part == "3");
  CHECK(theorem_decision(ctx17(), 5).outer_part == "3");
  CHECK(theorem_decision(ctx17(), 25).outer_part == "Sym3");
  CHECK_THROWS_AS(theorem_decision(ctx17(), 4), std::invalid_argument);
  CHECK(check_theorem(ctx17(), {3, 5, 7, 9, 17, 23, 25}).passed());
}

TEST_CASE("full report") {
  const std::vector<long long> qs = {3, 5, 7, 9, 17, 25};
  const CheckReport rep = run_report(17, qs);
  CHECK(rep.all_passed());
  CHECK(rep.p == 17);
  CHECK(rep.k == 1);

  // deterministic: a second run serialises byte-identically
  const CheckReport rep2 = run_report(17, qs);
  CHECK(rep.to_json().dump() == rep2.to_json().dump());

  // JSON round-trip
  const nlohmann::json j = rep.to_json();
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(j.contains("engine"));
  CHECK(j["engine"]["p"] == 17);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("full report in a degree-4 extension") {
  const CheckReport rep = run_report(3, {3, 27});
  CHECK(rep.all_passed());
  CHECK(rep.k == 4);
}

TEST_CASE("report rejects bad parameters") {
  CHECK_THROWS_AS(run_report(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(run_report(15, {3}), std::invalid_argument);
  CHECK_THROWS_AS(run_report(17, {4}), std::invalid_argument);
  CHECK_THROWS_AS(run_report(17, {15}), std::invalid_argument);  // 3 * 5 is not a prime power
}

TEST_CASE("prime power recognition") {
  using checkdetail::is_odd_prime_power;
  CHECK(is_odd_prime_power(3));
  CHECK(is_odd_prime_power(9));
  CHECK(is_odd_prime_power(27));
  CHECK(is_odd_prime_power(121));
  CHECK(is_odd_prime_power(125));
  CHECK_FALSE(is_odd_prime_power(15));
  CHECK_FALSE(is_odd_prime_power(4));
  CHECK_FALSE(is_odd_prime_power(1));
  CHECK_FALSE(is_odd_prime_power(45));
}
