#include <doctest.h>

#include <json.hpp>

#include "cck/verify.hpp"
#include "support.hpp"

using namespace cck;
using support::make;

TEST_CASE("identities suite examples") {
  const auto d4 = suite_identities(make("dihedral(4)"), 3);
  CHECK(d4.verdict == Verdict::pass);
  CHECK(d4.facts["gamma_star_orders"]["2"] == 1);

  const auto s4 = suite_identities(make("symmetric(4)"), 3);
  CHECK(s4.verdict == Verdict::pass);
  CHECK(s4.facts["delta_star_orders"] == nlohmann::ordered_json({24, 12, 4, 1}));
  CHECK(s4.facts["fitting_height"] == 3);

  const auto f = suite_identities(make("frobenius(7,3)"), 3);
  CHECK(f.verdict == Verdict::pass);
  CHECK(f.facts["delta_star_orders"][2] == 1);
  CHECK(f.facts["fitting_height"] == 2);

  const auto a5 = suite_identities(make("alternating(5)"), 3);
  CHECK(a5.verdict == Verdict::pass);
  CHECK(a5.facts["fitting_height"].is_null());
  CHECK_THROWS_AS(suite_identities(make("cyclic(2)"), 1), Error);
}

TEST_CASE("theorem suites") {
  const auto c = suite_theorem1(make("cyclic(6)"), 1);
  CHECK(c.facts["m"] == 1);
  CHECK(c.facts["delta_min"] == 1);

  const auto q8 = suite_theorem1(make("generalized_quaternion(8)"), 1);
  CHECK(q8.verdict == Verdict::pass);
  CHECK(q8.facts["m"] == 3);
  CHECK(q8.facts["delta_min"] == 4);

  const auto s4 = suite_theorem1(make("symmetric(4)"), 2);
  CHECK(s4.facts["gamma_star_order"] == 12);
  CHECK(s4.facts["delta_min"] == 4);

  const auto t3 = suite_theorem2(make("symmetric(3)"), 2);
  CHECK(t3.facts["m"] == 1);
  CHECK(t3.facts["delta_star_order"] == 1);
  const auto t4 = suite_theorem2(make("symmetric(4)"), 2);
  CHECK(t4.facts["m"] == 3);
  CHECK(t4.facts["delta_star_order"] == 4);
  const auto t43 = suite_theorem2(make("symmetric(4)"), 3);
  CHECK(t43.facts["m"] == 1);
  CHECK(t43.facts["delta_star_order"] == 1);
  CHECK_THROWS_AS(suite_theorem2(make("symmetric(4)"), 1), Error);

  SuiteOptions budget;
  budget.cover.greedy_only = true;
  const auto psl = suite_theorem1(make("psl2(7)"), 1, budget);
  if (!psl.facts["exact"].get<bool>()) {
    CHECK(psl.verdict == Verdict::skipped);
    CHECK(psl.reason == "cover-budget");
  }
}

TEST_CASE("lemma records") {
  const auto s3 = suite_lemmas(make("symmetric(3)"));
  bool saw_hall = false;
  for (const auto& r : s3) {
    INFO(r.suite);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.facts["instances"].get<std::size_t>() > 0);
    saw_hall = saw_hall || r.suite == "lemma:metanilpotent_hall";
  }
  CHECK(saw_hall);

  const auto c6 = suite_lemmas(make("cyclic(6)"));
  bool idempotent = false;
  for (const auto& r : c6) idempotent = idempotent || r.suite == "lemma:coprime_commutator_idempotent";
  CHECK(idempotent);

  for (const auto& r : suite_lemmas(make("symmetric(4)")))
    if (r.suite == "lemma:abelian_p_commutators") CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("reports are sorted and deterministic") {
  VerifyOptions opts;
  opts.jmax = 3;
  const auto specs = default_catalog(30);
  opts.threads = 1;
  const auto a = run_verification(specs, opts);
  opts.threads = 4;
  const auto b = run_verification(specs, opts);
  CHECK(records_to_json(a.records) == records_to_json(b.records));
  CHECK(theorem1_csv(a.records) == theorem1_csv(b.records));
  CHECK(a.failures() == 0);
  CHECK(std::is_sorted(a.records.begin(), a.records.end(), record_less));

  const auto json = nlohmann::json::parse(records_to_json(a.records));
  for (const auto& r : json) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"facts", "group", "j", "order", "reason", "suite", "verdict"});
  }
}

TEST_CASE("csv quoting and headers") {
  VerifyOptions opts;
  opts.suites = {Suite::theorem1, Suite::theorem2};
  const auto r = run_verification({builtin("direct_product(cyclic(2),cyclic(3))")}, opts);
  const auto t1 = theorem1_csv(r.records);
  CHECK(t1.rfind("group,order,j,m,exact,delta_min\n", 0) == 0);
  CHECK(t1.find("\"direct_product(cyclic(2),cyclic(3))\",6,1,1,true,1\n") != std::string::npos);
  CHECK(theorem2_csv(r.records).rfind("group,order,j,m,exact,delta_star_order\n", 0) == 0);
}

TEST_CASE("errors become failing records") {
  VerifyOptions opts;
  opts.suites = {Suite::identities};
  opts.order_cap = 10;
  const auto r = run_verification({builtin("symmetric(4)")}, opts);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].verdict == Verdict::fail);
  CHECK(r.records[0].reason == "order-cap");
  CHECK(parse_suites("all").size() == 4);
  CHECK_THROWS_AS(parse_suites("nope"), Error);
}
