#include <doctest.h>

#include "minquot/errors.hpp"
#include "minquot/harness.hpp"

using namespace minquot;

namespace {
  CheckParams with_n(std::size_t n) {
    CheckParams p;
    p.n = n;
    return p;
  }
}  // namespace

TEST_CASE("registry") {
  auto const& names = registered_checks();
  CHECK(names.size() == 12);
  CHECK(names.front() == "gersten-relations");
  CHECK(is_registered("lemma-a"));
  CHECK_FALSE(is_registered("nope"));
  CHECK_THROWS_AS(run_check("nope"), DomainError);
  for (auto const& name : names) {
    CHECK_FALSE(run_check(name).paper_ref.empty());
  }
}

TEST_CASE("named checks") {
  auto const counting = run_check("counting-identity", with_n(3));
  CHECK(counting.status == CheckStatus::pass);
  CHECK(counting.counts["product"] == 20160);
  CHECK(counting.counts["orbit"] == 15);

  CheckParams c;
  c.n = 3;
  auto const subgroups = run_check("c-subgroups", c);
  CHECK(subgroups.status == CheckStatus::pass);
  CHECK(subgroups.counts["distinct"] == 7);
  CHECK(subgroups.counts["pairwise_conjugate"] == true);
  CHECK(subgroups.params.contains("n_plus_1"));

  auto const torelli = run_check("torelli", with_n(5));
  CHECK(torelli.status == CheckStatus::pass);
}

TEST_CASE("out-of-range parameters are refused") {
  auto const r = run_check("sl-order", with_n(5));
  CHECK(r.status == CheckStatus::refused);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->contains("reason"));
  CHECK(run_check("torelli", with_n(1)).status == CheckStatus::refused);
  CHECK(run_check("gersten-relations", with_n(5)).status == CheckStatus::refused);
  CHECK(exit_code({r}) == 2);
}

TEST_CASE("a hom ceiling that is too small refuses the base case") {
  CheckParams p;
  p.hom_ceiling = 10;
  auto const r = run_check("base-case", p);
  CHECK(r.status == CheckStatus::refused);
}

TEST_CASE("a reversed commutator is caught with a witness") {
  CheckParams p;
  p.convention = CommutatorConvention::reversed;
  for (std::size_t n : {3u, 4u}) {
    p.n          = n;
    auto const r = run_check("gersten-relations", p);
    CHECK(r.status == CheckStatus::fail);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE((*r.witness)["violations"].empty());
  }
}

TEST_CASE("report serialization") {
  auto const r = run_check("abelianization");
  auto const j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) {
    keys.push_back(it.key());
  }
  CHECK(keys == std::vector<std::string>{"check", "params", "status", "counts",
                                         "paper_ref"});
  CHECK(to_json(r, true).contains("elapsed_ms"));
  CHECK(to_ndjson({r, r}).find('\n') == to_ndjson({r}).size() - 1);
}

TEST_CASE("exit codes") {
  CheckReport pass, fail, refused;
  fail.status    = CheckStatus::fail;
  refused.status = CheckStatus::refused;
  CHECK(exit_code({pass, pass}) == 0);
  CHECK(exit_code({pass, refused}) == 2);
  CHECK(exit_code({refused, fail}) == 1);
}

TEST_CASE("profiles") {
  CHECK(parse_profile("quick") == Profile::quick);
  CHECK(parse_profile("full") == Profile::full);
  CHECK_FALSE(parse_profile("slow").has_value());
  auto const quick = run_all(Profile::quick);
  CHECK(exit_code(quick) == 0);
  for (auto const& [name, n] : profile_plan(Profile::quick)) {
    CHECK(is_registered(name));
  }
  // Reports come back in plan order.
  auto const plan = profile_plan(Profile::quick);
  REQUIRE(plan.size() == quick.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    CHECK(quick[i].check == plan[i].first);
  }
}

TEST_CASE("seeded sampling is reproducible") {
  CheckParams p;
  p.n    = 2;
  p.seed = 99;
  auto const a = to_json(run_check("conjugation-stability", p)).dump();
  auto const b = to_json(run_check("conjugation-stability", p)).dump();
  CHECK(a == b);
  CHECK(a.find("\"seed\":99") != std::string::npos);
}
