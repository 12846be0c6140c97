#include <doctest.h>

#include "bglab/analysis.hpp"
#include "bglab/checker.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "bglab/parser.hpp"
#include "bglab/rng.hpp"
#include "oracles.hpp"

using namespace bglab;

namespace {

  FiniteAlgebra b21_reduct() {
    return multiplicative_reduct(brandt_monoid_b21());
  }

  Identity id(char const* text) {
    return parse_identity(text);
  }

  CheckOptions with_workers(unsigned w) {
    CheckOptions o;
    o.workers = w;
    return o;
  }

}  // namespace

TEST_CASE("exhaustive check: small identities") {
  auto const b = brandt_monoid_b21();
  auto const v = check_identity_exhaustive(b, id("x1^2 = x1^4"));
  CHECK(v.status == CheckStatus::holds);
  CHECK(v.evaluations == 6);

  auto const c = check_identity_exhaustive(b, id("x1 x2 = x2 x1"));
  REQUIRE(c.refuted());
  REQUIRE(c.witness);
  CHECK(c.witness->values() == std::vector<Element>{b.at("a"), b.at("b")});
  CHECK(c.lhs_value == b.at("e"));
  CHECK(c.rhs_value == b.at("f"));
  CHECK(witness_refutes(b, id("x1 x2 = x2 x1"), *c.witness));

  auto const same = check_identity_exhaustive(b, id("x1 x2 x3 = x1 x2 x3"));
  CHECK(same.status == CheckStatus::holds);

  CheckOptions tight;
  tight.budget = 100;
  CHECK(check_identity_exhaustive(b, id("x1 x2 x3 = x3 x2 x1"), tight).status ==
        CheckStatus::budget_exceeded);
}

TEST_CASE("exhaustive check agrees with the brute-force oracle") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  std::vector<FiniteAlgebra> algebras = {brandt_monoid_b21(), s3,
                                         brandt_semigroup(make_group(GroupSpec::cyclic(2)), 2),
                                         multiplicative_reduct(hall_semiring(2))};
  std::vector<char const*> identities = {
      "x1 x2 = x2 x1",          "x1^2 = x1^3",         "x1 x2 x1 = x1",
      "x1 x2 x3 = x1 x3 x2",    "x1^2 x2 = x2 x1^2",   "x1 x2 x1 x2 = x2 x1 x2 x1",
      "x1^6 = x1^12",           "x1 x2 x2 x1 = x2 x1 x1 x2"};
  for (auto const& alg : algebras) {
    for (auto const* text : identities) {
      auto const identity = id(text);
      auto const lhs      = identity.lhs.flatten(1000);
      auto const rhs      = identity.rhs.flatten(1000);
      auto const want     = oracle::first_counterexample(alg, lhs, rhs);
      for (unsigned w : {1u, 3u}) {
        auto const got = check_identity_exhaustive(alg, identity, with_workers(w));
        CAPTURE(text);
        CAPTURE(w);
        REQUIRE(got.refuted() == bool(want));
        if (want) {
          std::vector<Element> values;
          for (auto const& [var, x] : want->first) values.push_back(x);
          CHECK(got.witness->values() == values);
          CHECK(got.evaluations == want->second + 1);
        }
      }
    }
  }
}

TEST_CASE("domains") {
  auto const b = b21_reduct();
  CheckOptions o;
  o.default_domain = {b.at("0"), b.at("1"), b.at("e"), b.at("f")};
  CHECK(check_identity_exhaustive(b, id("x1 x2 = x2 x1"), o).status == CheckStatus::holds);
  o.domains[Variable{2}] = {b.at("a")};
  auto const v = check_identity_exhaustive(b, id("x1 x2 = x2 x1"), o);
  REQUIRE(v.refuted());
  CHECK(v.witness->values()[1] == b.at("a"));
}

TEST_CASE("unit and star in identities") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  CHECK(check_identity_exhaustive(s3, id("x1^6 = 1")).status == CheckStatus::holds);
  CHECK(check_identity_exhaustive(s3, id("x1 x1' = 1")).status == CheckStatus::holds);
  CHECK(check_identity_exhaustive(s3, id("x1^3 = 1")).refuted());
  auto const b2 = brandt_semigroup(make_group(GroupSpec::cyclic(1)), 2);
  CHECK_THROWS_AS(check_identity_exhaustive(b2, id("x1 = 1")), MissingIdentity);
  CHECK_THROWS_AS(check_identity_exhaustive(b21_reduct(), id("x1' = x1")), MissingStar);
}

TEST_CASE("group identities of the v-family") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const v  = check_identity_exhaustive(s3, id("v[1,6,2] = 1"));
  CHECK(v.status == CheckStatus::holds);
  CHECK(v.evaluations == 1296);

  auto const a3 = normalized({0, s3.at("(123)"), s3.at("(132)")});
  auto const p  = check_predicate_exhaustive(s3, parse_expr("v[1,6,1]"), [&](Element x) {
    return std::binary_search(a3.begin(), a3.end(), x);
  });
  CHECK(p.status == CheckStatus::holds);
  CHECK(p.evaluations == 36);
  CHECK(check_predicate_exhaustive(s3, parse_expr("x1 x2"), [](Element x) { return x == 0; })
            .refuted());

  auto const z4 = make_group(GroupSpec::cyclic(4));
  CHECK(check_identity_exhaustive(z4, id("v[1,4,1] = 1")).status == CheckStatus::holds);
  CHECK(check_identity_exhaustive(z4, id("v[2,4,1] = 1")).status == CheckStatus::holds);
  CHECK(find_identity_violation(z4, id("v[1,4,1] = 1"), SearchStrategy::exhaustive).status ==
        CheckStatus::holds);
}

TEST_CASE("block check is exact") {
  auto const b2 = brandt_semigroup(make_group(GroupSpec::cyclic(1)), 2);
  auto const v  = check_identity_block(b2, id("v[2,2,3] = v[2,2,3]^2"));
  CHECK(v.status == CheckStatus::holds);
  CHECK(v.method == "block");

  // agreement with the exhaustive checker wherever both apply
  auto const s3 = make_group(GroupSpec::symmetric(3));
  for (auto const& alg : {brandt_monoid_b21(), s3, b2,
                          brandt_semigroup(make_group(GroupSpec::cyclic(2)), 2),
                          kadourek_semigroup(2, 1).algebra}) {
    for (auto const* text : {"v[1,1,1] = v[1,1,1]^2", "v[1,2,1] = v[1,2,1]^2", "v[2,1,1] = v[2,1,1]^3",
                             "v[1,1,2] = v[1,1,2]^2", "v[1,6,1] = 1"}) {
      auto const identity = id(text);
      if (identity.uses_one() && !find_identity(alg)) continue;
      CheckOptions o;
      o.budget         = 50'000'000;
      auto const exact = check_identity_exhaustive(alg, identity, o);
      if (exact.status == CheckStatus::budget_exceeded) continue;
      auto const block = check_identity_block(alg, identity);
      CAPTURE(text);
      CHECK(block.refuted() == exact.refuted());
      if (block.refuted() && block.witness) CHECK(witness_refutes(alg, identity, *block.witness));
    }
  }

  // value sets against brute force
  for (auto const& alg : {brandt_monoid_b21(), s3}) {
    auto const w = v_word(1, 1, 2);
    auto const f = w.flatten(100);
    std::set<Element> want;
    oracle::for_each_assignment(w.alphabet(), oracle::carrier(alg), [&](auto const& a) {
      want.insert(oracle::eval(alg, f, a));
      return true;
    });
    CHECK(vword_values(alg, {1, 1, 2}, oracle::carrier(alg)) == ElementSet(want.begin(), want.end()));
  }

  CHECK(is_block_identity(id("v[2,3,4]^2 = v[2,3,4]^5")));
  CHECK_FALSE(is_block_identity(id("v[2,3,4] = v[2,3,5]")));
  CHECK_FALSE(is_block_identity(id("x1 = x1^2")));
  CHECK_THROWS_AS(check_identity_block(s3, id("x1 = x1^2")), PreconditionFailed);
}

TEST_CASE("sampling") {
  auto const b  = brandt_monoid_b21();
  auto const v1 = check_identity_sampled(b, id("x1 x2 = x2 x1"), 1000, 5);
  CHECK(v1.refuted());
  REQUIRE(v1.witness);
  CHECK(witness_refutes(b, id("x1 x2 = x2 x1"), *v1.witness));
  auto const v2 = check_identity_sampled(b, id("x1 x2 = x2 x1"), 1000, 5);
  CHECK(v2.witness == v1.witness);
  CHECK(v1.seed == 5u);

  auto const ok = check_identity_sampled(b, id("x1^2 = x1^4"), 1000, 1);
  CHECK(ok.status == CheckStatus::no_counterexample_found);

  auto const big = check_identity_sampled(b, id("v[2,4,5] = v[2,4,5]^2"), 2000, 1);
  CHECK(big.status == CheckStatus::no_counterexample_found);
  CHECK(big.evaluations == 2000);

  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const p  = multiplicative_reduct(power_semiring(s3));
  CHECK(check_identity_sampled(p, id("v[2,4,5] = v[2,4,5]^2"), 2000, 1).status ==
        CheckStatus::no_counterexample_found);
}

TEST_CASE("counter-based generator") {
  CHECK(mix(1, 0) != mix(1, 1));
  CHECK(mix(1, 0) != mix(2, 0));
  CHECK(mix(3, 4) == mix(3, 4));
  std::vector<std::uint64_t> hist(6, 0);
  for (std::uint64_t i = 0; i < 60000; ++i) ++hist[bounded(mix(9, i), 6)];
  for (auto h : hist) CHECK((h > 9000 && h < 11000));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto const u = unit_interval(mix(2, i));
    CHECK((u >= 0.0 && u < 1.0));
  }
}

TEST_CASE("violation search") {
  auto const k = kadourek_semigroup(2, 1);
  auto const identity = id("v[2,1,1] = v[2,1,1]^2");
  SearchOptions o;
  o.generators = k.generators;
  for (auto s : {SearchStrategy::exhaustive, SearchStrategy::generator_biased}) {
    auto const v = find_identity_violation(k.algebra, identity, s, o);
    REQUIRE(v.refuted());
    REQUIRE(v.witness);
    CHECK(witness_refutes(k.algebra, identity, *v.witness));
  }
  CHECK(strategy_from_string("generator-biased") == SearchStrategy::generator_biased);
  CHECK(to_string(SearchStrategy::sampled) == "sampled");
  CHECK_THROWS(strategy_from_string("magic"));

  auto const null = FiniteAlgebra(AlgebraKind::semigroup, {"0", "1"}, Table(2));
  auto const n    = find_identity_violation(null, id("x1 = x2"), SearchStrategy::exhaustive);
  REQUIRE(n.refuted());
  CHECK(n.witness->values() == std::vector<Element>{0, 1});
}

TEST_CASE("morphisms") {
  auto const b = brandt_monoid_b21();
  std::vector<Element> swap = {0, 1, 2, 3, 5, 4};
  auto const bad = verify_morphism(b, b, swap, Signature{});
  CHECK_FALSE(bad);
  CHECK(bad.op == "mul");
  CHECK(bad.witness == std::vector<Element>{b.at("a"), b.at("b")});
  CHECK(bad.injective);
  CHECK(bad.surjective);

  std::vector<Element> identity_map = {0, 1, 2, 3, 4, 5};
  CHECK(verify_morphism(b, b, identity_map, Signature{true, true, true}));
  CHECK_THROWS_AS(verify_morphism(b, b, std::vector<Element>{0, 1}, Signature{}), MapNotTotal);
  CHECK_THROWS_AS(verify_morphism(b, b21_reduct(), identity_map, Signature{true, true, false}),
                  MissingTable);

  std::map<std::string, std::string> labels = {{"0", "0"}, {"1", "1"}, {"a", "a"},
                                               {"b", "b"}, {"e", "e"}};
  CHECK_THROWS_AS(verify_morphism(b, b, labels, Signature{}), MapNotTotal);
  labels["f"] = "f";
  CHECK(verify_morphism(b, b, labels, Signature{true, true, true}));

  // the subset B maps onto B21
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const sb = subset_b(s3, mask_of({0, s3.at("(12)")}), s3.at("(13)"));
  auto const alg = subset_b_algebra(s3, sb);
  std::vector<Element> f;
  for (auto const& t : subset_b_targets(sb)) f.push_back(b.at(t));
  auto const r = verify_morphism(alg, b, f, Signature{true, true, false});
  CHECK(r);
  CHECK(r.surjective);
  CHECK_FALSE(r.injective);
}

TEST_CASE("verdict json") {
  auto const b = brandt_monoid_b21();
  auto const c = check_identity_exhaustive(b, id("x1 x2 = x2 x1"));
  auto const j = c.to_json(b);
  CHECK(j.at("status") == "counterexample");
  CHECK(j.at("witness").at("x1") == "a");
  CHECK(j.at("witness").at("x2") == "b");
}
