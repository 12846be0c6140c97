#include <doctest.h>

#include "bglab/analysis.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "oracles.hpp"

using namespace bglab;

namespace {

  FiniteAlgebra table_semigroup(std::size_t n, std::vector<Element> cells) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return {AlgebraKind::semigroup, labels, Table(n, std::move(cells))};
  }

  FiniteAlgebra left_zero(std::size_t n) {
    std::vector<Element> cells;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) cells.push_back(x);
    return table_semigroup(n, cells);
  }

  // 2x2 rectangular band: (i,j)(k,l) = (i,l), element index 2i + j
  FiniteAlgebra rectangular_band() {
    std::vector<Element> cells;
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 4; ++y) cells.push_back((x / 2) * 2 + y % 2);
    return table_semigroup(4, cells);
  }

  FiniteAlgebra chain(std::size_t n) {
    std::vector<Element> cells;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) cells.push_back(std::min(x, y));
    return table_semigroup(n, cells);
  }

  FiniteAlgebra p_s3() {
    return multiplicative_reduct(power_semiring(make_group(GroupSpec::symmetric(3))));
  }

  ElementSet as_vector(std::set<Element> const& s) {
    return {s.begin(), s.end()};
  }

}  // namespace

TEST_CASE("idempotents") {
  auto const b = brandt_monoid_b21();
  CHECK(idempotents(b) ==
        normalized({b.at("0"), b.at("1"), b.at("e"), b.at("f")}));
  auto const p = p_s3();
  CHECK(idempotents(p).size() == 7);
  CHECK(idempotents(p) == as_vector(oracle::idempotents(p)));
  auto const s3 = make_group(GroupSpec::symmetric(3));
  CHECK(idempotents(s3) == ElementSet{0});
  // non-empty idempotents of P(G) are exactly the subgroups
  std::size_t subgroups_found = 0;
  for (auto const& h : oracle::subgroups(s3, 0)) {
    SubsetMask m = 0;
    for (auto x : h) m |= SubsetMask(1) << x;
    subgroups_found += p.mul(static_cast<Element>(m), static_cast<Element>(m)) == m;
  }
  CHECK(subgroups_found == 6);
  for (Element x = 0; x < p.size(); ++x) {
    auto const e = idempotent_power(p, x);
    CHECK(p.mul(e, e) == e);
  }
}

TEST_CASE("block-groups") {
  CHECK(is_block_group(p_s3()));
  CHECK(is_block_group(multiplicative_reduct(hall_semiring(2))));
  auto const lz = is_block_group(left_zero(2));
  CHECK_FALSE(lz);
  CHECK(lz.witness == std::vector<Element>{0, 1});
  CHECK(is_block_group(brandt_monoid_b21()));
}

TEST_CASE("inverses") {
  auto const b = brandt_monoid_b21();
  CHECK(inverses_of(b, b.at("a")) == ElementSet{b.at("b")});
  auto const s3 = make_group(GroupSpec::symmetric(3));
  for (Element g = 0; g < 6; ++g) CHECK(inverses_of(s3, g) == ElementSet{s3.star(g)});
  auto const rb = rectangular_band();
  for (Element x = 0; x < 4; ++x) CHECK(inverses_of(rb, x).size() == 4);
  CHECK_FALSE(unique_inverse_check(rb));
  CHECK(unique_inverse_check(b));
  CHECK(is_regular(b, b.at("a")));
  auto const null = table_semigroup(2, {0, 0, 0, 0});
  CHECK_FALSE(is_regular(null, 1));
}

TEST_CASE("J-triviality") {
  auto const p = p_s3();
  auto const e = idempotent_generated(p);
  CHECK(j_trivial(p, e));
  std::set<Element> seeds;
  for (auto x : oracle::idempotents(p)) seeds.insert(x);
  CHECK(e == as_vector(oracle::generated(p, seeds)));
  CHECK(oracle::j_trivial(p, std::set<Element>(e.begin(), e.end())));

  CHECK_FALSE(j_trivial(make_group(GroupSpec::cyclic(3))));
  CHECK(j_trivial(chain(3)));
  CHECK(j_trivial(make_group(GroupSpec::cyclic(1))));

  auto const b = brandt_monoid_b21();
  for (Element a = 0; a < b.size(); ++a) {
    auto const all  = oracle::carrier(b);
    auto const want = oracle::principal_ideal(b, std::set<Element>(all.begin(), all.end()), a);
    CHECK(principal_ideal(b, a) == as_vector(want));
  }
  auto const jc = j_classes(b);
  CHECK(jc.classes.size() == 3);
}

TEST_CASE("maximal subgroups") {
  auto const z2 = make_group(GroupSpec::cyclic(2));
  auto const b  = brandt_semigroup(z2, 2);
  auto const ms = maximal_subgroups(b);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].idempotent == 0);
  CHECK(ms[0].elements == ElementSet{0});
  CHECK(b.label(ms[1].idempotent) == "(1,e,1)");
  CHECK(ms[1].elements.size() == 2);
  CHECK(b.label(ms[2].idempotent) == "(2,e,2)");
  CHECK(ms[2].elements.size() == 2);

  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const p  = p_s3();
  auto const h  = static_cast<Element>(mask_of({0, s3.at("(12)")}));
  for (auto const& m : maximal_subgroups(p)) {
    if (m.idempotent == h) CHECK(m.elements.size() == 1);
    if (m.idempotent == 1) CHECK(m.elements.size() == 6);
  }
  auto const g = maximal_subgroups(s3);
  REQUIRE(g.size() == 1);
  CHECK(g[0].elements.size() == 6);
}

TEST_CASE("group analytics") {
  auto const s3 = group_analytics(make_group(GroupSpec::symmetric(3)));
  CHECK(s3.exponent == 6);
  CHECK(s3.derived_length == 2u);
  CHECK(s3.solvable);
  CHECK_FALSE(s3.dedekind);
  CHECK_FALSE(s3.has_quaternion_subgroup);

  auto const q8 = group_analytics(make_group(GroupSpec::quaternion8()));
  CHECK(q8.exponent == 4);
  CHECK(q8.derived_length == 2u);
  CHECK(q8.dedekind);
  CHECK(q8.has_quaternion_subgroup);

  auto const z4 = group_analytics(make_group(GroupSpec::cyclic(4)));
  CHECK(z4.exponent == 4);
  CHECK(z4.derived_length == 1u);
  CHECK(z4.dedekind);
  CHECK_FALSE(z4.has_quaternion_subgroup);

  // subgroup lists against the brute-force oracle
  for (auto const& spec : {GroupSpec::symmetric(3), GroupSpec::quaternion8(),
                           GroupSpec::dihedral(4), GroupSpec::cyclic(6)}) {
    auto const g    = make_group(spec);
    auto const mine = subgroups(g);
    auto const want = oracle::subgroups(g, 0);
    CHECK(mine.size() == want.size());
    for (auto const& h : want) CHECK(std::find(mine.begin(), mine.end(), as_vector(h)) != mine.end());
    CHECK(group_analytics(g).subgroup_count == want.size());
  }
  auto const s4 = make_group(GroupSpec::symmetric(4));
  CHECK(group_analytics(s4).derived_length == 3u);
  CHECK(group_analytics(make_group(GroupSpec::symmetric(5))).solvable == false);
  CHECK_THROWS_AS(group_analytics(make_group(GroupSpec::symmetric(5)), 60),
                  SubgroupEnumerationBudget);
  CHECK_THROWS_AS(group_analytics(brandt_monoid_b21()), NotAGroup);
}

TEST_CASE("normalizers and commutators") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const h  = normalized({0, s3.at("(12)")});
  CHECK(normalizer(s3, h) == h);
  CHECK(normalizer(s3, oracle::carrier(s3)) == oracle::carrier(s3));
  CHECK(normalizer(s3, normalized({0, s3.at("(123)"), s3.at("(132)")})) == oracle::carrier(s3));
  CHECK_THROWS_AS(normalizer(s3, normalized({0, s3.at("(123)")})), NotASubgroup);

  auto const a = s3.at("(12)"), b = s3.at("(13)");
  CHECK(commutator(s3, a, b) ==
        s3.mul(s3.mul(s3.star(a), s3.star(b)), s3.mul(a, b)));
  auto const ds = derived_series(s3);
  REQUIRE(ds.size() == 3);
  CHECK(ds[1].size() == 3);
  CHECK(ds[2].size() == 1);
  CHECK(describe_group(s3) == "S3");
  CHECK(describe_group(make_group(GroupSpec::cyclic(1))) == "trivial");
  CHECK(describe_group(make_group(GroupSpec::cyclic(4))) == "C4");
}

TEST_CASE("Brandt recognition") {
  auto const z2 = make_group(GroupSpec::cyclic(2));
  auto const b  = brandt_semigroup(z2, 2);
  auto const r  = is_brandt(b);
  REQUIRE(r);
  CHECK(r.index_count == 2);
  REQUIRE(r.group);
  CHECK(r.group->size() == 2);
  auto const target = brandt_semigroup(*r.group, r.index_count);
  for (Element x = 0; x < b.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) CHECK(r.iso[b.mul(x, y)] == target.mul(r.iso[x], r.iso[y]));

  CHECK_FALSE(is_brandt(table_semigroup(2, {0, 0, 0, 0})));
  CHECK_FALSE(is_brandt(multiplicative_reduct(brandt_monoid_b21())));
  CHECK(is_brandt(brandt_semigroup(make_group(GroupSpec::symmetric(3)), 3)));
}

TEST_CASE("principal series") {
  auto const b = multiplicative_reduct(brandt_monoid_b21());
  auto const s = principal_series(b);
  REQUIRE(s.chain.size() == 3);
  CHECK(s.chain[0] == ElementSet{b.at("0")});
  CHECK(s.chain[1].size() == 5);
  CHECK(s.chain[2].size() == 6);
  REQUIRE(s.factors.size() == 3);
  CHECK(s.factors[0].kind == FactorKind::group);
  CHECK(s.factors[1].kind == FactorKind::brandt);
  CHECK(s.factors[1].index_count == 2);
  CHECK(s.factors[2].kind == FactorKind::brandt);
  CHECK(s.factors[2].index_count == 1);
  CHECK(s.h == 2);
  CHECK(s.m == 1);
  CHECK(s.k == 1);
  CHECK(s.k_floored);
  CHECK(s.q == 4);
  CHECK(s.r == 5);
  CHECK(s.brandt_series);
  CHECK_FALSE(verify_series(b, s));

  auto const g = principal_series(make_group(GroupSpec::symmetric(3)));
  CHECK(g.h == 0);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].kind == FactorKind::group);

  auto const bz = principal_series(brandt_semigroup(make_group(GroupSpec::cyclic(2)), 2));
  CHECK(bz.h == 1);
  CHECK(bz.m == 2);
  CHECK(bz.k == 1);
  CHECK(bz.q == 4);
  CHECK(bz.r == 3);

  auto const ps = principal_series(p_s3());
  CHECK(ps.h == 9);
  CHECK(ps.m == 6);
  CHECK(ps.k == 2);
  CHECK(ps.q == 3072);
  CHECK(ps.r == 29);
  CHECK_FALSE(verify_series(p_s3(), ps));

  CHECK(series_q(2, 1) == 4);
  CHECK(series_r(2, 1) == 5);
  CHECK(series_q(200, 1) == UINT64_MAX);

  // a series with a wrong chain is rejected
  auto broken = s;
  broken.chain[1] = {b.at("0"), b.at("a")};
  CHECK(verify_series(b, broken));

  CHECK_FALSE(principal_series(rectangular_band()).brandt_series);
}

TEST_CASE("fd property and aperiodicity") {
  auto const b  = multiplicative_reduct(brandt_monoid_b21());
  ElementSet b2 = normalized({b.at("0"), b.at("a"), b.at("b"), b.at("e"), b.at("f")});
  CHECK(fd_property(b, b2));
  auto const bz = brandt_semigroup(make_group(GroupSpec::cyclic(2)), 2);
  CHECK(fd_property(bz, oracle::carrier(bz)));
  auto const lz0 = adjoin_zero(left_zero(2), "z");
  CHECK_THROWS_AS(fd_property(lz0, {0}), PreconditionFailed);

  CHECK(aperiodic_index(b) == 2u);
  CHECK(aperiodic_index(chain(3)) == 1u);
  CHECK_FALSE(aperiodic_index(make_group(GroupSpec::cyclic(2))));
}

TEST_CASE("analysis report") {
  auto const j = analysis_report(brandt_monoid_b21());
  CHECK(j.at("block_group") == true);
  auto const s3 = analysis_report(make_group(GroupSpec::symmetric(3)));
  CHECK(s3.at("solvable") == true);
  CHECK(s3.at("derived_length") == 2);
  CHECK(s3.at("dedekind") == false);
}
