#include <doctest.h>

#include <array>
#include <bit>
#include <map>

#include "bglab/analysis.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "bglab/validate.hpp"
#include "oracles.hpp"

using namespace bglab;

namespace {

  using Mat2 = std::array<int, 4>;  // row-major Boolean 2x2

  Mat2 mat_mul(Mat2 x, Mat2 y) {
    Mat2 z{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) z[i * 2 + j] |= x[i * 2 + k] & y[k * 2 + j];
    return z;
  }

  std::map<std::string, Mat2> const b21_matrices = {
      {"0", {0, 0, 0, 0}}, {"1", {1, 0, 0, 1}}, {"a", {0, 1, 0, 0}},
      {"b", {0, 0, 1, 0}}, {"e", {1, 0, 0, 0}}, {"f", {0, 0, 0, 1}},
  };

  std::string label_of(Mat2 m) {
    for (auto const& [l, x] : b21_matrices)
      if (x == m) return l;
    return "?";
  }

  // true iff the two semigroups are isomorphic (brute force over bijections)
  bool isomorphic(FiniteAlgebra const& s, FiniteAlgebra const& t) {
    if (s.size() != t.size()) return false;
    std::vector<Element> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (Element x = 0; x < s.size() && ok; ++x)
        for (Element y = 0; y < s.size() && ok; ++y) ok = p[s.mul(x, y)] == t.mul(p[x], p[y]);
      if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

}  // namespace

TEST_CASE("brandt semigroups") {
  auto const trivial = make_group(GroupSpec::cyclic(1));
  auto const z2      = make_group(GroupSpec::cyclic(2));
  CHECK(brandt_semigroup(trivial, 2).size() == 5);
  CHECK(brandt_semigroup(z2, 2).size() == 9);

  for (auto const& [g, n] : std::vector<std::pair<FiniteAlgebra, unsigned>>{
           {trivial, 2}, {trivial, 3}, {z2, 2}, {make_group(GroupSpec::symmetric(3)), 2}}) {
    auto const b = brandt_semigroup(g, n);
    CHECK_FALSE(validate(b));
    // product oracle: (l,g,r)(l',g',r') = (l, gg', r') when r = l', else 0
    for (Element x = 0; x < b.size(); ++x) {
      auto const cx = brandt_coordinates(g.size(), n, x);
      CHECK(brandt_index(g.size(), n, cx) == x);
      for (Element y = 0; y < b.size(); ++y) {
        auto const    cy = brandt_coordinates(g.size(), n, y);
        BrandtElement want;
        if (!cx.zero && !cy.zero && cx.right == cy.left) {
          want = {false, cx.left, g.mul(cx.group, cy.group), cy.right};
        }
        CHECK(brandt_coordinates(g.size(), n, b.mul(x, y)) == want);
      }
    }
  }

  auto const b   = brandt_semigroup(z2, 2);
  auto const x12 = b.at("(1,e,2)");
  auto const y12 = b.at("(1,a,2)");
  CHECK(b.mul(x12, y12) == 0);
  CHECK(b.mul(x12, x12) == 0);
}

TEST_CASE("the six-element Brandt monoid") {
  auto const b = brandt_monoid_b21();
  REQUIRE(b.size() == 6);
  CHECK(b.kind() == AlgebraKind::involution_ai_semiring);
  for (Element x = 0; x < 6; ++x) {
    auto const mx = b21_matrices.at(b.label(x));
    Mat2       tx = {mx[0], mx[2], mx[1], mx[3]};
    CHECK(b.label(b.star(x)) == label_of(tx));
    for (Element y = 0; y < 6; ++y) {
      auto const my = b21_matrices.at(b.label(y));
      CHECK(b.label(b.mul(x, y)) == label_of(mat_mul(mx, my)));
      Mat2 h{};
      for (int i = 0; i < 4; ++i) h[i] = mx[i] & my[i];
      CHECK(b.label(b.add(x, y)) == label_of(h));
    }
  }
  CHECK(b.mul(b.at("a"), b.at("b")) == b.at("e"));
  CHECK(b.mul(b.at("b"), b.at("a")) == b.at("f"));
  CHECK(b.add(b.at("1"), b.at("e")) == b.at("e"));
  CHECK(b.add(b.at("a"), b.at("b")) == b.at("0"));
  CHECK(b.star(b.at("a")) == b.at("b"));
  CHECK(b.star(b.at("e")) == b.at("e"));
  CHECK_FALSE(validate(b));
}

TEST_CASE("power semirings") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const p  = power_semiring(s3);
  REQUIRE(p.size() == 64);
  CHECK(p.kind() == AlgebraKind::ai_semiring);
  CHECK_FALSE(validate(p));

  // subset product oracle on masks
  for (Element x = 0; x < 64; ++x) {
    CHECK(subset_mask(p, x) == x);
    for (Element y = 0; y < 64; ++y) {
      SubsetMask want = 0;
      for (Element g : members_of(x))
        for (Element h : members_of(y)) want |= SubsetMask(1) << s3.mul(g, h);
      CHECK(subset_mask(p, p.mul(x, y)) == want);
      CHECK(subset_mask(p, p.add(x, y)) == (x | y));
    }
  }
  auto const h = subset_element(p, mask_of({0, s3.at("(12)")}));
  CHECK(p.mul(h, h) == h);
  CHECK(subset_label(s3, mask_of({0, s3.at("(12)")})) == "{e,(12)}");
  CHECK(subset_product(s3, mask_of({s3.at("(12)")}), mask_of({s3.at("(12)")})) == 1);

  auto const nonempty = power_semiring(s3, true);
  CHECK(nonempty.size() == 63);
  CHECK_FALSE(validate(nonempty));

  auto const inv = involution_power(s3);
  CHECK(inv.kind() == AlgebraKind::involution_semigroup);
  CHECK_FALSE(validate(inv));
  auto const c = subset_element(inv, mask_of({s3.at("(123)")}));
  CHECK(subset_mask(inv, inv.star(c)) == mask_of({s3.at("(132)")}));
  CHECK(inv.star(subset_element(inv, 0)) == subset_element(inv, 0));
  auto const a3 = subset_element(inv, mask_of({0, s3.at("(123)"), s3.at("(132)")}));
  CHECK(inv.star(a3) == a3);

  Budgets tight;
  tight.power_bits = 4;
  CHECK_THROWS_AS(power_semiring(s3, false, tight), CarrierTooLarge);
}

TEST_CASE("hall semirings") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto const hall     = hall_semiring(n);
    auto const patterns = oracle::hall_patterns(n);
    REQUIRE(hall.size() == patterns.size());
    for (Element x = 0; x < hall.size(); ++x) CHECK(hall_matrix(hall, x).bits == patterns[x]);
    CHECK_FALSE(validate(hall));
  }
  CHECK(hall_semiring(1).size() == 1);
  CHECK(hall_semiring(2).size() == 7);
  CHECK_FALSE(hall_semiring(2, false).has_star());

  auto const m = BoolMatrix::from_rows({{0, 1}, {1, 1}});
  CHECK(m.has_positive_permanent());
  CHECK(BoolMatrix::from_rows({{1, 1}, {0, 1}}).transposed() ==
        BoolMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK_FALSE(BoolMatrix::from_rows({{1, 1}, {0, 0}}).has_positive_permanent());
  CHECK((m * m) == BoolMatrix::from_rows({{1, 1}, {1, 1}}));
}

TEST_CASE("the subset B") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const h  = mask_of({0, s3.at("(12)")});
  auto const b  = subset_b(s3, h, s3.at("(13)"));
  std::size_t big = 0;
  for (SubsetMask x = 0; x < 64; ++x) big += std::popcount(x) > 2;
  CHECK(big == 42);
  CHECK(b.carrier.size() == 5 + big);
  CHECK(b.left_coset != b.right_coset);
  CHECK(b.subgroup == h);
  CHECK(subset_b_targets(b).size() == b.carrier.size());

  auto const alg = subset_b_algebra(s3, b);
  CHECK(alg.size() == 47);
  CHECK_FALSE(validate(alg));

  auto const a3 = mask_of({0, s3.at("(123)"), s3.at("(132)")});
  CHECK_THROWS_AS(subset_b(s3, a3, s3.at("(12)")), NormalSubgroup);
  CHECK_THROWS_AS(subset_b(s3, mask_of({0, s3.at("(123)")}), s3.at("(12)")), NotASubgroup);
}

TEST_CASE("Kadourek semigroups") {
  auto const k = kadourek_semigroup(2, 1);
  REQUIRE(k.points == 5);
  REQUIRE(k.maps.size() == 2);
  PartialInjection chi1(5), chi2(5);
  chi1.set(0, 1);
  chi1.set(3, 2);
  chi2.set(1, 2);
  chi2.set(4, 3);
  CHECK(k.maps[0] == chi1);
  CHECK(k.maps[1] == chi2);
  CHECK_FALSE(validate(k.algebra));
  CHECK(unique_inverse_check(k.algebra));
  for (Element x = 0; x < k.algebra.size(); ++x) CHECK(oracle::inverse_count(k.algebra, x) == 1);

  PartialInjection p(3);
  p.set(0, 1);
  CHECK_THROWS(p.set(2, 1));
  CHECK(p.then(p.inverse())(0) == 0u);
  CHECK_FALSE(p.then(p)(0));
}

TEST_CASE("subalgebra generation") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  CHECK(subalgebra_generate(s3, {0}) == ElementSet{0});

  auto const b  = brandt_monoid_b21();
  auto const ab = subalgebra_generate(b, normalized({b.at("a"), b.at("b")}), Signature{});
  CHECK(ab == normalized({b.at("0"), b.at("a"), b.at("b"), b.at("e"), b.at("f")}));
  std::set<Element> seeds{b.at("a"), b.at("b")};
  auto const        want = oracle::generated(b, seeds);
  CHECK(ab == ElementSet(want.begin(), want.end()));
  CHECK(subalgebra_generate(b, oracle::carrier(b)) == oracle::carrier(b));

  // with addition 1 + a = 0 = a a
  CHECK(subalgebra_generate(b, {b.at("1"), b.at("a")}, Signature{true, true, false}) ==
        normalized({b.at("0"), b.at("1"), b.at("a")}));
}

TEST_CASE("Rees quotients and adjoined elements") {
  auto const b  = multiplicative_reduct(brandt_monoid_b21());
  ElementSet b2 = normalized({b.at("0"), b.at("a"), b.at("b"), b.at("e"), b.at("f")});
  auto const q  = rees_quotient(b, b2);
  REQUIRE(q.size() == 2);
  CHECK(q.mul(1, 1) == 1);
  CHECK(q.mul(0, 1) == 0);
  CHECK(rees_quotient(b, oracle::carrier(b)).size() == 1);
  try {
    rees_quotient(b, {b.at("a")});
    FAIL("ideal accepted");
  } catch (NotAnIdeal const& e) {
    REQUIRE(e.witness.size() == 2);
    CHECK(b.mul(e.witness[0], e.witness[1]) != b.at("a"));
  }

  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const p  = multiplicative_reduct(power_semiring(s3));
  auto const pz = adjoin_zero(multiplicative_reduct(power_semiring(s3, true)), "{}");
  REQUIRE(pz.size() == p.size());
  // under the subset labelling the tables coincide
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      CHECK(pz.label(pz.mul(x, y)) == p.label(p.mul(x, y)));

  auto const b2_alone = brandt_semigroup(make_group(GroupSpec::cyclic(1)), 2);
  auto const b2_one   = adjoin_identity(b2_alone);
  CHECK(b2_one.size() == 6);
  CHECK(isomorphic(b2_one, b));

  auto const one = FiniteAlgebra(AlgebraKind::semigroup, {"x"}, Table(1));
  auto const two = adjoin_zero(one);
  CHECK(two.size() == 2);
  CHECK(find_zero(two) == 0u);
  CHECK_FALSE(validate(two));
}

TEST_CASE("rebuild from meta") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  for (auto const& alg : {brandt_monoid_b21(), power_semiring(s3), involution_power(s3),
                          hall_semiring(2), brandt_semigroup(s3, 2),
                          kadourek_semigroup(2, 1).algebra}) {
    CHECK(rebuild_from_meta(alg.meta()) == alg);
  }
}
