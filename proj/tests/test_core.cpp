#include <doctest.h>

#include <array>
#include <filesystem>
#include <numeric>

#include "bglab/algebra.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "bglab/io.hpp"
#include "bglab/validate.hpp"
#include "oracles.hpp"

using namespace bglab;

namespace {

  FiniteAlgebra semigroup_of(std::size_t n, std::vector<Element> cells) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
    }
    return FiniteAlgebra(AlgebraKind::semigroup, labels, Table(n, std::move(cells)));
  }

  // Composition of permutations of {0..n-1} given as image lists; the
  // product applies p first.
  std::vector<int> compose(std::vector<int> const& p, std::vector<int> const& q) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] = q[static_cast<std::size_t>(p[i])];
    }
    return out;
  }

}  // namespace

TEST_CASE("table and algebra invariants") {
  Table t(2, {0, 1, 1, 0});
  CHECK(t(0, 1) == 1);
  CHECK(t.row(1)[0] == 1);
  CHECK_THROWS_AS(Table(2, {0, 1, 1}), InvalidAlgebra);

  CHECK_THROWS_AS(semigroup_of(2, {0, 2, 1, 0}), InvalidAlgebra);
  CHECK_THROWS_AS(FiniteAlgebra(AlgebraKind::semigroup, {"x", "x"}, Table(2)), InvalidAlgebra);
  CHECK_THROWS_AS(FiniteAlgebra(AlgebraKind::ai_semiring, {"x"}, Table(1)), InvalidAlgebra);
  CHECK_THROWS_AS(FiniteAlgebra(AlgebraKind::semigroup, {"x"}, Table(1), Table(1)),
                  InvalidAlgebra);

  auto const b = brandt_monoid_b21();
  CHECK(b.at("e") == 4);
  CHECK_FALSE(b.find("nope"));
  CHECK_THROWS(b.at("nope"));
  CHECK(find_identity(b) == b.at("1"));
  CHECK(find_zero(b) == b.at("0"));
  CHECK(format_set(b, {2, 3}) == "{a,b}");
  CHECK(multiplicative_reduct(b).kind() == AlgebraKind::semigroup);
}

TEST_CASE("kind names round trip") {
  for (auto k : {AlgebraKind::semigroup, AlgebraKind::ai_semiring,
                 AlgebraKind::involution_semigroup, AlgebraKind::involution_ai_semiring}) {
    CHECK(kind_from_string(to_string(k)) == k);
    CHECK(kind_for(kind_has_add(k), kind_has_star(k)) == k);
  }
  CHECK_THROWS(kind_from_string("monoid"));
}

TEST_CASE("ideals and induced subalgebras") {
  auto const b  = brandt_monoid_b21();
  ElementSet b2 = {b.at("0"), b.at("a"), b.at("b"), b.at("e"), b.at("f")};
  CHECK(is_ideal(b, normalized(b2)));
  auto const v = ideal_violation(b, {b.at("a")});
  REQUIRE(v);
  auto const [x, y] = *v;
  CHECK_FALSE(b.mul(x, y) == b.at("a"));

  auto const sub = induced_subalgebra(b, b2, Signature{true, true, true});
  CHECK(sub.size() == 5);
  CHECK(sub.label(0) == "0");
  CHECK_THROWS_AS(induced_subalgebra(b, {b.at("a"), b.at("b")}, Signature{}), InvalidAlgebra);
}

TEST_CASE("validate_semigroup") {
  CHECK_FALSE(validate_semigroup(brandt_monoid_b21()));
  CHECK_FALSE(validate_semigroup(semigroup_of(1, {0})));

  // 0*0 = 1, every other product 0; associative at (0,0,0), not at (0,0,1)
  auto const bad = semigroup_of(2, {1, 0, 0, 0});
  REQUIRE_FALSE(oracle::associative(bad));
  auto const v = validate_semigroup(bad);
  REQUIRE(v);
  CHECK(v->law == "mul-assoc");
  CHECK(v->witness == std::vector<Element>{0, 0, 1});
  CHECK(replays(bad, *v));
  CHECK_FALSE(describe(bad, *v).empty());
}

TEST_CASE("validate_ai_semiring") {
  CHECK_FALSE(validate_ai_semiring(brandt_monoid_b21()));

  // the 3-element chain with mul = add = max
  Table chain(3);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      chain.at(x, y) = std::max(x, y);
    }
  }
  FiniteAlgebra semilattice(AlgebraKind::ai_semiring, {"0", "1", "2"}, chain, chain);
  CHECK_FALSE(validate_ai_semiring(semilattice));

  FiniteAlgebra xor_add(AlgebraKind::ai_semiring, {"0", "1"}, Table(2, {0, 0, 0, 1}),
                        Table(2, {0, 1, 1, 0}));
  auto const v = validate_ai_semiring(xor_add);
  REQUIRE(v);
  CHECK(v->law == "add-idem");
  CHECK(v->witness == std::vector<Element>{1});
  CHECK(replays(xor_add, *v));

  CHECK_THROWS_AS(validate_ai_semiring(semigroup_of(1, {0})), MissingTable);
}

TEST_CASE("validate_involution") {
  CHECK_FALSE(validate_involution(brandt_monoid_b21()));

  // Z3 written additively; the identity map is an involution because the
  // table is commutative
  Table z3(3);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      z3.at(x, y) = (x + y) % 3;
    }
  }
  FiniteAlgebra z3_id(AlgebraKind::involution_semigroup, {"0", "1", "2"}, z3, std::nullopt,
                      std::vector<Element>{0, 1, 2});
  CHECK_FALSE(validate_involution(z3_id));

  // swapping e and f is an anti-automorphism of B21 (transpose composed
  // with conjugation by the swap matrix)
  auto const b = brandt_monoid_b21();
  FiniteAlgebra ef_swap(AlgebraKind::involution_semigroup, b.labels(), b.mul_table(),
                        std::nullopt, std::vector<Element>{0, 1, 2, 3, 5, 4});
  CHECK_FALSE(validate_involution(ef_swap));

  // the identity map is not: (ab)* = e but b*a* = f
  std::vector<Element> star = {0, 1, 2, 3, 4, 5};
  FiniteAlgebra swapped(AlgebraKind::involution_semigroup, b.labels(), b.mul_table(),
                        std::nullopt, star);
  auto const v = validate_involution(swapped);
  REQUIRE(v);
  CHECK(replays(swapped, *v));
  // oracle: the first failing pair of (xy)* = y*x* in index order
  std::optional<std::pair<Element, Element>> first;
  for (Element x = 0; x < 6 && !first; ++x) {
    for (Element y = 0; y < 6 && !first; ++y) {
      if (star[b.mul(x, y)] != b.mul(star[y], star[x])) {
        first = {x, y};
      }
    }
  }
  REQUIRE(first);
  CHECK(v->law == "star-anti");
  CHECK(v->witness == std::vector<Element>{first->first, first->second});

  CHECK_THROWS_AS(validate_involution(semigroup_of(1, {0})), MissingTable);
}

TEST_CASE("groups agree with a permutation oracle") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  REQUIRE(s3.size() == 6);
  CHECK(s3.label(0) == "e");
  CHECK_FALSE(validate(s3));

  // rebuild every product from the images of the permutations
  std::vector<std::vector<int>> perms;
  std::vector<int>              p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  bool commutative = true;
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      auto const xy = compose(perms[x], perms[y]);
      auto const yx = compose(perms[y], perms[x]);
      auto const ix = std::find(perms.begin(), perms.end(), xy) - perms.begin();
      auto const iy = std::find(perms.begin(), perms.end(), yx) - perms.begin();
      // either composition convention gives the same table up to transpose
      CHECK((s3.mul(x, y) == ix || s3.mul(x, y) == iy));
      commutative = commutative && s3.mul(x, y) == s3.mul(y, x);
    }
  }
  CHECK_FALSE(commutative);

  auto const info = require_group(s3);
  CHECK(info.identity == 0);
  for (Element x = 0; x < 6; ++x) {
    CHECK(s3.mul(x, info.inverse[x]) == 0);
    CHECK(s3.star(x) == info.inverse[x]);
    CHECK(element_order(s3, info, x) == oracle::order(s3, 0, x));
  }
  CHECK(s3.star(s3.at("(123)")) == s3.at("(132)"));
  CHECK(subgroup_closure(s3, info, {s3.at("(123)")}).size() == 3);
  CHECK(subgroup_closure(s3, info, {s3.at("(12)"), s3.at("(13)")}).size() == 6);
  CHECK(is_subgroup(s3, info, normalized({0, s3.at("(12)")})));
  CHECK_FALSE(is_subgroup(s3, info, normalized({0, s3.at("(123)")})));
}

TEST_CASE("group families") {
  CHECK(make_group(GroupSpec::cyclic(1)).size() == 1);
  for (unsigned n = 1; n <= 8; ++n) {
    auto const c = make_group(GroupSpec::cyclic(n));
    CHECK(oracle::associative(c));
    CHECK(oracle::order(c, 0, n > 1 ? 1 : 0) == n);
  }
  auto const q8 = make_group(GroupSpec::quaternion8());
  CHECK(oracle::associative(q8));
  std::size_t involutions = 0;
  for (Element x = 1; x < 8; ++x) {
    involutions += oracle::order(q8, 0, x) == 2;
  }
  CHECK(involutions == 1);
  auto const i = q8.at("i"), j = q8.at("j"), k = q8.at("k"), m = q8.at("-1");
  CHECK(q8.mul(i, i) == m);
  CHECK(q8.mul(j, j) == m);
  CHECK(q8.mul(q8.mul(i, j), k) == m);

  auto const d4 = make_group(GroupSpec::dihedral(4));
  CHECK(d4.size() == 8);
  CHECK(oracle::associative(d4));

  CHECK_THROWS_AS(make_group(GroupSpec::symmetric(6)), UnsupportedSize);
  CHECK_THROWS_AS(make_group(GroupSpec::cyclic(0)), UnsupportedSize);
  CHECK(GroupSpec::parse("Z4") == GroupSpec::cyclic(4));
  CHECK(GroupSpec::parse("Q8") == GroupSpec::quaternion8());
  CHECK(GroupSpec::from_json(GroupSpec::dihedral(3).to_json()) == GroupSpec::dihedral(3));
  CHECK_THROWS(GroupSpec::parse("X9"));

  CHECK_THROWS_AS(require_group(brandt_monoid_b21()), NotAGroup);
  CHECK_FALSE(group_structure(brandt_monoid_b21()));
}

TEST_CASE("json round trip") {
  for (auto const& alg : {brandt_monoid_b21(), make_group(GroupSpec::symmetric(3)),
                          hall_semiring(2), semigroup_of(2, {0, 0, 0, 1})}) {
    auto const j = to_json(alg);
    CHECK(from_json(j) == alg);
    CHECK(dump_algebra(from_json(j)) == dump_algebra(alg));
  }

  auto j    = to_json(brandt_monoid_b21());
  j["mul"][0][0] = 17;
  CHECK_THROWS_AS(from_json(j), InvalidAlgebra);
  auto k = to_json(brandt_monoid_b21());
  k.erase("labels");
  CHECK_THROWS_AS(from_json(k), InvalidAlgebra);
}

TEST_CASE("files, plain and compressed") {
  auto const dir = std::filesystem::temp_directory_path() / "bglab_test_core";
  std::filesystem::create_directories(dir);
  auto const b = brandt_monoid_b21();
  for (auto const* name : {"b21.json", "b21.json.gz"}) {
    auto const path = dir / name;
    save_algebra(path, b);
    CHECK(load_algebra(path) == b);
  }
  CHECK(read_text(dir / "b21.json") == dump_algebra(b));
  CHECK(element_set_from_json(b, nlohmann::json::parse(R"(["e", 3, "0"])")) ==
        ElementSet{0, 3, 4});
  CHECK_THROWS(element_set_from_json(b, nlohmann::json::parse(R"(["zz"])")));
  std::filesystem::remove_all(dir);
}

TEST_CASE("budget defaults") {
  auto const& b = default_budgets();
  CHECK(b.max_carrier == 8192);
  CHECK(b.word_length == 1'000'000);
}
