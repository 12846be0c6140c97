#include <doctest.h>

#include <random>

#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/expr.hpp"
#include "bglab/group.hpp"
#include "bglab/parser.hpp"
#include "bglab/terms.hpp"
#include "oracles.hpp"

using namespace bglab;

namespace {

  Letter pos(std::initializer_list<std::uint32_t> idx) {
    return {Variable(idx), false};
  }
  Letter neg(std::initializer_list<std::uint32_t> idx) {
    return {Variable(idx), true};
  }

  Term word(std::vector<std::vector<std::uint32_t>> const& idx) {
    std::vector<Variable> vars;
    for (auto const& i : idx) vars.emplace_back(i);
    return Term::word(vars);
  }

  Term repeat(Term const& t, std::uint64_t k) {
    Term out;
    for (std::uint64_t i = 0; i < k; ++i) out = out * t;
    return out;
  }

  // v_{n,m}^{(h)} straight from its recursive definition, on flat terms.
  Term v_reference(unsigned n, std::uint64_t m, unsigned h) {
    std::vector<Term> blocks;
    for (unsigned j = 1; j <= 2 * n; ++j) {
      if (h == 1) {
        blocks.push_back(Term::word({Variable{j}}));
        continue;
      }
      std::vector<Letter> letters;
      auto const          lower = v_reference(n, m, h - 1);
      for (auto l : lower.letters()) {
        l.var.index.push_back(j);
        letters.push_back(l);
      }
      blocks.emplace_back(letters);
    }
    Term head, tail;
    for (unsigned j = 0; j < 2 * n; ++j) head = head * blocks[j];
    for (unsigned j = n; j-- > 0;) tail = tail * blocks[j];
    for (unsigned j = n; j < 2 * n; ++j) tail = tail * blocks[j];
    return head * repeat(tail, 2 * m - 1);
  }

  oracle::Assignment random_assignment(std::vector<Variable> const& vars, std::size_t size,
                                       std::mt19937_64& rng) {
    oracle::Assignment a;
    std::uniform_int_distribution<Element> d(0, static_cast<Element>(size - 1));
    for (auto const& v : vars) a[v] = d(rng);
    return a;
  }

  Substitution to_substitution(oracle::Assignment const& a) {
    std::vector<Variable> vars;
    std::vector<Element>  vals;
    for (auto const& [v, x] : a) {
      vars.push_back(v);
      vals.push_back(x);
    }
    return {vars, vals};
  }

}  // namespace

TEST_CASE("variables") {
  CHECK(Variable{3}.name() == "x3");
  CHECK(Variable{1, 2}.name() == "x1_2");
  CHECK(Variable{1, 2} < Variable{2, 1});
  CHECK(Variable{1} < Variable{1, 1});
  CHECK(variables_of(2, 2) ==
        std::vector<Variable>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("v-words: small cases") {
  CHECK(v_word(1, 1, 1).flatten(100) == word({{1}, {2}, {1}, {2}}));
  CHECK(v_word(2, 1, 1).flatten(100) == word({{1}, {2}, {3}, {4}, {2}, {1}, {3}, {4}}));
  CHECK(v_word(1, 1, 2).flatten(100) ==
        word({{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 2}, {2, 2},
              {1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 2}, {2, 2}}));
  CHECK_THROWS_AS(v_word(0, 1, 1), PreconditionFailed);
  CHECK_THROWS_AS(v_word(1, 1, 0), PreconditionFailed);
  CHECK_THROWS_AS(v_word(2, 1, 20), LengthBudgetExceeded);
}

TEST_CASE("v-words: recursive definition and lengths") {
  for (unsigned n = 1; n <= 2; ++n)
    for (std::uint64_t m = 1; m <= 3; ++m)
      for (unsigned h = 1; h <= 3; ++h) {
        auto const w = v_word(n, m, h);
        std::uint64_t len = 1, leaves = 1;
        for (unsigned i = 0; i < h; ++i) {
          len *= 4 * n * m;
          leaves *= 2 * n;
        }
        CHECK(w.flat_length() == len);
        CHECK(w.leaf_count() == leaves);
        CHECK(w.alphabet() == variables_of(2 * n, h));
        REQUIRE(w.shape());
        CHECK(*w.shape() == BlockWord::Shape{n, m, h});
        if (len <= 20'000) CHECK(w.flatten(1'000'000) == v_reference(n, m, h));
      }
  CHECK_THROWS_AS(v_word(2, 2, 3).flatten(100), LengthBudgetExceeded);
}

TEST_CASE("u-words") {
  CHECK(u_word(0, 2, 1) == word({{1}, {2}, {1}, {2}}));
  CHECK(u_word(2, 1, 1) == word({{1}, {2}, {3}, {2}, {1}, {3}}));
  for (auto [n, m] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}})
    CHECK(u_word(n, n, m) == v_word(n, m, 1).flatten(1000));
}

TEST_CASE("sigma") {
  CHECK(sigma_apply(4, 2, 2, Variable{3}) == Variable{3, 2});
  CHECK(sigma_apply(4, 2, 3, Variable{3, 1}) == Variable{3, 1, 2});
  CHECK_THROWS_AS(sigma_apply(4, 5, 2, Variable{3}), PreconditionFailed);
  CHECK_THROWS_AS(sigma_apply(4, 1, 2, Variable{1, 1}), PreconditionFailed);

  // the j-th top-level block of v(h) is sigma_j applied to v(h-1)
  for (auto [n, m, h] : std::vector<std::tuple<unsigned, std::uint64_t, unsigned>>{
           {1, 1, 2}, {2, 1, 2}, {1, 2, 3}}) {
    auto const lower = v_word(n, m, h - 1).flatten(100'000);
    auto const upper = v_word(n, m, h);
    for (unsigned j = 1; j <= 2 * n; ++j) {
      std::vector<Letter> image;
      for (auto const& l : lower.letters()) image.push_back({sigma_apply(2 * n, j, h, l.var), false});
      CHECK(upper.blocks()[j - 1].flatten(100'000) == Term(image));
    }
  }
}

TEST_CASE("zeta expansion") {
  CHECK(zeta_expand(1, 1, 1, 1) == v_word(1, 1, 2).flatten(1000));
  CHECK(zeta_expand(2, 1, 1, 1) == v_word(2, 1, 2).flatten(1000));
  CHECK(zeta_expand(2, 1, 1, 0) == v_word(2, 1, 1).flatten(1000));
  for (unsigned n = 1; n <= 2; ++n)
    for (std::uint64_t m = 1; m <= 2; ++m)
      for (unsigned h = 1; h <= 2; ++h)
        for (unsigned r = 0; r <= 2; ++r) {
          if (v_word(n, m, h + r, std::size_t(-1)).flat_length() > 200'000) continue;
          CHECK(zeta_expand(n, m, h, r) == v_word(n, m, h + r).flatten(200'000));
        }
  CHECK_THROWS_AS(zeta_expand(2, 2, 2, 3, 1000), LengthBudgetExceeded);
}

TEST_CASE("w-words") {
  CHECK(w_word(2, 1) == Term({pos({1}), pos({2}), neg({1}), neg({2})}));
  CHECK(w_word(2, 2) ==
        Term({pos({1, 1}), pos({2, 1}), neg({1, 1}), neg({2, 1}),
              pos({1, 2}), pos({2, 2}), neg({1, 2}), neg({2, 2}),
              pos({2, 1}), pos({1, 1}), neg({2, 1}), neg({1, 1}),
              pos({2, 2}), pos({1, 2}), neg({2, 2}), neg({1, 2})}));
  CHECK(w_word(1, 1) == Term({pos({1}), neg({1})}));
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned h = 1; h <= 3; ++h) {
      std::uint64_t len = 1;
      for (unsigned i = 0; i < h; ++i) len *= 2 * n;
      CHECK(w_word(n, h).length() == len);
    }
}

TEST_CASE("term algebra") {
  auto const t = Term({pos({1}), neg({2})});
  CHECK(t.inverse() == Term({pos({2}), neg({1})}));
  CHECK_FALSE(t.is_word());
  CHECK(word({{1}}).is_word());
  CHECK(t.pow(3, 100).length() == 6);
  CHECK_THROWS_AS(t.pow(100, 10), LengthBudgetExceeded);
  CHECK(Term().is_unit());
}

TEST_CASE("evaluation") {
  auto const b2 = brandt_semigroup(make_group(GroupSpec::cyclic(1)), 2);
  Substitution tau({{1}, {2}, {3}}, {b2.at("(1,e,2)"), b2.at("(2,e,1)"), b2.at("(1,e,1)")});
  // x1 x2 x3 = (1,e,1), and (1,e,1) x2 = 0: the value is the zero, which
  // still lies in a (trivial) subgroup
  auto const u = u_word(2, 1, 1);
  oracle::Assignment a{{{1}, tau[{1}]}, {{2}, tau[{2}]}, {{3}, tau[{3}]}};
  CHECK(evaluate(u, tau, b2) == oracle::eval(b2, u, a));
  CHECK(evaluate(u, tau, b2) == 0);

  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const t  = parse_term("x1 x2 (x2 x1 x3)^2 x3'");
  Substitution unit({{1}, {2}, {3}}, {0, 0, 0});
  CHECK(evaluate(t, unit, s3) == 0);

  auto const sub = Substitution({{1}}, {s3.at("(12)")});
  CHECK(evaluate(Term(), sub, s3) == 0);
  CHECK_THROWS_AS(evaluate(Term(), sub, brandt_semigroup(make_group(GroupSpec::cyclic(1)), 2)),
                  MissingIdentity);
  CHECK_THROWS_AS(evaluate(Term({neg({1})}), sub, multiplicative_reduct(s3)), MissingStar);
  CHECK(power(s3, s3.at("(123)"), 3) == 0);
  CHECK(power(s3, s3.at("(123)"), 4) == s3.at("(123)"));
}

TEST_CASE("block and flat evaluation agree") {
  std::mt19937_64 rng(7);
  auto const      b = brandt_monoid_b21();
  auto const      w = v_word(2, 2, 2);
  auto const      flat = w.flatten(1'000'000);
  for (int i = 0; i < 100; ++i) {
    auto const a = random_assignment(w.alphabet(), b.size(), rng);
    CHECK(evaluate(w, to_substitution(a), b) == oracle::eval(b, flat, a));
  }

  // every substitution of a small word, on a few small algebras
  auto const s3 = make_group(GroupSpec::symmetric(3));
  for (auto const& alg : {b, s3, brandt_semigroup(make_group(GroupSpec::cyclic(2)), 2)}) {
    for (auto const& small : {v_word(1, 2, 1), v_word(2, 1, 1), v_word(1, 1, 2)}) {
      auto const f = small.flatten(1000);
      oracle::for_each_assignment(small.alphabet(), oracle::carrier(alg),
                                  [&](oracle::Assignment const& a) {
                                    auto const got = evaluate(small, to_substitution(a), alg);
                                    CHECK(got == oracle::eval(alg, f, a));
                                    return got == oracle::eval(alg, f, a);
                                  });
    }
  }
}

TEST_CASE("group values of v-words") {
  // with exponent dividing m, v(n,m,1) = a1..an a1^-1..an^-1
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const w  = v_word(2, 6, 1);
  oracle::for_each_assignment(w.alphabet(), oracle::carrier(s3), [&](oracle::Assignment const& a) {
    Element const x1 = a.at({1}), x2 = a.at({2});
    auto const    want = s3.mul(s3.mul(x1, x2), s3.mul(s3.star(x1), s3.star(x2)));
    CHECK(evaluate(w, to_substitution(a), s3) == want);
    return true;
  });

  // a1..an a1^-1..an^-1 as a product of commutators [(a_{i-1}..a_1)^-1, a_i^-1]
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Variable> vars;
    for (std::uint32_t i = 1; i <= n; ++i) vars.push_back({i});
    oracle::for_each_assignment(vars, oracle::carrier(s3), [&](oracle::Assignment const& a) {
      Element lhs = 0;
      for (auto const& v : vars) lhs = s3.mul(lhs, a.at(v));
      for (auto const& v : vars) lhs = s3.mul(lhs, s3.star(a.at(v)));
      Element rhs = 0, prefix = 0;  // prefix = a_{i-1} .. a_1
      for (std::size_t i = 0; i < n; ++i) {
        Element const ai = a.at(vars[i]);
        if (i > 0) {
          Element const x = s3.star(prefix), y = s3.star(ai);
          Element const c = s3.mul(s3.mul(s3.star(x), s3.star(y)), s3.mul(x, y));
          rhs             = s3.mul(rhs, c);
        }
        prefix = s3.mul(ai, prefix);
      }
      CHECK(lhs == rhs);
      return lhs == rhs;
    });
  }
}

TEST_CASE("parser") {
  auto const t = parse_term("x1 x2 x1 x2");
  CHECK(t.length() == 4);
  CHECK(t.is_word());
  auto const s = parse_term("x1 x2 x1' x2'");
  CHECK_FALSE(s.is_word());
  CHECK(s == w_word(2, 1));
  CHECK(parse_term("x1 (x2 x1)^3") == word({{1}, {2}, {1}, {2}, {1}, {2}, {1}}));
  CHECK(parse_term("(x1 x2)'") == Term({neg({2}), neg({1})}));
  CHECK(parse_term("x1_2 x2_1") == word({{1, 2}, {2, 1}}));
  CHECK(parse_term("1").is_unit());
  CHECK(parse_term("u[2,1,1]") == u_word(2, 1, 1));
  CHECK(parse_term("w[2,2]") == w_word(2, 2));
  CHECK(parse_term("v[1,1,2]") == v_word(1, 1, 2).flatten(100));

  for (auto const* text : {"x1 x2 x1' x2'", "x1_1 x2_1'", "1", "x3 x3 x1"})
    CHECK(parse_term(format_term(parse_term(text))) == parse_term(text));

  for (auto const* bad : {"", "x", "x1 (x2", "x1^", "y1", "x1 = x2", "v[1,1]"}) {
    CHECK_THROWS_AS(parse_term(bad), SyntaxError);
  }
  try {
    parse_term("x1 ) x2");
    FAIL("accepted");
  } catch (SyntaxError const& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("folded expressions") {
  auto const id = parse_identity("v[2,3072,29] = v[2,3072,29]^2");
  CHECK(id.lhs.kind() == Expr::Kind::vword);
  CHECK(id.rhs.kind() == Expr::Kind::power);
  CHECK(id.lhs.shape() == BlockWord::Shape{2, 3072, 29});
  CHECK(id.lhs.flat_length() == UINT64_MAX);
  CHECK_THROWS_AS(id.lhs.flatten(1000), LengthBudgetExceeded);
  CHECK_THROWS_AS(id.lhs.alphabet(), LengthBudgetExceeded);
  CHECK(parse_identity(id.to_string()).lhs == id.lhs);

  auto const e = parse_expr("(x1 x2)^3 x1'");
  CHECK(e.uses_star());
  CHECK(e.flatten(100) == parse_term("x1 x2 x1 x2 x1 x2 x1'"));
  CHECK(e.starred().flatten(100) == e.flatten(100).inverse());
  CHECK(parse_expr(e.to_string()) == e);
  CHECK(Expr::power(parse_expr("x1"), 0).is_unit());
  CHECK(Expr::block(v_word(1, 1, 1)).kind() == Expr::Kind::vword);

  auto const one = parse_identity("x1^2 = 1");
  CHECK(one.uses_one());
  CHECK(one.alphabet() == std::vector<Variable>{{1}});
}

TEST_CASE("compiled programs match flat evaluation") {
  auto const s3 = make_group(GroupSpec::symmetric(3));
  auto const e  = parse_expr("(x1 x2')^5 v[1,2,1] x2^7");
  auto const f  = e.flatten(1000);
  auto const vars = e.alphabet();
  Program    prog(e, vars);
  oracle::for_each_assignment(vars, oracle::carrier(s3), [&](oracle::Assignment const& a) {
    std::vector<Element> values;
    for (auto const& v : vars) values.push_back(a.at(v));
    CHECK(prog.run(s3, values.data(), 0) == oracle::eval(s3, f, a));
    return true;
  });
}
