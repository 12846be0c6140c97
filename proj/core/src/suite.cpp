#include "bglab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

#include "bglab/analysis.hpp"
#include "bglab/checker.hpp"
#include "bglab/constructions.hpp"
#include "bglab/corpus.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "bglab/parser.hpp"
#include "bglab/validate.hpp"

namespace bglab {

  SuiteProfile profile_from_string(std::string_view name) {
    if (name == "quick") {
      return SuiteProfile::quick;
    }
    if (name == "full") {
      return SuiteProfile::full;
    }
    throw PreconditionFailed("unknown suite profile '" + std::string(name) + "'");
  }

  nlohmann::json SuiteReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (auto const& e : entries) {
      checks.push_back({{"id", e.id},
                        {"anchor", e.anchor},
                        {"status", e.passed ? "pass" : "fail"},
                        {"mandatory", e.mandatory},
                        {"evaluations", e.evaluations},
                        {"seconds", e.seconds},
                        {"detail", e.detail}});
    }
    return {{"profile", profile == SuiteProfile::quick ? "quick" : "full"},
            {"seed", seed},
            {"passed", passed},
            {"checks", std::move(checks)}};
  }

  namespace {

    struct Outcome {
      bool          passed      = false;
      std::uint64_t evaluations = 0;
      std::string   detail;
    };

    class Runner {
     public:
      void run(std::string id, std::string anchor, std::function<Outcome()> const& body) {
        SuiteEntry e;
        e.id         = std::move(id);
        e.anchor     = std::move(anchor);
        auto const t = std::chrono::steady_clock::now();
        try {
          auto o        = body();
          e.passed      = o.passed;
          e.evaluations = o.evaluations;
          e.detail      = std::move(o.detail);
        } catch (std::exception const& ex) {
          e.passed = false;
          e.detail = std::string("error: ") + ex.what();
        }
        e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        _entries.push_back(std::move(e));
      }

      std::vector<SuiteEntry> take() {
        std::sort(_entries.begin(), _entries.end(),
                  [](auto const& a, auto const& b) { return a.id < b.id; });
        return std::move(_entries);
      }

     private:
      std::vector<SuiteEntry> _entries;
    };

    Outcome from_verdict(CheckVerdict const& v, CheckStatus expected, FiniteAlgebra const& alg) {
      Outcome o;
      o.passed      = v.status == expected;
      o.evaluations = v.evaluations;
      o.detail      = v.to_json(alg).dump();
      return o;
    }

    Outcome axioms(FiniteAlgebra const& alg) {
      auto const v = validate(alg);
      Outcome    o;
      o.passed      = !v;
      o.evaluations = alg.size() * alg.size() * alg.size();
      o.detail      = v ? describe(alg, *v) : to_string(alg.kind()).data();
      return o;
    }

    ElementSet subgroup_union(FiniteAlgebra const& alg) {
      ElementSet out;
      for (auto const& h : maximal_subgroups(alg)) {
        out.insert(out.end(), h.elements.begin(), h.elements.end());
      }
      return normalized(std::move(out));
    }

  }  // namespace

  SuiteReport run_suite(SuiteProfile profile, unsigned workers, std::uint64_t seed) {
    bool const          full    = profile == SuiteProfile::full;
    std::uint64_t const samples = full ? 100'000 : 10'000;
    CheckOptions        opts;
    opts.workers = workers;

    auto const trivial = make_group(GroupSpec::cyclic(1));
    auto const z2      = make_group(GroupSpec::cyclic(2));
    auto const z4      = make_group(GroupSpec::cyclic(4));
    auto const s3      = make_group(GroupSpec::symmetric(3));
    auto const q8      = make_group(GroupSpec::quaternion8());
    auto const b21     = brandt_monoid_b21();
    auto const b2      = brandt_semigroup(trivial, 2);
    auto const bz2     = brandt_semigroup(z2, 2);
    auto const ps3     = power_semiring(s3);
    auto const ps3_mul = multiplicative_reduct(ps3);
    auto const ps3_series = principal_series(ps3_mul);

    Runner r;

    // axioms
    r.run("axioms.b21", "the Brandt monoid B21 is an involution ai-semiring",
          [&] { return axioms(b21); });
    r.run("axioms.power-s3", "(P(S3), union, product) is an ai-semiring",
          [&] { return axioms(ps3); });
    r.run("axioms.involution-power-s3", "(P(S3), product, inverse) is an involution semigroup",
          [&] { return axioms(involution_power(s3)); });
    r.run("axioms.hall-2", "Hall relations on 2 points form an involution ai-semiring",
          [&] { return axioms(hall_semiring(2)); });
    r.run("axioms.hall-3", "Hall relations on 3 points form an involution ai-semiring",
          [&] { return axioms(hall_semiring(3)); });

    // block-groups
    r.run("block-group.corpus",
          "block-group iff unique inverses iff the idempotent-generated part is J-trivial",
          [&] {
            Outcome     o;
            std::size_t mismatches = 0, blocks = 0;
            auto test = [&](FiniteAlgebra const& alg, std::string const& name) {
              bool const a = bool(is_block_group(alg));
              bool const b = bool(unique_inverse_check(alg));
              bool const c = bool(j_trivial(alg, idempotent_generated(alg)));
              ++o.evaluations;
              blocks += a;
              if (a != b || b != c) {
                if (mismatches++ == 0) {
                  o.detail = "first mismatch: " + name + " ";
                }
              }
            };
            for (auto const& [name, alg] : construction_corpus()) {
              test(alg, name);
            }
            unsigned const top = full ? 4 : 3;
            for (unsigned order = 1; order <= top; ++order) {
              std::size_t idx = 0;
              std::vector<std::string> labels;
              for (unsigned i = 0; i < order; ++i) {
                labels.push_back(std::to_string(i));
              }
              for_each_semigroup(order, [&](Table const& t) {
                test(FiniteAlgebra(AlgebraKind::semigroup, labels, t),
                     "order " + std::to_string(order) + " #" + std::to_string(idx++));
              });
            }
            o.passed = mismatches == 0;
            o.detail += std::to_string(o.evaluations) + " semigroups, "
                      + std::to_string(blocks) + " block-groups, "
                      + std::to_string(mismatches) + " mismatches";
            return o;
          });

    // u-words in Brandt semigroups
    r.run("brandt.u-words-in-subgroups",
          "every value of u[n,k,m] (n+k <= 3, m <= 2) in B(C1,2), B(C1,3), B(C2,2) lies in a "
          "maximal subgroup",
          [&] {
            Outcome o;
            o.passed = true;
            for (auto const& alg :
                 {b2, brandt_semigroup(trivial, 3), bz2}) {
              auto const members = to_mask(alg.size(), subgroup_union(alg));
              for (unsigned n = 0; n <= 3; ++n) {
                for (unsigned k = 0; n + k <= 3; ++k) {
                  if (n + k == 0) {
                    continue;
                  }
                  for (std::uint64_t m = 1; m <= 2; ++m) {
                    auto const v = check_predicate_exhaustive(
                        alg, Expr::from_term(u_word(n, k, m)),
                        [&](Element x) { return members[x]; }, opts);
                    o.evaluations += v.evaluations;
                    if (v.status != CheckStatus::holds) {
                      o.passed = false;
                      o.detail = "u[" + std::to_string(n) + "," + std::to_string(k) + ","
                               + std::to_string(m) + "]: " + v.to_json(alg).dump();
                      return o;
                    }
                  }
                }
              }
            }
            o.detail = "all values in maximal subgroups";
            return o;
          });

    // periodicity x^(2^h m) = x^(2^(h+1) m)
    auto periodic = [&](FiniteAlgebra const& alg, std::uint64_t q) {
      auto const x = Expr::variable(Variable{1});
      auto const v = check_identity_exhaustive(alg, Expr::power(x, q), Expr::power(x, 2 * q), opts);
      auto       o = from_verdict(v, CheckStatus::holds, alg);
      o.detail     = "q = " + std::to_string(q) + "; " + o.detail;
      return o;
    };
    r.run("periodic.b21", "B21 satisfies x^4 = x^8", [&] { return periodic(b21, 4); });
    r.run("periodic.brandt-c2-2", "B(C2,2) satisfies x^4 = x^8", [&] { return periodic(bz2, 4); });
    r.run("periodic.power-s3",
          "P(S3) satisfies x^(2^h m) = x^(2^(h+1) m) for its computed h, m",
          [&] { return periodic(ps3_mul, ps3_series.q); });

    // groups
    r.run("group.s3-v-1-6-2", "S3 satisfies v[1,6,2] = 1", [&] {
      return from_verdict(check_identity_exhaustive(s3, parse_identity("v[1,6,2] = 1"), opts),
                          CheckStatus::holds, s3);
    });
    r.run("group.s3-v-1-6-1-in-a3", "every value of v[1,6,1] in S3 is an even permutation", [&] {
      auto const a3 = to_mask(s3.size(), derived_series(s3).at(1));
      return from_verdict(check_predicate_exhaustive(s3, parse_expr("v[1,6,1]"),
                                                     [&](Element x) { return a3[x]; }, opts),
                          CheckStatus::holds, s3);
    });
    r.run("group.z4-v-words", "Z4 satisfies v[1,4,1] = 1 and v[2,4,1] = 1", [&] {
      auto a = check_identity_exhaustive(z4, parse_identity("v[1,4,1] = 1"), opts);
      auto b = check_identity_exhaustive(z4, parse_identity("v[2,4,1] = 1"), opts);
      Outcome o;
      o.passed      = a.status == CheckStatus::holds && b.status == CheckStatus::holds;
      o.evaluations = a.evaluations + b.evaluations;
      o.detail      = a.to_json(z4).dump() + " " + b.to_json(z4).dump();
      return o;
    });
    r.run("group.commutator-product",
          "a1..an a1^-1..an^-1 is the product of [(a_(i-1)..a1)^-1, a_i^-1] in S3, n <= 3",
          [&] {
            Outcome    o;
            auto const info = require_group(s3);
            auto const N    = static_cast<Element>(s3.size());
            o.passed        = true;
            for (unsigned n = 1; n <= 3; ++n) {
              std::vector<Element> a(n, 0);
              while (true) {
                Element lhs = info.identity;
                for (auto x : a) {
                  lhs = s3.mul(lhs, x);
                }
                for (auto x : a) {
                  lhs = s3.mul(lhs, info.inverse[x]);
                }
                Element rhs    = info.identity;
                Element prefix = info.identity;  // a_(i-1) ... a_1
                for (unsigned i = 0; i < n; ++i) {
                  if (i > 0) {
                    rhs = s3.mul(rhs, commutator(s3, info.inverse[prefix], info.inverse[a[i]]));
                  }
                  prefix = s3.mul(a[i], prefix);
                }
                ++o.evaluations;
                if (lhs != rhs) {
                  o.passed = false;
                  o.detail = "fails for n = " + std::to_string(n);
                  return o;
                }
                unsigned i = n;
                while (i > 0 && ++a[i - 1] == N) {
                  a[--i] = 0;
                }
                if (i == 0) {
                  break;
                }
              }
            }
            o.detail = "all tuples agree";
            return o;
          });

    // v-word identities at the computed parameters
    r.run("vword.b2-block", "B(C1,2) satisfies v[2,2,3] = v[2,2,3]^2 (exact, block values)",
          [&] {
            return from_verdict(check_identity_block(b2, parse_identity("v[2,2,3] = v[2,2,3]^2"),
                                                     opts),
                                CheckStatus::holds, b2);
          });
    auto const b21_series = principal_series(multiplicative_reduct(b21));
    auto vword_identity   = [](SeriesReport const& s) {
      auto const v = "v[2," + std::to_string(s.q) + "," + std::to_string(s.r) + "]";
      return parse_identity(v + " = " + v + "^2");
    };
    r.run("vword.b21-sampled", "B21 satisfies v[2,q,r] = v[2,q,r]^2 on seeded samples", [&] {
      auto const b21_mul = multiplicative_reduct(b21);
      return from_verdict(
          check_identity_sampled(b21_mul, vword_identity(b21_series), samples, seed, opts),
          CheckStatus::no_counterexample_found, b21_mul);
    });
    r.run("vword.b21-block", "B21 satisfies v[2,q,r] = v[2,q,r]^2 (exact, block values)", [&] {
      auto const b21_mul = multiplicative_reduct(b21);
      return from_verdict(check_identity_block(b21_mul, vword_identity(b21_series), opts),
                          CheckStatus::holds, b21_mul);
    });
    r.run("vword.power-s3-sampled",
          "P(S3) satisfies v[2,q,r] = v[2,q,r]^2 on seeded samples", [&] {
            return from_verdict(
                check_identity_sampled(ps3_mul, vword_identity(ps3_series), samples, seed, opts),
                CheckStatus::no_counterexample_found, ps3_mul);
          });
    r.run("vword.power-s3-block",
          "P(S3) satisfies v[2,q,r] = v[2,q,r]^2 (exact, block values)", [&] {
            return from_verdict(check_identity_block(ps3_mul, vword_identity(ps3_series), opts),
                                CheckStatus::holds, ps3_mul);
          });

    // Kadourek semigroups
    r.run("kadourek.violation", "S(2,1) violates v[2,1,1] = v[2,1,1]^2 with a checked witness",
          [&] {
            auto const    k = kadourek_semigroup(2, 1);
            auto const    id = parse_identity("v[2,1,1] = v[2,1,1]^2");
            SearchOptions so;
            so.check      = opts;
            so.generators = k.generators;
            auto const v  = find_identity_violation(k.algebra, id, SearchStrategy::generator_biased, so);
            auto o        = from_verdict(v, CheckStatus::counterexample, k.algebra);
            o.passed      = o.passed && v.witness && witness_refutes(k.algebra, id, *v.witness);
            return o;
          });
    r.run("kadourek.generators-2-2", "the generators of S(2,2) move the points as drawn", [&] {
      auto const k = kadourek_semigroup(2, 2);
      // (variable, from, to) for every arrow of the picture
      std::vector<std::tuple<Variable, unsigned, unsigned>> const arrows = {
          {{1, 1}, 0, 1},   {{2, 1}, 1, 2},   {{1, 1}, 3, 2},   {{2, 1}, 4, 3},
          {{1, 2}, 4, 5},   {{2, 2}, 5, 6},   {{1, 2}, 7, 6},   {{2, 2}, 8, 7},
          {{2, 1}, 8, 9},   {{1, 1}, 9, 10},  {{2, 1}, 11, 10}, {{1, 1}, 12, 11},
          {{2, 2}, 12, 13}, {{1, 2}, 13, 14}, {{2, 2}, 15, 14}, {{1, 2}, 16, 15}};
      std::vector<PartialInjection> expected(k.variables.size(), PartialInjection(17));
      for (auto const& [var, from, to] : arrows) {
        auto it = std::find(k.variables.begin(), k.variables.end(), var);
        expected[static_cast<std::size_t>(it - k.variables.begin())].set(from, to);
      }
      Outcome o;
      o.passed      = k.points == 17 && k.maps == expected;
      o.evaluations = arrows.size();
      o.detail      = "|S(2,2)| = " + std::to_string(k.algebra.size());
      return o;
    });

    // morphisms
    auto const b_set = subset_b(s3, mask_of({0, s3.at("(12)")}), s3.at("(13)"));
    auto const b_alg = subset_b_algebra(s3, b_set);
    auto const b_targets = subset_b_targets(b_set);
    auto       b_map     = std::vector<Element>(b_alg.size());
    for (Element x = 0; x < b_alg.size(); ++x) {
      b_map[x] = b21.at(b_targets[x]);
    }
    auto morphism_outcome = [](MorphismReport const& m, bool want_inj, bool want_surj) {
      Outcome o;
      o.passed = m.ok && (!want_inj || m.injective) && (!want_surj || m.surjective);
      o.detail = m.ok ? "homomorphism" : "fails at " + m.op;
      o.detail += std::string(", injective ") + (m.injective ? "yes" : "no") + ", surjective "
                + (m.surjective ? "yes" : "no");
      return o;
    };
    r.run("morphism.subset-b", "the subset B of P(S3) maps onto B21 preserving union and product",
          [&] {
            return morphism_outcome(verify_morphism(b_alg, b21, b_map, {true, true, false}),
                                    false, true);
          });
    r.run("morphism.subset-b-star", "the same map sends elementwise inversion to transposition",
          [&] {
            auto const ip = involution_power(s3);
            std::vector<Element> elems;
            for (auto mask : b_set.carrier) {
              elems.push_back(subset_element(ip, mask));
            }
            auto const sub = induced_subalgebra(ip, elems, {true, false, true});
            return morphism_outcome(verify_morphism(sub, b21, b_map, {true, false, true}), false,
                                    true);
          });
    r.run("morphism.hall", "B21 embeds into Hall relations on 2 points preserving +, product, star",
          [&] {
            auto const h2 = hall_semiring(2);
            std::map<std::string, std::string> const m = {
                {"0", "[11,11]"}, {"1", "[10,01]"}, {"a", "[01,11]"},
                {"b", "[11,10]"}, {"e", "[10,11]"}, {"f", "[11,01]"}};
            return morphism_outcome(verify_morphism(b21, h2, m, {true, true, true}), true, false);
          });

    // structure
    r.run("series.b21", "B21 has the Brandt series {0} < B2 < B21 with h=2, m=1, k=1, q=4, r=5",
          [&] {
            auto const& s = b21_series;
            Outcome     o;
            std::vector<FactorKind> kinds;
            for (auto const& f : s.factors) {
              kinds.push_back(f.kind);
            }
            o.passed = s.chain.size() == 3 && s.chain[0].size() == 1 && s.chain[1].size() == 5
                    && s.chain[2].size() == 6
                    && kinds == std::vector<FactorKind>{FactorKind::group, FactorKind::brandt,
                                                        FactorKind::brandt}
                    && s.h == 2 && s.m == 1 && s.k == 1 && s.q == 4 && s.r == 5 && s.brandt_series;
            o.detail = "h=" + std::to_string(s.h) + " m=" + std::to_string(s.m)
                     + " k=" + std::to_string(s.k) + " q=" + std::to_string(s.q)
                     + " r=" + std::to_string(s.r);
            return o;
          });
    r.run("series.power-s3", "P(S3) has a Brandt series and maximal subgroups N(H)/H", [&] {
      Outcome    o;
      auto const h_mask = mask_of({0, s3.at("(12)")});
      std::size_t at_h = 0, at_e = 0;
      for (auto const& g : maximal_subgroups(ps3_mul)) {
        auto const mask = subset_mask(ps3, g.idempotent);
        if (mask == h_mask) {
          at_h = g.elements.size();
        }
        if (mask == mask_of({0})) {
          at_e = g.elements.size();
        }
      }
      o.passed = at_h == 1 && at_e == 6 && ps3_series.brandt_series;
      o.detail = "|H at {e,(12)}| = " + std::to_string(at_h) + ", |H at {e}| = "
               + std::to_string(at_e) + ", h=" + std::to_string(ps3_series.h)
               + " m=" + std::to_string(ps3_series.m) + " k=" + std::to_string(ps3_series.k)
               + " q=" + std::to_string(ps3_series.q) + " r=" + std::to_string(ps3_series.r);
      return o;
    });
    r.run("groups.analytics", "S3 is solvable and not Dedekind; Q8 is Dedekind with Q8 inside",
          [&] {
            auto const a = group_analytics(s3);
            auto const b = group_analytics(q8);
            Outcome    o;
            o.passed = a.solvable && a.derived_length == 2u && !a.dedekind && b.dedekind
                    && b.has_quaternion_subgroup && !a.has_quaternion_subgroup;
            o.detail = "S3 subgroups " + std::to_string(a.subgroup_count) + ", Q8 subgroups "
                     + std::to_string(b.subgroup_count);
            return o;
          });

    // Hall monoids
    r.run("hall.sizes", "|H(X1)| = 1 and |H(X2)| = 7", [&] {
      Outcome o;
      auto const a = hall_semiring(1).size(), b = hall_semiring(2).size();
      o.passed = a == 1 && b == 7;
      o.detail = std::to_string(a) + ", " + std::to_string(b);
      return o;
    });
    r.run("hall.closure", "Hall relations on up to 3 points are closed under union and product",
          [&] {
            Outcome o;
            o.passed = true;
            for (unsigned n = 1; n <= 3; ++n) {
              auto const h = hall_semiring(n);
              for (Element x = 0; x < h.size(); ++x) {
                for (Element y = 0; y < h.size(); ++y) {
                  auto const mx = hall_matrix(h, x), my = hall_matrix(h, y);
                  ++o.evaluations;
                  if (!(mx * my).has_positive_permanent() || !(mx | my).has_positive_permanent()
                      || hall_matrix(h, h.mul(x, y)) != mx * my
                      || hall_matrix(h, h.add(x, y)) != (mx | my)) {
                    o.passed = false;
                    o.detail = "n = " + std::to_string(n);
                    return o;
                  }
                }
              }
            }
            return o;
          });
    r.run("hall.block-group", "the multiplicative reduct of H(X2) is a block-group", [&] {
      Outcome o;
      o.passed = bool(is_block_group(multiplicative_reduct(hall_semiring(2))));
      return o;
    });

    SuiteReport report;
    report.profile = profile;
    report.seed    = seed;
    report.entries = r.take();
    report.passed  = std::all_of(report.entries.begin(), report.entries.end(),
                                 [](auto const& e) { return e.passed || !e.mandatory; });
    return report;
  }

}  // namespace bglab
