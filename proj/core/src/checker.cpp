#include "bglab/checker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bglab/errors.hpp"
#include "bglab/rng.hpp"
#include "check_common.hpp"

namespace bglab {

  std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
      case CheckStatus::holds:
        return "holds";
      case CheckStatus::counterexample:
        return "counterexample";
      case CheckStatus::no_counterexample_found:
        return "no_counterexample_found";
      case CheckStatus::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
  }

  nlohmann::json CheckVerdict::to_json(FiniteAlgebra const& alg) const {
    nlohmann::json j;
    j["status"]      = std::string(bglab::to_string(status));
    j["method"]      = method;
    j["evaluations"] = evaluations;
    if (seed) {
      j["seed"] = *seed;
    }
    if (witness) {
      auto w = nlohmann::json::object();
      for (std::size_t i = 0; i < witness->alphabet().size(); ++i) {
        w[witness->alphabet()[i].name()] = alg.label(witness->values()[i]);
      }
      j["witness"] = std::move(w);
    }
    if (lhs_value) {
      j["lhs"] = alg.label(*lhs_value);
    }
    if (rhs_value) {
      j["rhs"] = alg.label(*rhs_value);
    }
    if (!note.empty()) {
      j["note"] = note;
    }
    return j;
  }

  std::string_view to_string(SearchStrategy s) noexcept {
    switch (s) {
      case SearchStrategy::exhaustive:
        return "exhaustive";
      case SearchStrategy::generator_biased:
        return "generator-biased";
      case SearchStrategy::sampled:
        return "sampled";
    }
    return "?";
  }

  SearchStrategy strategy_from_string(std::string_view name) {
    for (auto s : {SearchStrategy::exhaustive, SearchStrategy::generator_biased,
                   SearchStrategy::sampled}) {
      if (to_string(s) == name) {
        return s;
      }
    }
    throw PreconditionFailed("unknown search strategy '" + std::string(name) + "'");
  }

  namespace detail {

    std::vector<ElementSet> resolve_domains(FiniteAlgebra const&         alg,
                                            std::vector<Variable> const& alphabet,
                                            CheckOptions const&          options) {
      ElementSet carrier(alg.size());
      for (Element x = 0; x < alg.size(); ++x) {
        carrier[x] = x;
      }
      auto const& fallback = options.default_domain.empty() ? carrier : options.default_domain;
      std::vector<ElementSet> out;
      out.reserve(alphabet.size());
      for (auto const& v : alphabet) {
        auto it = options.domains.find(v);
        out.push_back(it == options.domains.end() ? fallback : it->second);
        for (auto x : out.back()) {
          if (x >= alg.size()) {
            throw PreconditionFailed("domain of " + v.name() + " names element "
                                     + std::to_string(x) + " outside the carrier");
          }
        }
      }
      for (auto const& [v, d] : options.domains) {
        if (!std::binary_search(alphabet.begin(), alphabet.end(), v)) {
          throw PreconditionFailed("domain given for " + v.name()
                                   + ", which does not occur in the identity");
        }
      }
      return out;
    }

    ElementSet uniform_domain(FiniteAlgebra const& alg, CheckOptions const& options) {
      ElementSet d = options.default_domain;
      if (d.empty()) {
        d.resize(alg.size());
        for (Element x = 0; x < alg.size(); ++x) {
          d[x] = x;
        }
      }
      for (auto const& [v, dv] : options.domains) {
        if (normalized(dv) != normalized(d)) {
          throw PreconditionFailed("block evaluation needs one domain for every variable; "
                                   + v.name() + " differs");
        }
      }
      for (auto x : d) {
        if (x >= alg.size()) {
          throw PreconditionFailed("domain names an element outside the carrier");
        }
      }
      return normalized(std::move(d));
    }

    Element unit_for(FiniteAlgebra const& alg, Identity const& identity) {
      if (!identity.uses_one()) {
        return 0;
      }
      auto e = find_identity(alg);
      if (!e) {
        throw MissingIdentity("the identity uses 1 but the algebra has no identity element");
      }
      return *e;
    }

    void require_operations(FiniteAlgebra const& alg, Identity const& identity) {
      if (identity.uses_star() && !alg.has_star()) {
        throw MissingStar("the identity uses the star but the algebra has none");
      }
    }

  }  // namespace detail

  namespace {

    using detail::first_failure;
    using detail::RangeScan;

    constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

    //! Both sides compiled over one alphabet; when one side is a power of
    //! the other the base is evaluated once.
    class SidePair {
     public:
      SidePair(Identity const& id, std::vector<Variable> const& alphabet)
          : _lhs(id.lhs, alphabet), _rhs(id.rhs, alphabet) {
        if (id.rhs.kind() == Expr::Kind::power && id.rhs.base() == id.lhs) {
          _mode     = Mode::rhs_power;
          _exponent = id.rhs.exponent();
        } else if (id.lhs.kind() == Expr::Kind::power && id.lhs.base() == id.rhs) {
          _mode     = Mode::lhs_power;
          _exponent = id.lhs.exponent();
        }
      }

      struct Scratch {
        std::vector<Element> stack, regs;
      };

      std::pair<Element, Element> eval(FiniteAlgebra const& alg,
                                       Element const*       values,
                                       Element              one,
                                       Scratch&             s) const {
        switch (_mode) {
          case Mode::rhs_power: {
            auto const l = _lhs.run(alg, values, one, s.stack, s.regs);
            return {l, power(alg, l, _exponent)};
          }
          case Mode::lhs_power: {
            auto const r = _rhs.run(alg, values, one, s.stack, s.regs);
            return {power(alg, r, _exponent), r};
          }
          case Mode::separate:
            break;
        }
        return {_lhs.run(alg, values, one, s.stack, s.regs),
                _rhs.run(alg, values, one, s.stack, s.regs)};
      }

     private:
      enum class Mode { separate, rhs_power, lhs_power };
      Program       _lhs;
      Program       _rhs;
      Mode          _mode     = Mode::separate;
      std::uint64_t _exponent = 1;
    };

    std::uint64_t space_size(std::vector<ElementSet> const& domains) {
      std::uint64_t total = 1;
      for (auto const& d : domains) {
        if (d.empty()) {
          return 0;
        }
        total = total > kSaturated / d.size() ? kSaturated : total * d.size();
      }
      return total;
    }

    //! Digits of `index` in the mixed radix of the domains, last fastest.
    void decode(std::uint64_t index, std::vector<ElementSet> const& domains,
                std::vector<std::size_t>& digits) {
      for (std::size_t i = domains.size(); i-- > 0;) {
        digits[i] = static_cast<std::size_t>(index % domains[i].size());
        index /= domains[i].size();
      }
    }

    Substitution substitution_at(std::vector<Variable> const&   alphabet,
                                 std::vector<ElementSet> const& domains,
                                 std::uint64_t                  index) {
      std::vector<std::size_t> digits(domains.size());
      decode(index, domains, digits);
      std::vector<Element> values(domains.size());
      for (std::size_t i = 0; i < domains.size(); ++i) {
        values[i] = domains[i][digits[i]];
      }
      return Substitution(alphabet, std::move(values));
    }

    CheckVerdict budget_verdict(std::uint64_t total, std::uint64_t budget, char const* method) {
      CheckVerdict v;
      v.status = CheckStatus::budget_exceeded;
      v.method = method;
      v.note   = (total == kSaturated ? std::string("more than 2^64")
                                      : std::to_string(total))
               + " substitutions exceed the budget of " + std::to_string(budget);
      return v;
    }

    //! Odometer scan with an arbitrary per-substitution test.
    template <class Test>
    std::optional<std::uint64_t> scan_space(std::vector<ElementSet> const& domains,
                                            std::uint64_t                  total,
                                            unsigned                       workers,
                                            std::function<Test()> const&   make_test) {
      return first_failure(total, workers, [&]() -> RangeScan {
        return [&domains, test = make_test()](std::uint64_t begin, std::uint64_t end,
                                              std::atomic<std::uint64_t> const& best) mutable
               -> std::optional<std::uint64_t> {
          auto const               k = domains.size();
          std::vector<std::size_t> digits(k);
          std::vector<Element>     values(k);
          decode(begin, domains, digits);
          for (std::size_t i = 0; i < k; ++i) {
            values[i] = domains[i][digits[i]];
          }
          for (std::uint64_t idx = begin; idx < end; ++idx) {
            if ((idx & 0xfff) == 0 && idx >= best.load(std::memory_order_relaxed)) {
              return std::nullopt;
            }
            if (!test(values.data())) {
              return idx;
            }
            for (std::size_t i = k; i-- > 0;) {
              if (++digits[i] < domains[i].size()) {
                values[i] = domains[i][digits[i]];
                break;
              }
              digits[i] = 0;
              values[i] = domains[i][0];
            }
          }
          return std::nullopt;
        };
      });
    }

  }  // namespace

  CheckVerdict check_identity_exhaustive(FiniteAlgebra const& alg,
                                         Identity const&      identity,
                                         CheckOptions const&  options) {
    if (identity.lhs == identity.rhs) {
      CheckVerdict v;
      v.method = "syntactic";
      v.note   = "both sides are the same term";
      return v;
    }
    detail::require_operations(alg, identity);
    auto const one      = detail::unit_for(alg, identity);
    auto const alphabet = identity.alphabet();
    auto const domains  = detail::resolve_domains(alg, alphabet, options);
    auto const total    = space_size(domains);
    if (total > options.budget) {
      return budget_verdict(total, options.budget, "exhaustive");
    }

    SidePair const sides(identity, alphabet);
    using Test = std::function<bool(Element const*)>;
    auto hit = scan_space<Test>(domains, total, detail::resolve_workers(options.workers), [&] {
      return Test([&, scratch = SidePair::Scratch{}](Element const* values) mutable {
        auto const [l, r] = sides.eval(alg, values, one, scratch);
        return l == r;
      });
    });

    CheckVerdict v;
    v.method = "exhaustive";
    if (!hit) {
      v.evaluations = total;
      return v;
    }
    v.status      = CheckStatus::counterexample;
    v.evaluations = *hit + 1;
    v.witness     = substitution_at(alphabet, domains, *hit);
    SidePair::Scratch scratch;
    auto const [l, r] = sides.eval(alg, v.witness->values().data(), one, scratch);
    v.lhs_value       = l;
    v.rhs_value       = r;
    return v;
  }

  CheckVerdict check_identity_exhaustive(FiniteAlgebra const& alg,
                                         Expr const&          lhs,
                                         Expr const&          rhs,
                                         CheckOptions const&  options) {
    return check_identity_exhaustive(alg, Identity{lhs, rhs}, options);
  }

  CheckVerdict check_predicate_exhaustive(FiniteAlgebra const&                alg,
                                          Expr const&                         term,
                                          std::function<bool(Element)> const& predicate,
                                          CheckOptions const&                 options) {
    Identity const probe{term, term};
    detail::require_operations(alg, probe);
    auto const one      = detail::unit_for(alg, probe);
    auto const alphabet = term.alphabet();
    auto const domains  = detail::resolve_domains(alg, alphabet, options);
    auto const total    = space_size(domains);
    if (total > options.budget) {
      return budget_verdict(total, options.budget, "exhaustive-predicate");
    }
    Program const prog(term, alphabet);
    using Test = std::function<bool(Element const*)>;
    auto hit   = scan_space<Test>(domains, total, detail::resolve_workers(options.workers), [&] {
      return Test([&, stack = std::vector<Element>{}, regs = std::vector<Element>{}](
                      Element const* values) mutable {
        return predicate(prog.run(alg, values, one, stack, regs));
      });
    });
    CheckVerdict v;
    v.method = "exhaustive-predicate";
    if (!hit) {
      v.evaluations = total;
      return v;
    }
    v.status      = CheckStatus::counterexample;
    v.evaluations = *hit + 1;
    v.witness     = substitution_at(alphabet, domains, *hit);
    v.lhs_value   = prog.run(alg, v.witness->values().data(), one);
    return v;
  }

  CheckVerdict check_identity_sampled(FiniteAlgebra const& alg,
                                      Identity const&      identity,
                                      std::uint64_t        samples,
                                      std::uint64_t        seed,
                                      CheckOptions const&  options) {
    if (is_block_identity(identity)) {
      auto const side  = detail::block_side(identity.lhs)->unit ? *detail::block_side(identity.rhs)
                                                                 : *detail::block_side(identity.lhs);
      double const leaves = std::pow(2.0 * side.shape.n, side.shape.h);
      if (leaves > double(kExplicitSampleLimit)) {
        return detail::sample_block_identity(alg, identity, samples, seed, options);
      }
    }
    detail::require_operations(alg, identity);
    auto const one      = detail::unit_for(alg, identity);
    auto const alphabet = identity.alphabet();
    auto const domains  = detail::resolve_domains(alg, alphabet, options);
    auto const k        = alphabet.size();

    CheckVerdict v;
    v.method = "sampled";
    v.seed   = seed;
    if (space_size(domains) == 0) {
      v.status = CheckStatus::no_counterexample_found;
      v.note   = "empty domain";
      return v;
    }
    auto draw = [&](std::uint64_t s, std::vector<Element>& values) {
      for (std::size_t i = 0; i < k; ++i) {
        auto const& d = domains[i];
        values[i]     = d[bounded(mix(seed, s * k + i), d.size())];
      }
    };
    SidePair const sides(identity, alphabet);
    auto hit = detail::first_failure(samples, detail::resolve_workers(options.workers),
                                     [&]() -> detail::RangeScan {
      return [&, values = std::vector<Element>(k), scratch = SidePair::Scratch{}](
                 std::uint64_t begin, std::uint64_t end,
                 std::atomic<std::uint64_t> const& best) mutable
             -> std::optional<std::uint64_t> {
        for (std::uint64_t s = begin; s < end; ++s) {
          if ((s & 0xff) == 0 && s >= best.load(std::memory_order_relaxed)) {
            return std::nullopt;
          }
          draw(s, values);
          auto const [l, r] = sides.eval(alg, values.data(), one, scratch);
          if (l != r) {
            return s;
          }
        }
        return std::nullopt;
      };
    });
    if (!hit) {
      v.status      = CheckStatus::no_counterexample_found;
      v.evaluations = samples;
      return v;
    }
    std::vector<Element> values(k);
    draw(*hit, values);
    SidePair::Scratch scratch;
    auto const [l, r] = sides.eval(alg, values.data(), one, scratch);
    v.status          = CheckStatus::counterexample;
    v.evaluations     = *hit + 1;
    v.witness         = Substitution(alphabet, std::move(values));
    v.lhs_value       = l;
    v.rhs_value       = r;
    return v;
  }

  bool witness_refutes(FiniteAlgebra const& alg,
                       Identity const&      identity,
                       Substitution const&  sub) {
    auto const alphabet = identity.alphabet();
    if (!sub.covers(alphabet)) {
      throw PreconditionFailed("substitution does not cover the identity's alphabet");
    }
    detail::require_operations(alg, identity);
    auto const           one = detail::unit_for(alg, identity);
    std::vector<Element> values;
    values.reserve(alphabet.size());
    for (auto const& x : alphabet) {
      values.push_back(sub[x]);
    }
    return Program(identity.lhs, alphabet).run(alg, values.data(), one)
           != Program(identity.rhs, alphabet).run(alg, values.data(), one);
  }

  CheckVerdict find_identity_violation(FiniteAlgebra const& alg,
                                       Identity const&      identity,
                                       SearchStrategy       strategy,
                                       SearchOptions const& options) {
    switch (strategy) {
      case SearchStrategy::exhaustive:
        return check_identity_exhaustive(alg, identity, options.check);
      case SearchStrategy::sampled:
        return check_identity_sampled(alg, identity, options.samples, options.seed,
                                      options.check);
      case SearchStrategy::generator_biased:
        break;
    }
    auto const gens = normalized(options.generators);
    if (gens.empty()) {
      auto v   = check_identity_exhaustive(alg, identity, options.check);
      v.method = "generator-biased";
      return v;
    }
    std::uint64_t spent = 0;
    {
      CheckOptions first = options.check;
      first.domains.clear();
      first.default_domain = gens;
      auto v               = check_identity_exhaustive(alg, identity, first);
      if (v.status == CheckStatus::counterexample) {
        v.method = "generator-biased";
        v.note   = "found among substitutions into the generators";
        return v;
      }
      if (v.status == CheckStatus::holds) {
        spent = v.evaluations;
      }
    }
    // whole space, generators tried first for every variable
    auto reorder = [&](ElementSet const& dom) {
      ElementSet out;
      for (auto g : gens) {
        if (std::binary_search(dom.begin(), dom.end(), g)) {
          out.push_back(g);
        }
      }
      for (auto x : dom) {
        if (!std::binary_search(gens.begin(), gens.end(), x)) {
          out.push_back(x);
        }
      }
      return out;
    };
    CheckOptions second = options.check;
    auto const   alphabet = identity.alphabet();
    auto const   domains  = detail::resolve_domains(alg, alphabet, options.check);
    second.default_domain.clear();
    second.domains.clear();
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      second.domains[alphabet[i]] = reorder(normalized(domains[i]));
    }
    auto v = check_identity_exhaustive(alg, identity, second);
    v.method = "generator-biased";
    v.evaluations += spent;
    return v;
  }

}  // namespace bglab
