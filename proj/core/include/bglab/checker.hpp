#ifndef BGLAB_CHECKER_HPP_
#define BGLAB_CHECKER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bglab/algebra.hpp"
#include "bglab/expr.hpp"
#include "bglab/terms.hpp"

namespace bglab {

  enum class CheckStatus { holds, counterexample, no_counterexample_found, budget_exceeded };
  std::string_view to_string(CheckStatus s) noexcept;

  struct CheckVerdict {
    CheckStatus                 status = CheckStatus::holds;
    std::optional<Substitution> witness;
    std::optional<Element>      lhs_value;
    std::optional<Element>      rhs_value;
    std::uint64_t               evaluations = 0;
    std::optional<std::uint64_t> seed;
    std::string                 method;
    std::string                 note;

    bool refuted() const noexcept {
      return status == CheckStatus::counterexample;
    }
    //! Labels are taken from `alg`; witnesses list variable -> label.
    nlohmann::json to_json(FiniteAlgebra const& alg) const;
  };

  using DomainMap = std::map<Variable, ElementSet>;

  struct CheckOptions {
    //! Per-variable element sets; variables not listed range over
    //! `default_domain`, or the whole carrier when that is empty.
    DomainMap     domains;
    ElementSet    default_domain;
    std::uint64_t budget = default_budgets().evaluations;
    //! 0 picks the hardware concurrency.
    unsigned workers = 0;
  };

  //! Every substitution in odometer order (alphabet sorted, last variable
  //! fastest). The counterexample reported is the least in that order,
  //! whatever the number of workers. `evaluations` is the position of the
  //! witness plus one, or the size of the space.
  CheckVerdict check_identity_exhaustive(FiniteAlgebra const& alg,
                                         Identity const&      identity,
                                         CheckOptions const&  options = {});
  CheckVerdict check_identity_exhaustive(FiniteAlgebra const& alg,
                                         Expr const&          lhs,
                                         Expr const&          rhs,
                                         CheckOptions const&  options = {});

  //! Exhaustive test that every value of `term` satisfies `predicate`; a
  //! counterexample carries the offending value in `lhs_value`.
  CheckVerdict check_predicate_exhaustive(FiniteAlgebra const&                alg,
                                          Expr const&                         term,
                                          std::function<bool(Element)> const& predicate,
                                          CheckOptions const&                 options = {});

  //! Alphabets up to this size are sampled one variable at a time.
  inline constexpr std::size_t kExplicitSampleLimit = std::size_t(1) << 16;

  //! Draws `samples` substitutions, uniform per variable over its domain,
  //! from the counter-based generator keyed by `seed`. Never reports holds.
  //! Block-shaped identities (see check_identity_block) with larger
  //! alphabets are sampled through the exact distribution of the v-word's
  //! value; a counterexample found that way carries the value but no
  //! substitution.
  CheckVerdict check_identity_sampled(FiniteAlgebra const& alg,
                                      Identity const&      identity,
                                      std::uint64_t        samples,
                                      std::uint64_t        seed,
                                      CheckOptions const&  options = {});

  //! Identities whose two sides are the unit or powers of one v-word
  //! v[n,m,h]. Both sides depend only on the value of that word, so the set
  //! of its values is computed level by level (each block ranges over the
  //! values of the level below) and the identity is checked on that set.
  //! Exact; every variable must share one domain. A witness is rebuilt when
  //! the alphabet fits the word-length budget.
  CheckVerdict check_identity_block(FiniteAlgebra const& alg,
                                    Identity const&      identity,
                                    CheckOptions const&  options = {});

  //! True when check_identity_block applies.
  bool is_block_identity(Identity const& identity);

  //! Values of v[n,m,h] over all substitutions from `domain`.
  ElementSet vword_values(FiniteAlgebra const& alg,
                          BlockWord::Shape     shape,
                          ElementSet const&    domain);

  enum class SearchStrategy { exhaustive, generator_biased, sampled };
  std::string_view to_string(SearchStrategy s) noexcept;
  SearchStrategy   strategy_from_string(std::string_view name);

  struct SearchOptions {
    CheckOptions  check;
    //! Preferred values for generator-biased search.
    ElementSet    generators;
    std::uint64_t samples = 100'000;
    std::uint64_t seed    = 1;
  };

  //! generator_biased first exhausts substitutions into `generators`, then
  //! the whole space with generators tried first for every variable.
  CheckVerdict find_identity_violation(FiniteAlgebra const&  alg,
                                       Identity const&       identity,
                                       SearchStrategy        strategy,
                                       SearchOptions const&  options = {});

  //! Evaluates both sides under `sub`; true iff they differ.
  bool witness_refutes(FiniteAlgebra const& alg,
                       Identity const&      identity,
                       Substitution const&  sub);

  // Morphisms --------------------------------------------------------------------

  struct MorphismSpec {
    FiniteAlgebra        source;
    FiniteAlgebra        target;
    std::vector<Element> map;
    Signature            signature;
  };

  struct MorphismReport {
    bool                 ok = true;
    //! "mul", "add" or "star" for the first failing operation.
    std::string          op;
    //! (x, y) for a binary operation, (x) for the star.
    std::vector<Element> witness;
    bool                 injective  = false;
    bool                 surjective = false;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks f(xy) = f(x)f(y), then f(x+y) = f(x)+f(y), then f(x*) = f(x)*,
  //! each over pairs in index order, for the operations in the signature.
  //! Throws MapNotTotal, MissingTable when an operation is absent.
  MorphismReport verify_morphism(FiniteAlgebra const&        source,
                                 FiniteAlgebra const&        target,
                                 std::vector<Element> const& map,
                                 Signature                   signature);
  MorphismReport verify_morphism(MorphismSpec const& spec);
  //! Map given by labels; throws MapNotTotal when a source label is
  //! missing or a target label is unknown.
  MorphismReport verify_morphism(FiniteAlgebra const&                      source,
                                 FiniteAlgebra const&                      target,
                                 std::map<std::string, std::string> const& map,
                                 Signature                                 signature);

}  // namespace bglab

#endif  // BGLAB_CHECKER_HPP_
