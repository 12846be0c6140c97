#ifndef BGLAB_VALIDATE_HPP_
#define BGLAB_VALIDATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"

namespace bglab {

  //! A law that fails, together with the element tuple that instantiates
  //! the failure. Law identifiers:
  //!   mul-assoc, add-assoc, add-comm, add-idem, left-distrib,
  //!   right-distrib, star-anti, star-invol, star-add.
  struct AxiomViolation {
    std::string          law;
    std::vector<Element> witness;

    bool operator==(AxiomViolation const&) const = default;
  };

  // Each validator returns std::nullopt when every law holds, otherwise the
  // lexicographically first witness of the first failing law (laws are
  // checked in the order listed above).

  std::optional<AxiomViolation> validate_semigroup(FiniteAlgebra const& alg);

  //! Throws MissingTable when the algebra has no addition.
  std::optional<AxiomViolation> validate_ai_semiring(FiniteAlgebra const& alg);

  //! Checks (xy)* = y*x* and x** = x; when an addition is present also
  //! (x+y)* = x*+y*. Throws MissingTable when the algebra has no star.
  std::optional<AxiomViolation> validate_involution(FiniteAlgebra const& alg);

  //! Runs every validator that the algebra kind calls for.
  std::optional<AxiomViolation> validate(FiniteAlgebra const& alg);

  //! Re-evaluates a violation against the tables; true iff the two sides
  //! named by the law really differ on the witness.
  bool replays(FiniteAlgebra const& alg, AxiomViolation const& violation);

  std::string describe(FiniteAlgebra const& alg, AxiomViolation const& v);

}  // namespace bglab

#endif  // BGLAB_VALIDATE_HPP_
