#ifndef BGLAB_ERRORS_HPP_
#define BGLAB_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bglab {

  //! Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An algebra file or table violates the structural invariants of
  //! FiniteAlgebra (bad index, duplicate label, inconsistent kind).
  class InvalidAlgebra : public Error {
    using Error::Error;
  };

  //! An operation needs a table (add or star) the algebra does not carry.
  class MissingTable : public Error {
    using Error::Error;
  };

  class MissingStar : public MissingTable {
    using MissingTable::MissingTable;
  };

  //! A term contains the unit `1` but the algebra has no identity element.
  class MissingIdentity : public Error {
    using Error::Error;
  };

  class UnsupportedSize : public Error {
    using Error::Error;
  };

  class CarrierTooLarge : public Error {
    using Error::Error;
  };

  class ClosureBudgetExceeded : public Error {
    using Error::Error;
  };

  class LengthBudgetExceeded : public Error {
    using Error::Error;
  };

  class SubgroupEnumerationBudget : public Error {
    using Error::Error;
  };

  class NotAGroup : public Error {
    using Error::Error;
  };

  class NotASubgroup : public Error {
    using Error::Error;
  };

  //! Raised by subset_b when the chosen conjugate equals the subgroup.
  class NormalSubgroup : public Error {
    using Error::Error;
  };

  class MapNotTotal : public Error {
    using Error::Error;
  };

  class PreconditionFailed : public Error {
    using Error::Error;
  };

  //! The set handed to rees_quotient is not a two-sided ideal; `witness` is
  //! the pair (x, y) whose product leaves the set.
  class NotAnIdeal : public Error {
   public:
    NotAnIdeal(std::string const& what, std::uint32_t x, std::uint32_t y)
        : Error(what), witness{x, y} {}
    std::vector<std::uint32_t> witness;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
  };

}  // namespace bglab

#endif  // BGLAB_ERRORS_HPP_
