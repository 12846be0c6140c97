#ifndef BGLAB_CORPUS_HPP_
#define BGLAB_CORPUS_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"

namespace bglab {

  //! Calls `visit` with every associative table on {0, ..., order-1}, as
  //! raw tables (no identification up to isomorphism), in lexicographic
  //! order of the row-major entries. Returns the number visited.
  std::size_t for_each_semigroup(unsigned order, std::function<void(Table const&)> const& visit);

  //! Every semigroup of for_each_semigroup as a labelled algebra ("0",
  //! "1", ...). Counts for orders 1..4 are 1, 8, 113, 3492.
  std::vector<FiniteAlgebra> enumerate_semigroups(unsigned order);

  struct NamedAlgebra {
    std::string   name;
    FiniteAlgebra algebra;
  };

  //! Multiplicative reducts of the library's constructions with small
  //! parameters: groups, Brandt semigroups, B21, power semigroups, Hall
  //! monoids, Kadourek semigroups, the subset B and derived algebras.
  std::vector<NamedAlgebra> construction_corpus();

}  // namespace bglab

#endif  // BGLAB_CORPUS_HPP_
