#ifndef BGLAB_GROUP_HPP_
#define BGLAB_GROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"

namespace bglab {

  //! The supported concrete group families.
  struct GroupSpec {
    enum class Family { cyclic, symmetric, dihedral, quaternion8 };

    Family   family = Family::cyclic;
    unsigned n      = 1;

    static GroupSpec cyclic(unsigned n) {
      return {Family::cyclic, n};
    }
    static GroupSpec symmetric(unsigned n) {
      return {Family::symmetric, n};
    }
    static GroupSpec dihedral(unsigned n) {
      return {Family::dihedral, n};
    }
    static GroupSpec quaternion8() {
      return {Family::quaternion8, 8};
    }

    //! Short names: C<n>, Z<n>, S<n>, D<n>, Q8.
    static GroupSpec parse(std::string const& name);
    std::string      name() const;

    nlohmann::json   to_json() const;
    static GroupSpec from_json(nlohmann::json const& j);

    bool operator==(GroupSpec const&) const = default;
  };

  //! Group table with identity at index 0 and star = inverse.
  //!   cyclic(n)    labels e, a, a^2, ..., a^(n-1)
  //!   symmetric(n) permutations of {1..n} in lexicographic order of their
  //!                image lists, labelled in cycle notation (identity "e")
  //!   dihedral(n)  r^i s^j, order 2n, listed as e, r, ..., r^(n-1), s, rs, ...
  //!   quaternion8  1, -1, i, -i, j, -j, k, -k
  //! Throws UnsupportedSize for symmetric(n > 5) and for n == 0.
  FiniteAlgebra make_group(GroupSpec const& spec);

  //! Identity and inverse map of a group table.
  struct GroupInfo {
    Element              identity = 0;
    std::vector<Element> inverse;
  };

  std::optional<GroupInfo> group_structure(FiniteAlgebra const& alg);
  //! Throws NotAGroup.
  GroupInfo require_group(FiniteAlgebra const& alg);

  //! The subgroup generated by `generators` (identity included).
  ElementSet subgroup_closure(FiniteAlgebra const& group,
                              GroupInfo const&     info,
                              ElementSet const&    generators);

  bool is_subgroup(FiniteAlgebra const& group,
                   GroupInfo const&     info,
                   ElementSet const&    set);

  std::uint64_t element_order(FiniteAlgebra const& group,
                              GroupInfo const&     info,
                              Element              x);

  //! Group carried by `elements` of `alg` (a subgroup of a semigroup), as a
  //! standalone group table with the subgroup identity moved to index 0.
  FiniteAlgebra extract_group(FiniteAlgebra const& alg,
                              ElementSet const&    elements);

}  // namespace bglab

#endif  // BGLAB_GROUP_HPP_
