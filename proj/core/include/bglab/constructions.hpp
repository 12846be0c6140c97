#ifndef BGLAB_CONSTRUCTIONS_HPP_
#define BGLAB_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"
#include "bglab/group.hpp"
#include "bglab/terms.hpp"

namespace bglab {

  // Brandt semigroups ---------------------------------------------------------

  //! Coordinates of a Brandt element: zero, or a triple (left, g, right) with
  //! 0-based indices into I and the group.
  struct BrandtElement {
    bool     zero  = true;
    unsigned left  = 0;
    Element  group = 0;
    unsigned right = 0;

    bool operator==(BrandtElement const&) const = default;
  };

  //! B_{G,I} for |I| = index_count. The zero has index 0; the triple
  //! (l, g, r) has index 1 + (l*|G| + g)*|I| + r. Labels use 1-based I
  //! indices, e.g. "(1,e,2)". The star is the unique inverse (r, g^-1, l).
  FiniteAlgebra brandt_semigroup(FiniteAlgebra const& group,
                                 unsigned             index_count);

  BrandtElement brandt_coordinates(std::size_t group_order,
                                   unsigned    index_count,
                                   Element     x);
  Element       brandt_index(std::size_t          group_order,
                             unsigned             index_count,
                             BrandtElement const& b);

  //! The six-element Brandt monoid with labels 0, 1, a, b, e, f for the
  //! zero, identity, E12, E21, E11, E22 matrices; mul is the matrix
  //! product, add the entrywise product and star the transpose.
  FiniteAlgebra brandt_monoid_b21();

  // Power constructions -------------------------------------------------------

  //! Subsets of a group are bitmasks: bit i is set iff group element i is a
  //! member. With every subset present the element index equals the mask;
  //! with non-empty subsets only it is mask - 1.
  struct PowerOptions {
    bool nonempty_only = false;
    bool with_union    = true;
    bool with_inverse  = false;
  };

  FiniteAlgebra power_algebra(FiniteAlgebra const& group,
                              PowerOptions         options,
                              Budgets const&       budgets = default_budgets());

  //! (P(G), union, product), or (P'(G), union, product) when nonempty_only.
  FiniteAlgebra power_semiring(FiniteAlgebra const& group,
                               bool                 nonempty_only = false,
                               Budgets const& budgets = default_budgets());

  //! (P(G), product, elementwise inverse).
  FiniteAlgebra involution_power(FiniteAlgebra const& group,
                                 Budgets const& budgets = default_budgets());

  using SubsetMask = std::uint64_t;

  SubsetMask  subset_mask(FiniteAlgebra const& power, Element x);
  Element     subset_element(FiniteAlgebra const& power, SubsetMask mask);
  SubsetMask  mask_of(ElementSet const& group_elements);
  ElementSet  members_of(SubsetMask mask);
  std::string subset_label(FiniteAlgebra const& group, SubsetMask mask);

  //! Product of two subsets inside the group.
  SubsetMask subset_product(FiniteAlgebra const& group, SubsetMask a, SubsetMask b);

  // Hall relations ------------------------------------------------------------

  //! n*n Boolean matrix; entry (i, j) is bit i*n + j.
  struct BoolMatrix {
    unsigned      n    = 0;
    std::uint64_t bits = 0;

    bool get(unsigned i, unsigned j) const noexcept {
      return (bits >> (i * n + j)) & 1u;
    }
    void set(unsigned i, unsigned j, bool v = true) noexcept {
      auto const m = std::uint64_t(1) << (i * n + j);
      bits         = v ? (bits | m) : (bits & ~m);
    }
    BoolMatrix  operator*(BoolMatrix const& that) const noexcept;
    BoolMatrix  operator|(BoolMatrix const& that) const noexcept;
    BoolMatrix  operator&(BoolMatrix const& that) const noexcept;
    BoolMatrix  transposed() const noexcept;
    bool        has_positive_permanent() const;
    std::string label() const;

    static BoolMatrix from_rows(std::vector<std::vector<int>> const& rows);
    bool operator==(BoolMatrix const&) const = default;
  };

  //! All Hall relations on an n-set: n*n Boolean matrices of permanent 1,
  //! enumerated by ascending bit pattern. add = union, mul = relational
  //! product, star = transpose (when with_star).
  FiniteAlgebra hall_semiring(unsigned       n,
                              bool           with_star = true,
                              Budgets const& budgets   = default_budgets());

  BoolMatrix hall_matrix(FiniteAlgebra const& hall, Element x);

  // The subset B ---------------------------------------------------------------

  //! Carrier {E, H, g^-1 H, H g, g^-1 H g} u J of a subsemiring of P(G),
  //! where J is every subset larger than H. The five named members come
  //! first, then J by ascending mask.
  struct SubsetB {
    std::vector<SubsetMask> carrier;
    SubsetMask              identity;
    SubsetMask              subgroup;
    SubsetMask              left_coset;   // g^-1 H
    SubsetMask              right_coset;  // H g
    SubsetMask              conjugate;    // g^-1 H g
    std::size_t             subgroup_order;
  };

  //! Throws NotASubgroup, or NormalSubgroup when g^-1 H g = H.
  SubsetB subset_b(FiniteAlgebra const& group, SubsetMask subgroup, Element g);

  //! Images of a carrier under the element map onto the Brandt monoid:
  //! J -> 0, E -> 1, Hg -> a, g^-1H -> b, H -> e, g^-1Hg -> f.
  std::vector<std::string> subset_b_targets(SubsetB const& b);

  //! (B, union, product) as an ai-semiring, carrier in SubsetB order.
  FiniteAlgebra subset_b_algebra(FiniteAlgebra const& group, SubsetB const& b);

  // Kadourek semigroups --------------------------------------------------------

  //! Partial injection on {0, ..., points-1}; image[x] < 0 means undefined.
  class PartialInjection {
   public:
    PartialInjection() = default;
    explicit PartialInjection(std::size_t points)
        : _image(points, -1) {}

    std::size_t points() const noexcept {
      return _image.size();
    }
    std::optional<unsigned> operator()(unsigned x) const {
      auto const y = _image.at(x);
      return y < 0 ? std::nullopt : std::optional<unsigned>(y);
    }
    //! Throws Error if the map would stop being injective.
    void set(unsigned x, unsigned y);

    //! Right action: apply *this, then `that`.
    PartialInjection then(PartialInjection const& that) const;
    PartialInjection inverse() const;
    bool             empty() const;
    std::string      label() const;

    std::vector<std::int32_t> const& image() const noexcept {
      return _image;
    }
    auto operator<=>(PartialInjection const&) const = default;

   private:
    std::vector<std::int32_t> _image;
  };

  struct KadourekSemigroup {
    FiniteAlgebra                 algebra;
    std::vector<Variable>         variables;   // x_{i1..ih}, lexicographic
    std::vector<Element>          generators;  // chi for each variable
    std::vector<PartialInjection> maps;        // the generator maps
    std::size_t                   points;      // (2n)^h + 1
  };

  //! Inverse semigroup of partial injections on {0, ..., (2n)^h} generated
  //! by the maps chi_v read off the letters of w_n^(h): chi_v(p-1) = p when
  //! letter p is v, chi_v(p) = p-1 when letter p is v^-1. Product is
  //! composition left to right; the empty map is included.
  KadourekSemigroup kadourek_semigroup(unsigned       n,
                                       unsigned       h,
                                       Budgets const& budgets = default_budgets());

  // Generic derived algebras ----------------------------------------------------

  //! Least subset containing `seeds` and closed under the operations of
  //! `ops`.
  ElementSet subalgebra_generate(FiniteAlgebra const& alg,
                                 ElementSet const&    seeds,
                                 Signature            ops);
  ElementSet subalgebra_generate(FiniteAlgebra const& alg,
                                 ElementSet const&    seeds);

  //! (S \ I) u {0}; the zero has index 0, other elements keep their order.
  //! Throws NotAnIdeal.
  FiniteAlgebra rees_quotient(FiniteAlgebra const& alg, ElementSet const& ideal);

  //! A new multiplicative zero (resp. identity) at index 0; every other
  //! element shifts up by one. The result is a plain semigroup.
  FiniteAlgebra adjoin_zero(FiniteAlgebra const& alg, std::string label = "0");
  FiniteAlgebra adjoin_identity(FiniteAlgebra const& alg,
                                std::string          label = "1");

  //! Rebuild an algebra from the `meta` block written by the builders.
  FiniteAlgebra rebuild_from_meta(nlohmann::json const& meta);

}  // namespace bglab

#endif  // BGLAB_CONSTRUCTIONS_HPP_
