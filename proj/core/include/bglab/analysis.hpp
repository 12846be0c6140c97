#ifndef BGLAB_ANALYSIS_HPP_
#define BGLAB_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bglab/algebra.hpp"

namespace bglab {

  //! Outcome of a structural test; `witness` is the first failing tuple in
  //! index order and is empty when the test holds.
  struct Verdict {
    bool                 holds = true;
    std::vector<Element> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Elementwise structure -----------------------------------------------------

  //! E(S) = {a : aa = a}.
  ElementSet idempotents(FiniteAlgebra const& alg);

  //! The idempotent power a^k (k >= 1) of a.
  Element idempotent_power(FiniteAlgebra const& alg, Element a);

  //! ef = e, fe = f implies e = f, and ef = f, fe = e implies e = f, for
  //! idempotents e, f. Witness (e, f).
  Verdict is_block_group(FiniteAlgebra const& alg);

  //! {b : aba = a and bab = b}.
  ElementSet inverses_of(FiniteAlgebra const& alg, Element a);
  //! Every element has at most one inverse. Witness (a, b1, b2).
  Verdict unique_inverse_check(FiniteAlgebra const& alg);

  bool is_regular(FiniteAlgebra const& alg, Element a);

  //! The subsemigroup generated by E(S).
  ElementSet idempotent_generated(FiniteAlgebra const& alg);

  // J-classes -------------------------------------------------------------------

  struct JClasses {
    //! Classes in order of their least element.
    std::vector<ElementSet> classes;
    //! class_of[x] is the position of x's class in `classes`.
    std::vector<std::size_t> class_of;
    //! below[c] lists the classes strictly below c in the J-order.
    std::vector<std::vector<std::size_t>> below;
  };

  JClasses j_classes(FiniteAlgebra const& alg);

  //! S^1 a S^1.
  ElementSet principal_ideal(FiniteAlgebra const& alg, Element a);

  //! Distinct elements generate distinct principal ideals. Witness (a, b).
  Verdict j_trivial(FiniteAlgebra const& alg);
  //! The same test inside the subsemigroup carried by `subset`.
  Verdict j_trivial(FiniteAlgebra const& alg, ElementSet const& subset);

  // Subgroups -----------------------------------------------------------------

  struct MaximalSubgroup {
    Element    idempotent;
    ElementSet elements;
  };

  //! H_e for every idempotent e, ordered by e.
  std::vector<MaximalSubgroup> maximal_subgroups(FiniteAlgebra const& alg);

  struct GroupAnalytics {
    std::uint64_t                exponent = 1;
    std::optional<std::size_t>   derived_length;  // empty when not solvable
    bool                         solvable               = true;
    bool                         dedekind               = true;
    bool                         has_quaternion_subgroup = false;
    std::size_t                  subgroup_count         = 1;
  };

  //! Throws NotAGroup, SubgroupEnumerationBudget when |G| > max_order.
  GroupAnalytics group_analytics(FiniteAlgebra const& group, std::size_t max_order = 128);

  //! Every subgroup, found by closing each known subgroup with one more
  //! element until nothing new appears. Sorted by (order, elements).
  std::vector<ElementSet> subgroups(FiniteAlgebra const& group, std::size_t max_order = 128);

  //! [a, b] = a^-1 b^-1 a b.
  Element commutator(FiniteAlgebra const& group, Element a, Element b);

  //! Derived subgroups G, G', G'', ... down to the first repeat.
  std::vector<ElementSet> derived_series(FiniteAlgebra const& group);

  //! Short name: "trivial", "C<n>", "S3", "D4", "Q8", else "G<n>" or
  //! "A<n>" (non-cyclic abelian).
  std::string describe_group(FiniteAlgebra const& group);

  //! {g : gH = Hg}. Throws NotASubgroup.
  ElementSet normalizer(FiniteAlgebra const& group, ElementSet const& subgroup);

  // Brandt recognition ----------------------------------------------------------

  struct BrandtRecognition {
    bool                         yes = false;
    std::string                  reason;  // why not, when !yes
    std::optional<FiniteAlgebra> group;   // identity at index 0
    unsigned                     index_count = 0;
    //! iso[x] is the index of x's image in brandt_semigroup(*group, index_count).
    std::vector<Element> iso;

    explicit operator bool() const noexcept {
      return yes;
    }
  };

  //! Recognises B_{G,I}: zero, 0-simple, inverse; I = non-zero idempotents,
  //! G = the maximal subgroup at the first of them. The isomorphism onto
  //! brandt_semigroup(G, |I|) is built and checked on every product.
  BrandtRecognition is_brandt(FiniteAlgebra const& alg);

  // Principal series ------------------------------------------------------------

  enum class FactorKind { group, brandt, zero, other };
  std::string_view to_string(FactorKind k) noexcept;

  struct SeriesFactor {
    FactorKind kind = FactorKind::other;
    ElementSet added;                  // the J-class added at this step
    std::size_t group_order = 0;       // group / brandt factors
    unsigned    index_count = 0;       // brandt factors
    std::string group_name;            // labels of the group, e.g. "C2"
  };

  struct SeriesReport {
    std::vector<ElementSet>   chain;    // S_0 c S_1 c ... c S_h
    std::vector<SeriesFactor> factors;  // one per chain entry
    std::size_t               h = 0;
    std::uint64_t             m = 1;
    std::size_t               k = 1;
    bool                      k_floored = false;
    std::uint64_t             q = 1;  // saturates at UINT64_MAX
    std::size_t               r = 1;
    //! True when every factor is group, brandt or zero and S_0 is a group.
    bool brandt_series = false;
  };

  //! Adds one J-class per step along a linear extension of the J-order,
  //! least element index first among the available classes.
  SeriesReport principal_series(FiniteAlgebra const& alg);

  //! Each S_j is an ideal, S_0 is the least ideal, S_h is everything and no
  //! ideal lies strictly between neighbours; (q, r) match (h, m, k).
  //! Returns a description of the first failure.
  std::optional<std::string> verify_series(FiniteAlgebra const& alg,
                                           SeriesReport const&  report);

  std::uint64_t series_q(std::size_t h, std::uint64_t m) noexcept;
  std::size_t   series_r(std::size_t h, std::size_t k) noexcept;

  //! For b in the ideal and f in E(S): fb, bf in {b, 0}. Throws
  //! PreconditionFailed unless the ideal is a Brandt ideal of a block-group.
  //! Witness (f, b).
  Verdict fd_property(FiniteAlgebra const& alg, ElementSet const& brandt_ideal);

  //! Least p >= 1 with x^p = x^(p+1) for every x, if any.
  std::optional<std::uint64_t> aperiodic_index(FiniteAlgebra const& alg);

  //! Everything `analyze` reports.
  nlohmann::json analysis_report(FiniteAlgebra const& alg);

}  // namespace bglab

#endif  // BGLAB_ANALYSIS_HPP_
