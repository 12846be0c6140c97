#ifndef BGLAB_TERMS_HPP_
#define BGLAB_TERMS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"

namespace bglab {

  //! x_{i1 i2 ... ih}: an index tuple with 1-based entries. Variables order
  //! lexicographically by their index tuples.
  struct Variable {
    std::vector<std::uint32_t> index;

    Variable() = default;
    Variable(std::initializer_list<std::uint32_t> idx) : index(idx) {}
    explicit Variable(std::vector<std::uint32_t> idx) : index(std::move(idx)) {}

    std::size_t depth() const noexcept {
      return index.size();
    }
    //! "x3" for depth 1, "x1_2" for deeper tuples.
    std::string name() const;

    auto operator<=>(Variable const&) const = default;
    bool operator==(Variable const&) const  = default;
  };

  struct Letter {
    Variable var;
    bool     inverse = false;

    auto operator<=>(Letter const&) const = default;
    bool operator==(Letter const&) const  = default;
  };

  //! A flat term: a word when every exponent is +1, an involution term
  //! otherwise. The empty term stands for the unit "1".
  class Term {
   public:
    Term() = default;
    explicit Term(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    static Term word(std::vector<Variable> const& vars);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool is_unit() const noexcept {
      return _letters.empty();
    }
    bool is_word() const noexcept;

    //! Sorted distinct variables.
    std::vector<Variable> alphabet() const;

    //! (uv)^-1 = v^-1 u^-1, letter by letter.
    Term inverse() const;
    Term operator*(Term const& that) const;
    Term pow(std::uint64_t k, std::size_t budget) const;

    bool operator==(Term const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  //! Recursive form of the v-family: a leaf variable, or a node over 2n
  //! blocks b_1..b_2n whose value is
  //!   b_1 ... b_2n (b_n ... b_1 b_(n+1) ... b_2n)^repeat.
  class BlockWord {
   public:
    struct Shape {
      unsigned      n = 1;
      std::uint64_t m = 1;
      unsigned      h = 1;
      bool operator==(Shape const&) const = default;
    };

    static BlockWord leaf(Variable v);
    static BlockWord node(std::vector<BlockWord> blocks, std::uint64_t repeat);

    bool is_leaf() const noexcept;
    Variable const&               variable() const;
    std::vector<BlockWord> const& blocks() const;
    std::uint64_t                 repeat() const;

    //! Set on words produced by v_word; block-image checking relies on it.
    std::optional<Shape> const& shape() const noexcept;

    std::uint64_t leaf_count() const noexcept;
    //! Length of the flattened word, saturating at UINT64_MAX.
    std::uint64_t flat_length() const noexcept;
    //! Throws LengthBudgetExceeded when flat_length() > budget.
    Term                  flatten(std::size_t budget) const;
    std::vector<Variable> alphabet() const;

    bool operator==(BlockWord const& that) const;

   private:
    struct Node;
    std::shared_ptr<Node const> _node;
    std::optional<Shape>        _shape;
    friend BlockWord v_word(unsigned, std::uint64_t, unsigned, std::size_t);
  };

  //! Total assignment from an alphabet (sorted) to carrier elements.
  class Substitution {
   public:
    Substitution() = default;
    Substitution(std::vector<Variable> alphabet, std::vector<Element> values);

    std::vector<Variable> const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Element> const& values() const noexcept {
      return _values;
    }
    //! Throws Error if the variable is not in the alphabet.
    Element operator[](Variable const& v) const;
    bool    covers(std::vector<Variable> const& vars) const;

    bool operator==(Substitution const&) const = default;

   private:
    std::vector<Variable> _alphabet;
    std::vector<Element>  _values;
  };

  // Families -------------------------------------------------------------------

  //! Appends j to the index tuple of a depth h-1 variable over 1..width.
  Variable sigma_apply(unsigned width, unsigned j, unsigned h, Variable const& var);

  //! v_{n,m}^{(h)} over X_{2n}^{(h)}. `max_leaves` bounds the block tree,
  //! which has (2n)^h leaves. Throws LengthBudgetExceeded, PreconditionFailed
  //! for zero parameters.
  BlockWord v_word(unsigned      n,
                   std::uint64_t m,
                   unsigned      h,
                   std::size_t   max_leaves = default_budgets().word_length);

  //! u_{n,k,m} over X_{n+k}^{(1)}.
  Term u_word(unsigned n, unsigned k, std::uint64_t m);

  //! Image of flatten(v_{n,m}^{(h)}) under the substitution that sends
  //! x_{i1..ih} to v_{n,m}^{(r)} with i1..ih appended to every index.
  Term zeta_expand(unsigned      n,
                   std::uint64_t m,
                   unsigned      h,
                   unsigned      r,
                   std::size_t   budget = default_budgets().word_length);

  //! w_n^{(h)}, flat, of length (2n)^h.
  Term w_word(unsigned n, unsigned h, std::size_t budget = default_budgets().word_length);

  //! All index tuples of X_width^{(depth)} in lexicographic order.
  std::vector<Variable> variables_of(unsigned width, unsigned depth);

  // Evaluation -----------------------------------------------------------------

  //! x^k for k >= 1 by repeated squaring.
  Element power(FiniteAlgebra const& alg, Element x, std::uint64_t k);

  //! Left-to-right product; inverse letters apply the star. The unit term
  //! evaluates to the identity element. Throws MissingStar, MissingIdentity.
  Element evaluate(Term const& term, Substitution const& sub, FiniteAlgebra const& alg);

  //! Compositional evaluation; the flat word is never built.
  Element evaluate(BlockWord const& word, Substitution const& sub, FiniteAlgebra const& alg);

}  // namespace bglab

#endif  // BGLAB_TERMS_HPP_
