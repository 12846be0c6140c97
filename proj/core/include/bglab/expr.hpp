#ifndef BGLAB_EXPR_HPP_
#define BGLAB_EXPR_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bglab/algebra.hpp"
#include "bglab/terms.hpp"

namespace bglab {

  //! A term that keeps its powers and v-family members folded, so that
  //! x^(2^h m) or v_{n,m}^(h) is never expanded. A v-family node stores
  //! only (n, m, h); its block tree is built when the term is compiled.
  //! Stars are pushed down to the letters on construction.
  class Expr {
   public:
    enum class Kind { one, letter, product, power, vword };

    static Expr one();
    static Expr letter(Letter l);
    static Expr variable(Variable v);
    //! Nested products are spliced and units dropped.
    static Expr product(std::vector<Expr> factors);
    //! k == 0 gives the unit, k == 1 the base itself.
    static Expr power(Expr base, std::uint64_t k);
    static Expr vword(unsigned n, std::uint64_t m, unsigned h);
    //! A v-family word keeps its shape; anything else is flattened.
    static Expr block(BlockWord const& w);
    static Expr from_term(Term const& t);

    //! Letter-wise involution: (uv)' = v'u', (u^k)' = (u')^k.
    //! Throws LengthBudgetExceeded when a block has to be expanded.
    Expr starred() const;

    Kind kind() const noexcept;
    Letter const&            letter() const;
    std::vector<Expr> const& factors() const;
    Expr const&              base() const;
    std::uint64_t            exponent() const;
    BlockWord::Shape const&  shape() const;
    //! The block tree of a v-family node, within the leaf budget.
    BlockWord                block_word() const;

    std::vector<Variable> alphabet() const;
    std::uint64_t         flat_length() const noexcept;
    Term                  flatten(std::size_t budget) const;
    bool                  uses_star() const;
    bool                  is_unit() const noexcept;

    //! DSL text; powers stay folded, v-family nodes print as v[n,m,h].
    std::string to_string() const;

    bool operator==(Expr const& that) const;

   private:
    struct Node;
    explicit Expr(std::shared_ptr<Node const> n) : _node(std::move(n)) {}
    std::shared_ptr<Node const> _node;
  };

  struct Identity {
    Expr lhs;
    Expr rhs;

    //! Union of both sides' alphabets, sorted.
    std::vector<Variable> alphabet() const;
    bool                  uses_star() const;
    bool                  uses_one() const;
    std::string           to_string() const;
  };

  //! Postfix program for one side of an identity over a fixed alphabet
  //! ordering. Substitution values are passed positionally.
  class Program {
   public:
    Program(Expr const& e, std::vector<Variable> const& alphabet);

    //! `one` is used only when the expression contains the unit.
    Element run(FiniteAlgebra const&    alg,
                Element const*          values,
                Element                 one,
                std::vector<Element>&   stack,
                std::vector<Element>&   registers) const;

    Element run(FiniteAlgebra const& alg, Element const* values, Element one) const;

    std::size_t registers() const noexcept {
      return _registers;
    }
    std::size_t stack_depth() const noexcept {
      return _depth;
    }

   private:
    enum class Op : std::uint8_t { var, var_star, one, mul, pow, store, load };
    struct Instr {
      Op            op;
      std::uint64_t arg;
    };
    void emit(Op op, std::uint64_t arg = 0);
    void compile(Expr const& e, std::vector<Variable> const& alphabet);
    void compile_block(BlockWord const& w, std::vector<Variable> const& alphabet);

    std::vector<Instr> _code;
    std::size_t        _registers = 0;
    std::size_t        _depth     = 0;
    std::size_t        _current   = 0;
  };

}  // namespace bglab

#endif  // BGLAB_EXPR_HPP_
