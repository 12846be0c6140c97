#include "bglab/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bglab/errors.hpp"

namespace bglab {

  struct Expr::Node {
    Kind                     kind = Kind::one;
    Letter                   letter;
    std::vector<Expr>        factors;  // product; power keeps its base at [0]
    std::uint64_t            exponent = 0;
    BlockWord::Shape         shape;
  };

  namespace {
    constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
      return (a != 0 && b > kSaturated / a) ? kSaturated : a * b;
    }
  }  // namespace

  Expr Expr::one() {
    return Expr(std::make_shared<Node>());
  }

  Expr Expr::letter(Letter l) {
    auto n    = std::make_shared<Node>();
    n->kind   = Kind::letter;
    n->letter = std::move(l);
    return Expr(std::move(n));
  }

  Expr Expr::variable(Variable v) {
    return letter({std::move(v), false});
  }

  Expr Expr::product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
      if (f.kind() == Kind::product) {
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      } else if (f.kind() != Kind::one) {
        flat.push_back(std::move(f));
      }
    }
    if (flat.empty()) {
      return one();
    }
    if (flat.size() == 1) {
      return flat[0];
    }
    auto n     = std::make_shared<Node>();
    n->kind    = Kind::product;
    n->factors = std::move(flat);
    return Expr(std::move(n));
  }

  Expr Expr::power(Expr base, std::uint64_t k) {
    if (k == 0 || base.is_unit()) {
      return one();
    }
    if (k == 1) {
      return base;
    }
    if (base.kind() == Kind::power) {
      return power(base.base(), sat_mul(base.exponent(), k));
    }
    auto n      = std::make_shared<Node>();
    n->kind     = Kind::power;
    n->factors  = {std::move(base)};
    n->exponent = k;
    return Expr(std::move(n));
  }

  Expr Expr::vword(unsigned n, std::uint64_t m, unsigned h) {
    if (n == 0 || m == 0 || h == 0) {
      throw PreconditionFailed("v-family parameters must be positive");
    }
    if (m > (kSaturated >> 2)) {
      throw PreconditionFailed("v-family: m too large");
    }
    auto node   = std::make_shared<Node>();
    node->kind  = Kind::vword;
    node->shape = {n, m, h};
    return Expr(std::move(node));
  }

  Expr Expr::block(BlockWord const& w) {
    if (w.is_leaf()) {
      return variable(w.variable());
    }
    if (auto const& s = w.shape()) {
      return vword(s->n, s->m, s->h);
    }
    return from_term(w.flatten(default_budgets().word_length));
  }

  Expr Expr::from_term(Term const& t) {
    std::vector<Expr> letters;
    letters.reserve(t.length());
    for (auto const& l : t.letters()) {
      letters.push_back(letter(l));
    }
    return product(std::move(letters));
  }

  Expr Expr::starred() const {
    switch (kind()) {
      case Kind::one:
        return *this;
      case Kind::letter:
        return letter({_node->letter.var, !_node->letter.inverse});
      case Kind::product: {
        std::vector<Expr> out;
        for (auto it = factors().rbegin(); it != factors().rend(); ++it) {
          out.push_back(it->starred());
        }
        return product(std::move(out));
      }
      case Kind::power:
        return power(base().starred(), exponent());
      case Kind::vword:
        return from_term(flatten(default_budgets().word_length).inverse());
    }
    return *this;
  }

  Expr::Kind Expr::kind() const noexcept {
    return _node->kind;
  }

  Letter const& Expr::letter() const {
    if (kind() != Kind::letter) {
      throw PreconditionFailed("expression is not a letter");
    }
    return _node->letter;
  }

  std::vector<Expr> const& Expr::factors() const {
    if (kind() != Kind::product) {
      throw PreconditionFailed("expression is not a product");
    }
    return _node->factors;
  }

  Expr const& Expr::base() const {
    if (kind() != Kind::power) {
      throw PreconditionFailed("expression is not a power");
    }
    return _node->factors[0];
  }

  std::uint64_t Expr::exponent() const {
    if (kind() != Kind::power) {
      throw PreconditionFailed("expression is not a power");
    }
    return _node->exponent;
  }

  BlockWord::Shape const& Expr::shape() const {
    if (kind() != Kind::vword) {
      throw PreconditionFailed("expression is not a v-family word");
    }
    return _node->shape;
  }

  BlockWord Expr::block_word() const {
    auto const& s = shape();
    return v_word(s.n, s.m, s.h);
  }

  namespace {
    void collect(Expr const& e, std::vector<Variable>& out) {
      switch (e.kind()) {
        case Expr::Kind::one:
          return;
        case Expr::Kind::letter:
          out.push_back(e.letter().var);
          return;
        case Expr::Kind::product:
          for (auto const& f : e.factors()) {
            collect(f, out);
          }
          return;
        case Expr::Kind::power:
          collect(e.base(), out);
          return;
        case Expr::Kind::vword: {
          auto const& s = e.shape();
          if (std::pow(2.0 * s.n, s.h) > double(default_budgets().word_length)) {
            throw LengthBudgetExceeded("alphabet of " + e.to_string()
                                       + " exceeds the word-length budget");
          }
          auto const a = variables_of(2 * s.n, s.h);
          out.insert(out.end(), a.begin(), a.end());
          return;
        }
      }
    }

    void flatten_into(Expr const& e, std::vector<Letter>& out, std::size_t budget) {
      switch (e.kind()) {
        case Expr::Kind::one:
          return;
        case Expr::Kind::letter:
          out.push_back(e.letter());
          return;
        case Expr::Kind::product:
          for (auto const& f : e.factors()) {
            flatten_into(f, out, budget);
          }
          return;
        case Expr::Kind::power: {
          auto const start = out.size();
          flatten_into(e.base(), out, budget);
          auto const end = out.size();
          for (std::uint64_t i = 1; i < e.exponent(); ++i) {
            out.insert(out.end(),
                       out.begin() + static_cast<std::ptrdiff_t>(start),
                       out.begin() + static_cast<std::ptrdiff_t>(end));
          }
          return;
        }
        case Expr::Kind::vword: {
          auto const t = e.block_word().flatten(budget);
          out.insert(out.end(), t.letters().begin(), t.letters().end());
          return;
        }
      }
    }
  }  // namespace

  std::vector<Variable> Expr::alphabet() const {
    std::vector<Variable> out;
    collect(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::uint64_t Expr::flat_length() const noexcept {
    switch (kind()) {
      case Kind::one:
        return 0;
      case Kind::letter:
        return 1;
      case Kind::product: {
        std::uint64_t total = 0;
        for (auto const& f : _node->factors) {
          auto const l = f.flat_length();
          total        = l > kSaturated - total ? kSaturated : total + l;
        }
        return total;
      }
      case Kind::power:
        return sat_mul(_node->factors[0].flat_length(), _node->exponent);
      case Kind::vword: {
        std::uint64_t len = 1;
        for (unsigned i = 0; i < _node->shape.h; ++i) {
          len = sat_mul(len, sat_mul(4 * _node->shape.n, _node->shape.m));
        }
        return len;
      }
    }
    return 0;
  }

  Term Expr::flatten(std::size_t budget) const {
    if (flat_length() > budget) {
      throw LengthBudgetExceeded("expression expands beyond " + std::to_string(budget)
                                 + " letters");
    }
    std::vector<Letter> out;
    out.reserve(flat_length());
    flatten_into(*this, out, budget);
    return Term(std::move(out));
  }

  bool Expr::uses_star() const {
    switch (kind()) {
      case Kind::one:
      case Kind::vword:
        return false;
      case Kind::letter:
        return _node->letter.inverse;
      case Kind::product:
        return std::any_of(_node->factors.begin(),
                           _node->factors.end(),
                           [](Expr const& f) { return f.uses_star(); });
      case Kind::power:
        return base().uses_star();
    }
    return false;
  }

  bool Expr::is_unit() const noexcept {
    return kind() == Kind::one;
  }

  std::string Expr::to_string() const {
    switch (kind()) {
      case Kind::one:
        return "1";
      case Kind::letter:
        return _node->letter.var.name() + (_node->letter.inverse ? "'" : "");
      case Kind::product: {
        std::string out;
        for (auto const& f : _node->factors) {
          if (!out.empty()) {
            out += ' ';
          }
          out += f.to_string();
        }
        return out;
      }
      case Kind::power: {
        auto const& b    = base();
        bool const  wrap = b.kind() == Kind::product;
        return (wrap ? "(" + b.to_string() + ")" : b.to_string()) + "^"
               + std::to_string(exponent());
      }
      case Kind::vword: {
        auto const& s = _node->shape;
        return "v[" + std::to_string(s.n) + "," + std::to_string(s.m) + ","
               + std::to_string(s.h) + "]";
      }
    }
    return {};
  }

  bool Expr::operator==(Expr const& that) const {
    if (_node == that._node) {
      return true;
    }
    if (kind() != that.kind()) {
      return false;
    }
    switch (kind()) {
      case Kind::one:
        return true;
      case Kind::letter:
        return letter() == that.letter();
      case Kind::product:
        return factors() == that.factors();
      case Kind::power:
        return exponent() == that.exponent() && base() == that.base();
      case Kind::vword:
        return shape() == that.shape();
    }
    return false;
  }

  // Identity --------------------------------------------------------------------

  std::vector<Variable> Identity::alphabet() const {
    auto out = lhs.alphabet();
    auto r   = rhs.alphabet();
    out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool Identity::uses_star() const {
    return lhs.uses_star() || rhs.uses_star();
  }

  namespace {
    bool has_unit(Expr const& e) {
      switch (e.kind()) {
        case Expr::Kind::one:
          return true;
        case Expr::Kind::product:
          return std::any_of(e.factors().begin(), e.factors().end(), has_unit);
        case Expr::Kind::power:
          return has_unit(e.base());
        default:
          return false;
      }
    }
  }  // namespace

  bool Identity::uses_one() const {
    return has_unit(lhs) || has_unit(rhs);
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  // Program ---------------------------------------------------------------------

  Program::Program(Expr const& e, std::vector<Variable> const& alphabet) {
    compile(e, alphabet);
  }

  void Program::emit(Op op, std::uint64_t arg) {
    _code.push_back({op, arg});
    switch (op) {
      case Op::var:
      case Op::var_star:
      case Op::one:
      case Op::load:
        ++_current;
        break;
      case Op::mul:
      case Op::store:
        --_current;
        break;
      case Op::pow:
        break;
    }
    _depth = std::max(_depth, _current);
  }

  void Program::compile(Expr const& e, std::vector<Variable> const& alphabet) {
    switch (e.kind()) {
      case Expr::Kind::one:
        emit(Op::one);
        return;
      case Expr::Kind::letter: {
        auto const& l  = e.letter();
        auto        it = std::lower_bound(alphabet.begin(), alphabet.end(), l.var);
        if (it == alphabet.end() || *it != l.var) {
          throw PreconditionFailed("program alphabet does not contain "
                                   + l.var.name());
        }
        emit(l.inverse ? Op::var_star : Op::var,
             static_cast<std::uint64_t>(it - alphabet.begin()));
        return;
      }
      case Expr::Kind::product: {
        bool first = true;
        for (auto const& f : e.factors()) {
          compile(f, alphabet);
          if (!first) {
            emit(Op::mul);
          }
          first = false;
        }
        return;
      }
      case Expr::Kind::power:
        compile(e.base(), alphabet);
        emit(Op::pow, e.exponent());
        return;
      case Expr::Kind::vword:
        compile_block(e.block_word(), alphabet);
        return;
    }
  }

  void Program::compile_block(BlockWord const& w, std::vector<Variable> const& alphabet) {
    if (w.is_leaf()) {
      compile(Expr::variable(w.variable()), alphabet);
      return;
    }
    // each block is computed once, parked in a register, then reused by
    // both the prefix and the repeated period
    std::vector<std::size_t> regs;
    for (auto const& b : w.blocks()) {
      compile_block(b, alphabet);
      regs.push_back(_registers++);
      emit(Op::store, regs.back());
    }
    auto const half = regs.size() / 2;
    emit(Op::load, regs[0]);
    for (std::size_t i = 1; i < regs.size(); ++i) {
      emit(Op::load, regs[i]);
      emit(Op::mul);
    }
    if (w.repeat() == 0) {
      return;
    }
    emit(Op::load, regs[half - 1]);
    for (std::size_t i = half - 1; i-- > 0;) {
      emit(Op::load, regs[i]);
      emit(Op::mul);
    }
    for (std::size_t i = half; i < regs.size(); ++i) {
      emit(Op::load, regs[i]);
      emit(Op::mul);
    }
    emit(Op::pow, w.repeat());
    emit(Op::mul);
  }

  Element Program::run(FiniteAlgebra const&  alg,
                       Element const*        values,
                       Element               one,
                       std::vector<Element>& stack,
                       std::vector<Element>& registers) const {
    stack.resize(_depth + 1);
    registers.resize(_registers);
    std::size_t sp = 0;
    for (auto const& in : _code) {
      switch (in.op) {
        case Op::var:
          stack[sp++] = values[in.arg];
          break;
        case Op::var_star:
          stack[sp++] = alg.star(values[in.arg]);
          break;
        case Op::one:
          stack[sp++] = one;
          break;
        case Op::mul:
          --sp;
          stack[sp - 1] = alg.mul(stack[sp - 1], stack[sp]);
          break;
        case Op::pow:
          stack[sp - 1] = power(alg, stack[sp - 1], in.arg);
          break;
        case Op::store:
          registers[in.arg] = stack[--sp];
          break;
        case Op::load:
          stack[sp++] = registers[in.arg];
          break;
      }
    }
    return stack[0];
  }

  Element Program::run(FiniteAlgebra const& alg, Element const* values, Element one) const {
    std::vector<Element> stack, regs;
    return run(alg, values, one, stack, regs);
  }

}  // namespace bglab
