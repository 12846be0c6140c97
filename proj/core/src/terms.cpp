#include "bglab/terms.hpp"

#include <algorithm>
#include <limits>

#include "bglab/errors.hpp"

namespace bglab {

  namespace {
    constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
      if (a != 0 && b > kSaturated / a) {
        return kSaturated;
      }
      return a * b;
    }

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
      return a > kSaturated - b ? kSaturated : a + b;
    }

    std::vector<Variable> sorted_unique(std::vector<Variable> vars) {
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      return vars;
    }
  }  // namespace

  std::string Variable::name() const {
    std::string out = "x";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i > 0) {
        out += '_';
      }
      out += std::to_string(index[i]);
    }
    return out;
  }

  // Term ------------------------------------------------------------------------

  Term Term::word(std::vector<Variable> const& vars) {
    std::vector<Letter> letters;
    letters.reserve(vars.size());
    for (auto const& v : vars) {
      letters.push_back({v, false});
    }
    return Term(std::move(letters));
  }

  bool Term::is_word() const noexcept {
    return std::none_of(_letters.begin(), _letters.end(), [](Letter const& l) {
      return l.inverse;
    });
  }

  std::vector<Variable> Term::alphabet() const {
    std::vector<Variable> vars;
    vars.reserve(_letters.size());
    for (auto const& l : _letters) {
      vars.push_back(l.var);
    }
    return sorted_unique(std::move(vars));
  }

  Term Term::inverse() const {
    std::vector<Letter> out(_letters.rbegin(), _letters.rend());
    for (auto& l : out) {
      l.inverse = !l.inverse;
    }
    return Term(std::move(out));
  }

  Term Term::operator*(Term const& that) const {
    std::vector<Letter> out = _letters;
    out.insert(out.end(), that._letters.begin(), that._letters.end());
    return Term(std::move(out));
  }

  Term Term::pow(std::uint64_t k, std::size_t budget) const {
    if (sat_mul(length(), k) > budget) {
      throw LengthBudgetExceeded("term power exceeds the length budget");
    }
    std::vector<Letter> out;
    out.reserve(length() * k);
    for (std::uint64_t i = 0; i < k; ++i) {
      out.insert(out.end(), _letters.begin(), _letters.end());
    }
    return Term(std::move(out));
  }

  // BlockWord -----------------------------------------------------------------

  struct BlockWord::Node {
    std::optional<Variable> var;
    std::vector<BlockWord>  blocks;
    std::uint64_t           repeat      = 0;
    std::uint64_t           leaves      = 1;
    std::uint64_t           flat_length = 1;
  };

  BlockWord BlockWord::leaf(Variable v) {
    auto node = std::make_shared<Node>();
    node->var = std::move(v);
    BlockWord w;
    w._node = std::move(node);
    return w;
  }

  BlockWord BlockWord::node(std::vector<BlockWord> blocks, std::uint64_t repeat) {
    if (blocks.empty() || blocks.size() % 2 != 0) {
      throw PreconditionFailed("block node needs an even, positive block count");
    }
    auto          node = std::make_shared<Node>();
    std::uint64_t leaves = 0, len = 0;
    for (auto const& b : blocks) {
      leaves = sat_add(leaves, b.leaf_count());
      len    = sat_add(len, b.flat_length());
    }
    node->leaves      = leaves;
    node->flat_length = sat_mul(len, sat_add(1, repeat));
    node->blocks      = std::move(blocks);
    node->repeat      = repeat;
    BlockWord w;
    w._node = std::move(node);
    return w;
  }

  bool BlockWord::is_leaf() const noexcept {
    return _node->var.has_value();
  }

  Variable const& BlockWord::variable() const {
    if (!is_leaf()) {
      throw PreconditionFailed("block word is not a leaf");
    }
    return *_node->var;
  }

  std::vector<BlockWord> const& BlockWord::blocks() const {
    return _node->blocks;
  }

  std::uint64_t BlockWord::repeat() const {
    return _node->repeat;
  }

  std::optional<BlockWord::Shape> const& BlockWord::shape() const noexcept {
    return _shape;
  }

  std::uint64_t BlockWord::leaf_count() const noexcept {
    return _node->leaves;
  }

  std::uint64_t BlockWord::flat_length() const noexcept {
    return _node->flat_length;
  }

  namespace {
    void flatten_into(BlockWord const& w, std::vector<Letter>& out) {
      if (w.is_leaf()) {
        out.push_back({w.variable(), false});
        return;
      }
      auto const& b    = w.blocks();
      auto const  half = b.size() / 2;
      for (auto const& x : b) {
        flatten_into(x, out);
      }
      auto const period_start = out.size();
      for (std::size_t i = half; i-- > 0;) {
        flatten_into(b[i], out);
      }
      for (std::size_t i = half; i < b.size(); ++i) {
        flatten_into(b[i], out);
      }
      auto const period_end = out.size();
      for (std::uint64_t r = 1; r < w.repeat(); ++r) {
        out.insert(out.end(),
                   out.begin() + static_cast<std::ptrdiff_t>(period_start),
                   out.begin() + static_cast<std::ptrdiff_t>(period_end));
      }
      if (w.repeat() == 0) {
        out.resize(period_start);
      }
    }

    void collect(BlockWord const& w, std::vector<Variable>& out) {
      if (w.is_leaf()) {
        out.push_back(w.variable());
        return;
      }
      for (auto const& b : w.blocks()) {
        collect(b, out);
      }
    }
  }  // namespace

  Term BlockWord::flatten(std::size_t budget) const {
    if (flat_length() > budget) {
      throw LengthBudgetExceeded("flattened word has length above "
                                 + std::to_string(budget));
    }
    std::vector<Letter> out;
    out.reserve(flat_length());
    flatten_into(*this, out);
    return Term(std::move(out));
  }

  std::vector<Variable> BlockWord::alphabet() const {
    std::vector<Variable> vars;
    collect(*this, vars);
    return sorted_unique(std::move(vars));
  }

  bool BlockWord::operator==(BlockWord const& that) const {
    if (_node == that._node) {
      return true;
    }
    if (is_leaf() != that.is_leaf()) {
      return false;
    }
    if (is_leaf()) {
      return variable() == that.variable();
    }
    return repeat() == that.repeat() && blocks() == that.blocks();
  }

  // Substitution --------------------------------------------------------------

  Substitution::Substitution(std::vector<Variable> alphabet,
                             std::vector<Element>  values)
      : _alphabet(std::move(alphabet)), _values(std::move(values)) {
    if (_alphabet.size() != _values.size()) {
      throw PreconditionFailed("substitution: alphabet/value size mismatch");
    }
    if (!std::is_sorted(_alphabet.begin(), _alphabet.end())
        || std::adjacent_find(_alphabet.begin(), _alphabet.end())
               != _alphabet.end()) {
      throw PreconditionFailed("substitution alphabet must be sorted and distinct");
    }
  }

  Element Substitution::operator[](Variable const& v) const {
    auto it = std::lower_bound(_alphabet.begin(), _alphabet.end(), v);
    if (it == _alphabet.end() || *it != v) {
      throw PreconditionFailed("substitution does not cover " + v.name());
    }
    return _values[static_cast<std::size_t>(it - _alphabet.begin())];
  }

  bool Substitution::covers(std::vector<Variable> const& vars) const {
    return std::all_of(vars.begin(), vars.end(), [this](Variable const& v) {
      return std::binary_search(_alphabet.begin(), _alphabet.end(), v);
    });
  }

  // Families ------------------------------------------------------------------

  Variable sigma_apply(unsigned width, unsigned j, unsigned h, Variable const& var) {
    if (h < 2 || var.depth() != h - 1) {
      throw PreconditionFailed("sigma: variable depth must be h-1");
    }
    if (j < 1 || j > width) {
      throw PreconditionFailed("sigma: appended index out of range");
    }
    for (auto i : var.index) {
      if (i < 1 || i > width) {
        throw PreconditionFailed("sigma: variable index out of range");
      }
    }
    Variable out = var;
    out.index.push_back(j);
    return out;
  }

  namespace {
    BlockWord rename_append(BlockWord const& w, std::uint32_t j) {
      if (w.is_leaf()) {
        Variable v = w.variable();
        v.index.push_back(j);
        return BlockWord::leaf(std::move(v));
      }
      std::vector<BlockWord> blocks;
      blocks.reserve(w.blocks().size());
      for (auto const& b : w.blocks()) {
        blocks.push_back(rename_append(b, j));
      }
      return BlockWord::node(std::move(blocks), w.repeat());
    }

    void check_positive(std::uint64_t x, char const* what) {
      if (x == 0) {
        throw PreconditionFailed(std::string(what) + " must be positive");
      }
    }
  }  // namespace

  BlockWord v_word(unsigned n, std::uint64_t m, unsigned h, std::size_t max_leaves) {
    check_positive(n, "v_word: n");
    check_positive(m, "v_word: m");
    check_positive(h, "v_word: h");
    if (m > (kSaturated >> 2)) {
      throw PreconditionFailed("v_word: m too large");
    }
    std::uint64_t leaves = 1;
    for (unsigned i = 0; i < h; ++i) {
      leaves = sat_mul(leaves, 2 * n);
    }
    if (leaves > max_leaves) {
      throw LengthBudgetExceeded("v_word: block tree with " + std::to_string(leaves)
                                 + " leaves exceeds budget");
    }
    std::uint64_t const repeat = 2 * m - 1;
    // level 1 over x_1 .. x_2n, then wrap h-1 times
    std::vector<BlockWord> blocks;
    for (std::uint32_t j = 1; j <= 2 * n; ++j) {
      blocks.push_back(BlockWord::leaf(Variable{j}));
    }
    BlockWord w = BlockWord::node(std::move(blocks), repeat);
    for (unsigned level = 2; level <= h; ++level) {
      std::vector<BlockWord> copies;
      for (std::uint32_t j = 1; j <= 2 * n; ++j) {
        copies.push_back(rename_append(w, j));
      }
      w = BlockWord::node(std::move(copies), repeat);
    }
    w._shape = BlockWord::Shape{n, m, h};
    return w;
  }

  Term u_word(unsigned n, unsigned k, std::uint64_t m) {
    if (n + k == 0) {
      throw PreconditionFailed("u_word: n + k must be positive");
    }
    check_positive(m, "u_word: m");
    std::vector<Variable> prefix, period;
    for (std::uint32_t i = 1; i <= n + k; ++i) {
      prefix.push_back(Variable{i});
    }
    for (std::uint32_t i = n; i >= 1; --i) {
      period.push_back(Variable{i});
    }
    for (std::uint32_t i = n + 1; i <= n + k; ++i) {
      period.push_back(Variable{i});
    }
    auto const budget = default_budgets().word_length;
    return Term::word(prefix) * Term::word(period).pow(2 * m - 1, budget);
  }

  Term zeta_expand(unsigned n, std::uint64_t m, unsigned h, unsigned r, std::size_t budget) {
    auto const outer = v_word(n, m, h).flatten(budget);
    if (r == 0) {
      return outer;
    }
    auto const inner = v_word(n, m, r).flatten(budget);
    if (sat_mul(outer.length(), inner.length()) > budget) {
      throw LengthBudgetExceeded("zeta_expand: image exceeds the length budget");
    }
    std::vector<Letter> out;
    out.reserve(outer.length() * inner.length());
    for (auto const& letter : outer.letters()) {
      for (auto l : inner.letters()) {
        l.var.index.insert(l.var.index.end(),
                           letter.var.index.begin(),
                           letter.var.index.end());
        out.push_back(std::move(l));
      }
    }
    return Term(std::move(out));
  }

  Term w_word(unsigned n, unsigned h, std::size_t budget) {
    check_positive(n, "w_word: n");
    check_positive(h, "w_word: h");
    std::uint64_t len = 1;
    for (unsigned i = 0; i < h; ++i) {
      len = sat_mul(len, 2 * n);
    }
    if (len > budget) {
      throw LengthBudgetExceeded("w_word: length exceeds budget");
    }
    std::vector<Variable> xs;
    for (std::uint32_t i = 1; i <= n; ++i) {
      xs.push_back(Variable{i});
    }
    // w^(1) = x1..xn x1^-1..xn^-1
    std::vector<Letter> first;
    for (auto const& x : xs) {
      first.push_back({x, false});
    }
    for (auto const& x : xs) {
      first.push_back({x, true});
    }
    Term w(std::move(first));
    for (unsigned level = 2; level <= h; ++level) {
      std::vector<Term> copies;
      for (std::uint32_t j = 1; j <= n; ++j) {
        std::vector<Letter> letters = w.letters();
        for (auto& l : letters) {
          l.var.index.push_back(j);
        }
        copies.emplace_back(std::move(letters));
      }
      Term next;
      for (auto const& c : copies) {
        next = next * c;
      }
      for (auto const& c : copies) {
        next = next * c.inverse();
      }
      w = std::move(next);
    }
    return w;
  }

  std::vector<Variable> variables_of(unsigned width, unsigned depth) {
    std::vector<Variable> out;
    std::vector<std::uint32_t> idx(depth, 1);
    if (width == 0 || depth == 0) {
      return out;
    }
    while (true) {
      out.emplace_back(idx);
      std::size_t i = depth;
      while (i > 0 && idx[i - 1] == width) {
        idx[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
    }
    return out;
  }

  // Evaluation ----------------------------------------------------------------

  Element power(FiniteAlgebra const& alg, Element x, std::uint64_t k) {
    if (k == 0) {
      throw PreconditionFailed("power: exponent must be positive");
    }
    Element result = x;
    --k;
    Element base = x;
    while (k > 0) {
      if (k & 1u) {
        result = alg.mul(result, base);
      }
      k >>= 1;
      if (k > 0) {
        base = alg.mul(base, base);
      }
    }
    return result;
  }

  Element evaluate(Term const& term, Substitution const& sub, FiniteAlgebra const& alg) {
    if (term.is_unit()) {
      auto e = find_identity(alg);
      if (!e) {
        throw MissingIdentity("unit term in an algebra without identity");
      }
      return *e;
    }
    if (!term.is_word() && !alg.has_star()) {
      throw MissingStar("involution term needs a star table");
    }
    std::optional<Element> acc;
    for (auto const& l : term.letters()) {
      Element x = sub[l.var];
      if (l.inverse) {
        x = alg.star(x);
      }
      acc = acc ? alg.mul(*acc, x) : x;
    }
    return *acc;
  }

  Element evaluate(BlockWord const& word, Substitution const& sub, FiniteAlgebra const& alg) {
    if (word.is_leaf()) {
      return sub[word.variable()];
    }
    auto const&          b    = word.blocks();
    auto const           half = b.size() / 2;
    std::vector<Element> values;
    values.reserve(b.size());
    for (auto const& x : b) {
      values.push_back(evaluate(x, sub, alg));
    }
    Element prefix = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      prefix = alg.mul(prefix, values[i]);
    }
    if (word.repeat() == 0) {
      return prefix;
    }
    Element period = values[half - 1];
    for (std::size_t i = half - 1; i-- > 0;) {
      period = alg.mul(period, values[i]);
    }
    for (std::size_t i = half; i < values.size(); ++i) {
      period = alg.mul(period, values[i]);
    }
    return alg.mul(prefix, power(alg, period, word.repeat()));
  }

}  // namespace bglab
