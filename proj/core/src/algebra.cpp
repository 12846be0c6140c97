#include "bglab/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bglab/errors.hpp"

namespace bglab {

  std::string_view to_string(AlgebraKind kind) noexcept {
    switch (kind) {
      case AlgebraKind::semigroup:
        return "semigroup";
      case AlgebraKind::ai_semiring:
        return "ai-semiring";
      case AlgebraKind::involution_semigroup:
        return "involution-semigroup";
      case AlgebraKind::involution_ai_semiring:
        return "involution-ai-semiring";
    }
    return "semigroup";
  }

  AlgebraKind kind_from_string(std::string_view name) {
    for (auto k : {AlgebraKind::semigroup,
                   AlgebraKind::ai_semiring,
                   AlgebraKind::involution_semigroup,
                   AlgebraKind::involution_ai_semiring}) {
      if (to_string(k) == name) {
        return k;
      }
    }
    throw InvalidAlgebra("unknown algebra kind \"" + std::string(name) + "\"");
  }

  bool kind_has_add(AlgebraKind kind) noexcept {
    return kind == AlgebraKind::ai_semiring
           || kind == AlgebraKind::involution_ai_semiring;
  }

  bool kind_has_star(AlgebraKind kind) noexcept {
    return kind == AlgebraKind::involution_semigroup
           || kind == AlgebraKind::involution_ai_semiring;
  }

  AlgebraKind kind_for(bool has_add, bool has_star) noexcept {
    if (has_add) {
      return has_star ? AlgebraKind::involution_ai_semiring
                      : AlgebraKind::ai_semiring;
    }
    return has_star ? AlgebraKind::involution_semigroup : AlgebraKind::semigroup;
  }

  Table::Table(std::size_t n, std::vector<Element> data)
      : _n(n), _data(std::move(data)) {
    if (_data.size() != n * n) {
      throw InvalidAlgebra("table has " + std::to_string(_data.size())
                           + " entries, expected " + std::to_string(n * n));
    }
  }

  namespace {
    void check_table(Table const& t, std::size_t n, char const* name) {
      if (t.size() != n) {
        throw InvalidAlgebra(std::string(name) + " table has wrong dimension");
      }
      for (auto x : t.data()) {
        if (x >= n) {
          throw InvalidAlgebra(std::string(name) + " table entry "
                               + std::to_string(x) + " out of range");
        }
      }
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(AlgebraKind                         kind,
                               std::vector<std::string>            labels,
                               Table                               mul,
                               std::optional<Table>                add,
                               std::optional<std::vector<Element>> star,
                               nlohmann::json                      meta)
      : _kind(kind),
        _labels(std::move(labels)),
        _mul(std::move(mul)),
        _add(std::move(add)),
        _star(std::move(star)),
        _meta(std::move(meta)) {
    std::size_t const n = _labels.size();
    if (n == 0) {
      throw InvalidAlgebra("carrier must be non-empty");
    }
    check_table(_mul, n, "mul");
    if (_add) {
      check_table(*_add, n, "add");
    }
    if (_star) {
      if (_star->size() != n) {
        throw InvalidAlgebra("star table has wrong length");
      }
      for (auto x : *_star) {
        if (x >= n) {
          throw InvalidAlgebra("star table entry out of range");
        }
      }
    }
    if (kind_has_add(_kind) != _add.has_value()
        || kind_has_star(_kind) != _star.has_value()) {
      throw InvalidAlgebra("kind \"" + std::string(to_string(_kind))
                           + "\" does not match the tables present");
    }
    _index.reserve(n);
    for (Element i = 0; i < n; ++i) {
      if (!_index.emplace(_labels[i], i).second) {
        throw InvalidAlgebra("duplicate label \"" + _labels[i] + "\"");
      }
    }
    if (_meta.is_null()) {
      _meta = nlohmann::json::object();
    }
  }

  std::optional<Element> FiniteAlgebra::find(std::string_view label) const {
    auto it = _index.find(std::string(label));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Element FiniteAlgebra::at(std::string_view label) const {
    auto x = find(label);
    if (!x) {
      throw InvalidAlgebra("no element labelled \"" + std::string(label) + "\"");
    }
    return *x;
  }

  bool FiniteAlgebra::operator==(FiniteAlgebra const& that) const {
    return _kind == that._kind && _labels == that._labels && _mul == that._mul
           && _add == that._add && _star == that._star && _meta == that._meta;
  }

  Budgets const& default_budgets() {
    static Budgets const budgets = [] {
      Budgets b;
      if (char const* env = std::getenv("BGLAB_BUDGET")) {
        char* end = nullptr;
        auto  v   = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
          b.evaluations = v;
        }
      }
      return b;
    }();
    return budgets;
  }

  std::optional<Element> find_identity(FiniteAlgebra const& alg) {
    auto const n = static_cast<Element>(alg.size());
    for (Element e = 0; e < n; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = alg.mul(e, x) == x && alg.mul(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> find_zero(FiniteAlgebra const& alg) {
    auto const n = static_cast<Element>(alg.size());
    for (Element z = 0; z < n; ++z) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = alg.mul(z, x) == z && alg.mul(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  FiniteAlgebra multiplicative_reduct(FiniteAlgebra const& alg) {
    return FiniteAlgebra(AlgebraKind::semigroup,
                         alg.labels(),
                         alg.mul_table(),
                         std::nullopt,
                         std::nullopt,
                         alg.meta());
  }

  FiniteAlgebra induced_subalgebra(FiniteAlgebra const&        alg,
                                   std::vector<Element> const& elements,
                                   Signature                   ops) {
    if (elements.empty()) {
      throw InvalidAlgebra("induced subalgebra of the empty set");
    }
    if ((ops.add && !alg.has_add()) || (ops.star && !alg.has_star())) {
      throw MissingTable("induced subalgebra requests a missing operation");
    }
    std::vector<std::int64_t> pos(alg.size(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] >= alg.size() || pos[elements[i]] != -1) {
        throw InvalidAlgebra("induced subalgebra: bad element list");
      }
      pos[elements[i]] = static_cast<std::int64_t>(i);
    }
    auto const n      = elements.size();
    auto       lookup = [&](Element x) -> Element {
      if (pos[x] < 0) {
        throw InvalidAlgebra("set is not closed: " + alg.label(x)
                             + " lies outside");
      }
      return static_cast<Element>(pos[x]);
    };
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto x : elements) {
      labels.push_back(alg.label(x));
    }
    Table mul(n);
    std::optional<Table> add;
    if (ops.add) {
      add.emplace(n);
    }
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        mul.at(i, j) = lookup(alg.mul(elements[i], elements[j]));
        if (add) {
          add->at(i, j) = lookup(alg.add(elements[i], elements[j]));
        }
      }
    }
    std::optional<std::vector<Element>> star;
    if (ops.star) {
      star.emplace(n);
      for (Element i = 0; i < n; ++i) {
        (*star)[i] = lookup(alg.star(elements[i]));
      }
    }
    auto meta = nlohmann::json::object();
    meta["construction"] = "induced-subalgebra";
    meta["base"]         = alg.meta();
    auto& names          = meta["elements"] = nlohmann::json::array();
    for (auto x : elements) {
      names.push_back(alg.label(x));
    }
    meta["add"]  = ops.add;
    meta["star"] = ops.star;
    return FiniteAlgebra(kind_for(ops.add, ops.star),
                         std::move(labels),
                         std::move(mul),
                         std::move(add),
                         std::move(star),
                         std::move(meta));
  }

  std::optional<std::pair<Element, Element>>
  ideal_violation(FiniteAlgebra const& alg, ElementSet const& set) {
    auto const in = to_mask(alg.size(), set);
    auto const n  = static_cast<Element>(alg.size());
    for (auto x : set) {
      for (Element y = 0; y < n; ++y) {
        if (!in[alg.mul(x, y)]) {
          return std::pair{x, y};
        }
        if (!in[alg.mul(y, x)]) {
          return std::pair{y, x};
        }
      }
    }
    return std::nullopt;
  }

  bool is_ideal(FiniteAlgebra const& alg, ElementSet const& set) {
    return !set.empty() && !ideal_violation(alg, set).has_value();
  }

  std::vector<bool> to_mask(std::size_t size, ElementSet const& set) {
    std::vector<bool> mask(size, false);
    for (auto x : set) {
      mask.at(x) = true;
    }
    return mask;
  }

  ElementSet normalized(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    return elements;
  }

  std::string format_set(FiniteAlgebra const& alg, ElementSet const& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += alg.label(set[i]);
    }
    out += '}';
    return out;
  }

}  // namespace bglab
