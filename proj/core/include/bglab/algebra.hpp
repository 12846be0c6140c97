#ifndef BGLAB_ALGEBRA_HPP_
#define BGLAB_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace bglab {

  //! Elements of a finite algebra are dense indices 0, ..., size - 1.
  using Element = std::uint32_t;

  //! A sorted, duplicate-free list of elements.
  using ElementSet = std::vector<Element>;

  enum class AlgebraKind {
    semigroup,
    ai_semiring,
    involution_semigroup,
    involution_ai_semiring
  };

  std::string_view      to_string(AlgebraKind kind) noexcept;
  AlgebraKind           kind_from_string(std::string_view name);
  bool                  kind_has_add(AlgebraKind kind) noexcept;
  bool                  kind_has_star(AlgebraKind kind) noexcept;
  AlgebraKind           kind_for(bool has_add, bool has_star) noexcept;

  //! Square operation table, row-major: entry (a, b) is a op b.
  class Table {
   public:
    Table() = default;
    explicit Table(std::size_t n) : _n(n), _data(n * n, 0) {}
    Table(std::size_t n, std::vector<Element> data);

    std::size_t size() const noexcept {
      return _n;
    }

    Element operator()(Element a, Element b) const noexcept {
      return _data[static_cast<std::size_t>(a) * _n + b];
    }

    Element& at(Element a, Element b) noexcept {
      return _data[static_cast<std::size_t>(a) * _n + b];
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_data.data() + static_cast<std::size_t>(a) * _n, _n};
    }

    std::vector<Element> const& data() const noexcept {
      return _data;
    }

    bool operator==(Table const&) const = default;

   private:
    std::size_t          _n = 0;
    std::vector<Element> _data;
  };

  //! Which operations a closure, morphism or subalgebra should respect.
  struct Signature {
    bool mul  = true;
    bool add  = false;
    bool star = false;
  };

  //! Table-based finite algebra. Immutable after construction; the
  //! constructor enforces every structural invariant (indices in range,
  //! distinct labels, kind matching the tables present).
  class FiniteAlgebra {
   public:
    FiniteAlgebra(AlgebraKind                         kind,
                  std::vector<std::string>            labels,
                  Table                               mul,
                  std::optional<Table>                add  = std::nullopt,
                  std::optional<std::vector<Element>> star = std::nullopt,
                  nlohmann::json                      meta = nlohmann::json::object());

    std::size_t size() const noexcept {
      return _labels.size();
    }
    AlgebraKind kind() const noexcept {
      return _kind;
    }

    Element mul(Element a, Element b) const noexcept {
      return _mul(a, b);
    }
    Element add(Element a, Element b) const noexcept {
      return (*_add)(a, b);
    }
    Element star(Element a) const noexcept {
      return (*_star)[a];
    }

    bool has_add() const noexcept {
      return _add.has_value();
    }
    bool has_star() const noexcept {
      return _star.has_value();
    }

    Table const& mul_table() const noexcept {
      return _mul;
    }
    std::optional<Table> const& add_table() const noexcept {
      return _add;
    }
    std::optional<std::vector<Element>> const& star_table() const noexcept {
      return _star;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Element a) const {
      return _labels.at(a);
    }
    std::optional<Element> find(std::string_view label) const;
    Element                at(std::string_view label) const;

    nlohmann::json const& meta() const noexcept {
      return _meta;
    }

    //! Signature of every operation present.
    Signature signature() const noexcept {
      return {true, has_add(), has_star()};
    }

    bool operator==(FiniteAlgebra const& that) const;

   private:
    AlgebraKind                          _kind;
    std::vector<std::string>             _labels;
    Table                                _mul;
    std::optional<Table>                 _add;
    std::optional<std::vector<Element>>  _star;
    nlohmann::json                       _meta;
    std::unordered_map<std::string, Element> _index;
  };

  //! Carrier budgets shared by the constructors.
  struct Budgets {
    //! Largest carrier for which dense tables are built.
    std::size_t max_carrier = 8192;
    //! Largest group for the power constructions (2^bits subsets).
    unsigned power_bits = 16;
    //! Largest flat word materialised by the term module.
    std::size_t word_length = 1'000'000;
    //! Evaluation budget of the exhaustive checker.
    std::uint64_t evaluations = 100'000'000;
  };

  //! Defaults, with BGLAB_BUDGET overriding `evaluations` when set.
  Budgets const& default_budgets();

  // Structural helpers ------------------------------------------------------

  std::optional<Element> find_identity(FiniteAlgebra const& alg);
  std::optional<Element> find_zero(FiniteAlgebra const& alg);

  //! The same carrier with only the multiplication kept.
  FiniteAlgebra multiplicative_reduct(FiniteAlgebra const& alg);

  //! The algebra restricted to `elements` (in the given order) and to the
  //! operations of `ops`. Throws InvalidAlgebra if the set is not closed.
  FiniteAlgebra induced_subalgebra(FiniteAlgebra const&        alg,
                                   std::vector<Element> const& elements,
                                   Signature                   ops);

  //! First pair (x, y), in lexicographic order over x in `set`, then y in
  //! the carrier, such that x*y or y*x leaves `set`. The pair is reported as
  //! the factors in product order.
  std::optional<std::pair<Element, Element>>
  ideal_violation(FiniteAlgebra const& alg, ElementSet const& set);

  bool is_ideal(FiniteAlgebra const& alg, ElementSet const& set);

  //! Membership mask of a set.
  std::vector<bool> to_mask(std::size_t size, ElementSet const& set);
  ElementSet        normalized(std::vector<Element> elements);

  //! "{a,b,c}" using the algebra labels.
  std::string format_set(FiniteAlgebra const& alg, ElementSet const& set);

}  // namespace bglab

#endif  // BGLAB_ALGEBRA_HPP_
