#include "bglab/validate.hpp"

#include <array>
#include <functional>
#include <utility>

#include "bglab/errors.hpp"

namespace bglab {

  namespace {

    // A law is a pair of evaluators over an argument tuple of fixed arity.
    struct Law {
      char const* name;
      unsigned    arity;
      std::function<std::pair<Element, Element>(FiniteAlgebra const&,
                                                Element const*)>
          sides;
    };

    Law const kLaws[] = {
        {"mul-assoc", 3,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.mul(s.mul(v[0], v[1]), v[2]),
                            s.mul(v[0], s.mul(v[1], v[2]))};
         }},
        {"add-assoc", 3,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.add(s.add(v[0], v[1]), v[2]),
                            s.add(v[0], s.add(v[1], v[2]))};
         }},
        {"add-comm", 2,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.add(v[0], v[1]), s.add(v[1], v[0])};
         }},
        {"add-idem", 1,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.add(v[0], v[0]), v[0]};
         }},
        {"left-distrib", 3,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.mul(v[0], s.add(v[1], v[2])),
                            s.add(s.mul(v[0], v[1]), s.mul(v[0], v[2]))};
         }},
        {"right-distrib", 3,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.mul(s.add(v[1], v[2]), v[0]),
                            s.add(s.mul(v[1], v[0]), s.mul(v[2], v[0]))};
         }},
        {"star-anti", 2,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.star(s.mul(v[0], v[1])),
                            s.mul(s.star(v[1]), s.star(v[0]))};
         }},
        {"star-invol", 1,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.star(s.star(v[0])), v[0]};
         }},
        {"star-add", 2,
         [](FiniteAlgebra const& s, Element const* v) {
           return std::pair{s.star(s.add(v[0], v[1])),
                            s.add(s.star(v[0]), s.star(v[1]))};
         }},
    };

    Law const& law_named(std::string_view name) {
      for (auto const& law : kLaws) {
        if (name == law.name) {
          return law;
        }
      }
      throw Error("unknown law \"" + std::string(name) + "\"");
    }

    // Scans all tuples of the law's arity in lexicographic order.
    std::optional<AxiomViolation> scan(FiniteAlgebra const& alg,
                                       char const*          name) {
      auto const&             law = law_named(name);
      auto const              n   = static_cast<Element>(alg.size());
      std::array<Element, 3>  v{};
      auto fail = [&]() -> std::optional<AxiomViolation> {
        auto [lhs, rhs] = law.sides(alg, v.data());
        if (lhs != rhs) {
          return AxiomViolation{name, {v.begin(), v.begin() + law.arity}};
        }
        return std::nullopt;
      };
      if (law.arity == 1) {
        for (v[0] = 0; v[0] < n; ++v[0]) {
          if (auto r = fail()) {
            return r;
          }
        }
      } else if (law.arity == 2) {
        for (v[0] = 0; v[0] < n; ++v[0]) {
          for (v[1] = 0; v[1] < n; ++v[1]) {
            if (auto r = fail()) {
              return r;
            }
          }
        }
      } else {
        for (v[0] = 0; v[0] < n; ++v[0]) {
          for (v[1] = 0; v[1] < n; ++v[1]) {
            for (v[2] = 0; v[2] < n; ++v[2]) {
              if (auto r = fail()) {
                return r;
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    // Associativity dominates the cost, so it gets a dedicated row-based loop.
    std::optional<AxiomViolation> scan_assoc(Table const& t, char const* name) {
      auto const n = static_cast<Element>(t.size());
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          auto const xy     = t(x, y);
          auto const xy_row = t.row(xy);
          auto const y_row  = t.row(y);
          auto const x_row  = t.row(x);
          for (Element z = 0; z < n; ++z) {
            if (xy_row[z] != x_row[y_row[z]]) {
              return AxiomViolation{name, {x, y, z}};
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<AxiomViolation> validate_semigroup(FiniteAlgebra const& alg) {
    return scan_assoc(alg.mul_table(), "mul-assoc");
  }

  std::optional<AxiomViolation> validate_ai_semiring(FiniteAlgebra const& alg) {
    if (!alg.has_add()) {
      throw MissingTable("validate_ai_semiring: no addition table");
    }
    if (auto v = validate_semigroup(alg)) {
      return v;
    }
    if (auto v = scan_assoc(*alg.add_table(), "add-assoc")) {
      return v;
    }
    for (auto name : {"add-comm", "add-idem", "left-distrib", "right-distrib"}) {
      if (auto v = scan(alg, name)) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::optional<AxiomViolation> validate_involution(FiniteAlgebra const& alg) {
    if (!alg.has_star()) {
      throw MissingTable("validate_involution: no star table");
    }
    for (auto name : {"star-anti", "star-invol"}) {
      if (auto v = scan(alg, name)) {
        return v;
      }
    }
    if (alg.has_add()) {
      return scan(alg, "star-add");
    }
    return std::nullopt;
  }

  std::optional<AxiomViolation> validate(FiniteAlgebra const& alg) {
    std::optional<AxiomViolation> v = alg.has_add() ? validate_ai_semiring(alg)
                                                    : validate_semigroup(alg);
    if (!v && alg.has_star()) {
      v = validate_involution(alg);
    }
    return v;
  }

  bool replays(FiniteAlgebra const& alg, AxiomViolation const& violation) {
    auto const& law = law_named(violation.law);
    if (violation.witness.size() != law.arity) {
      return false;
    }
    for (auto x : violation.witness) {
      if (x >= alg.size()) {
        return false;
      }
    }
    auto [lhs, rhs] = law.sides(alg, violation.witness.data());
    return lhs != rhs;
  }

  std::string describe(FiniteAlgebra const& alg, AxiomViolation const& v) {
    std::string out = v.law + " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      out += (i > 0 ? "," : "") + alg.label(v.witness[i]);
    }
    return out + ")";
  }

}  // namespace bglab
