#include <algorithm>
#include <map>

#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"

namespace bglab {

  void PartialInjection::set(unsigned x, unsigned y) {
    if (x >= points() || y >= points()) {
      throw PreconditionFailed("partial injection: point out of range");
    }
    for (unsigned z = 0; z < points(); ++z) {
      if (z != x && _image[z] == static_cast<std::int32_t>(y)) {
        throw Error("partial injection: " + std::to_string(y)
                    + " already has a preimage");
      }
    }
    _image[x] = static_cast<std::int32_t>(y);
  }

  PartialInjection PartialInjection::then(PartialInjection const& that) const {
    PartialInjection out(points());
    for (std::size_t x = 0; x < points(); ++x) {
      if (_image[x] >= 0) {
        out._image[x] = that._image.at(static_cast<std::size_t>(_image[x]));
      }
    }
    return out;
  }

  PartialInjection PartialInjection::inverse() const {
    PartialInjection out(points());
    for (std::size_t x = 0; x < points(); ++x) {
      if (_image[x] >= 0) {
        out._image[static_cast<std::size_t>(_image[x])] = static_cast<std::int32_t>(x);
      }
    }
    return out;
  }

  bool PartialInjection::empty() const {
    return std::all_of(_image.begin(), _image.end(), [](std::int32_t y) {
      return y < 0;
    });
  }

  std::string PartialInjection::label() const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t x = 0; x < points(); ++x) {
      if (_image[x] < 0) {
        continue;
      }
      if (!first) {
        out += ',';
      }
      out += std::to_string(x) + "->" + std::to_string(_image[x]);
      first = false;
    }
    return out + "}";
  }

  KadourekSemigroup kadourek_semigroup(unsigned n, unsigned h, Budgets const& budgets) {
    if (n < 2 || h < 1) {
      throw PreconditionFailed("kadourek_semigroup: needs n >= 2 and h >= 1");
    }
    auto const w = w_word(n, h, budgets.word_length);

    KadourekSemigroup out{FiniteAlgebra(AlgebraKind::semigroup, {"_"}, Table(1)),
                          variables_of(n, h),
                          {},
                          {},
                          w.length() + 1};
    std::map<Variable, std::size_t> slot;
    for (std::size_t i = 0; i < out.variables.size(); ++i) {
      slot[out.variables[i]] = i;
      out.maps.emplace_back(out.points);
    }
    // letter p (1-based) joins p-1 and p
    for (unsigned p = 1; p <= w.length(); ++p) {
      auto const& l = w.letters()[p - 1];
      auto&       m = out.maps[slot.at(l.var)];
      if (l.inverse) {
        m.set(p, p - 1);
      } else {
        m.set(p - 1, p);
      }
    }

    std::vector<PartialInjection> gens = out.maps;
    for (auto const& m : out.maps) {
      gens.push_back(m.inverse());
    }
    // the empty map first, then breadth-first products of generators
    std::vector<PartialInjection>               elements{PartialInjection(out.points)};
    std::map<PartialInjection, Element>         index{{elements[0], 0}};
    auto add = [&](PartialInjection const& m) {
      auto [it, fresh] = index.emplace(m, static_cast<Element>(elements.size()));
      if (fresh) {
        elements.push_back(m);
        if (elements.size() > budgets.max_carrier) {
          throw ClosureBudgetExceeded("kadourek_semigroup: closure exceeds "
                                      + std::to_string(budgets.max_carrier)
                                      + " elements");
        }
      }
      return it->second;
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(elements[i].then(g));
      }
    }

    auto const               size = elements.size();
    std::vector<std::string> labels;
    Table                    mul(size);
    std::vector<Element>     star(size);
    for (Element x = 0; x < size; ++x) {
      labels.push_back(elements[x].label());
      star[x] = index.at(elements[x].inverse());
      for (Element y = 0; y < size; ++y) {
        mul.at(x, y) = index.at(elements[x].then(elements[y]));
      }
    }
    for (auto const& m : out.maps) {
      out.generators.push_back(index.at(m));
    }
    nlohmann::json meta;
    meta["construction"] = "kadourek";
    meta["n"]            = n;
    meta["h"]            = h;
    out.algebra          = FiniteAlgebra(AlgebraKind::involution_semigroup,
                                std::move(labels),
                                std::move(mul),
                                std::nullopt,
                                std::move(star),
                                std::move(meta));
    return out;
  }

}  // namespace bglab
