#include "bglab/corpus.hpp"

#include <string>

#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"

namespace bglab {

  namespace {

    constexpr Element kUnset = 0xffffffffu;

    class TableSearch {
     public:
      TableSearch(unsigned n, std::function<void(Table const&)> const& visit)
          : _n(n), _t(n * n, kUnset), _visit(visit) {}

      std::size_t run() {
        fill(0);
        return _count;
      }

     private:
      Element at(Element x, Element y) const {
        return _t[x * _n + y];
      }

      // every triple whose four products are known must associate
      bool consistent() const {
        for (Element x = 0; x < _n; ++x) {
          for (Element y = 0; y < _n; ++y) {
            auto const xy = at(x, y);
            if (xy == kUnset) {
              continue;
            }
            for (Element z = 0; z < _n; ++z) {
              auto const yz = at(y, z);
              if (yz == kUnset) {
                continue;
              }
              auto const l = at(xy, z);
              auto const r = at(x, yz);
              if (l != kUnset && r != kUnset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (cell == _t.size()) {
          ++_count;
          _visit(Table(_n, _t));
          return;
        }
        for (Element v = 0; v < _n; ++v) {
          _t[cell] = v;
          if (consistent()) {
            fill(cell + 1);
          }
        }
        _t[cell] = kUnset;
      }

      unsigned                                 _n;
      std::vector<Element>                     _t;
      std::function<void(Table const&)> const& _visit;
      std::size_t                              _count = 0;
    };

  }  // namespace

  std::size_t for_each_semigroup(unsigned order, std::function<void(Table const&)> const& visit) {
    if (order == 0 || order > 5) {
      throw UnsupportedSize("semigroup enumeration supports orders 1 to 5");
    }
    return TableSearch(order, visit).run();
  }

  std::vector<FiniteAlgebra> enumerate_semigroups(unsigned order) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < order; ++i) {
      labels.push_back(std::to_string(i));
    }
    std::vector<FiniteAlgebra> out;
    for_each_semigroup(order, [&](Table const& t) {
      out.emplace_back(AlgebraKind::semigroup, labels, t);
    });
    return out;
  }

  std::vector<NamedAlgebra> construction_corpus() {
    std::vector<NamedAlgebra> out;
    auto add = [&](std::string name, FiniteAlgebra const& alg) {
      out.push_back({std::move(name), multiplicative_reduct(alg)});
    };
    auto const trivial = make_group(GroupSpec::cyclic(1));
    auto const z2      = make_group(GroupSpec::cyclic(2));
    auto const z4      = make_group(GroupSpec::cyclic(4));
    auto const s3      = make_group(GroupSpec::symmetric(3));
    auto const q8      = make_group(GroupSpec::quaternion8());
    auto const d4      = make_group(GroupSpec::dihedral(4));
    add("Z4", z4);
    add("S3", s3);
    add("Q8", q8);
    add("D4", d4);
    add("brandt(C1,2)", brandt_semigroup(trivial, 2));
    add("brandt(C1,3)", brandt_semigroup(trivial, 3));
    add("brandt(C2,2)", brandt_semigroup(z2, 2));
    add("brandt(S3,2)", brandt_semigroup(s3, 2));
    add("b21", brandt_monoid_b21());
    add("power(S3)", power_semiring(s3));
    add("power'(S3)", power_semiring(s3, true));
    add("power(Z4)", power_semiring(z4));
    add("power(Q8)", power_semiring(q8));
    add("hall(2)", hall_semiring(2));
    add("hall(3)", hall_semiring(3));
    add("kadourek(2,1)", kadourek_semigroup(2, 1).algebra);
    auto const b = subset_b(s3, mask_of({0, s3.at("(12)")}), s3.at("(13)"));
    add("subset-b(S3)", subset_b_algebra(s3, b));
    add("b21+z", adjoin_zero(multiplicative_reduct(brandt_monoid_b21()), "z"));
    add("brandt(C2,2)+1", adjoin_identity(multiplicative_reduct(brandt_semigroup(z2, 2))));
    return out;
  }

}  // namespace bglab
