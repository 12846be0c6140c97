#include "bglab/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "bglab/errors.hpp"

namespace bglab {

  GroupSpec GroupSpec::parse(std::string const& name) {
    if (name == "Q8" || name == "q8") {
      return quaternion8();
    }
    if (name.size() >= 2
        && std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
             return std::isdigit(c);
           })) {
      auto const n = static_cast<unsigned>(std::stoul(name.substr(1)));
      switch (std::toupper(static_cast<unsigned char>(name[0]))) {
        case 'C':
        case 'Z':
          return cyclic(n);
        case 'S':
          return symmetric(n);
        case 'D':
          return dihedral(n);
        default:
          break;
      }
    }
    throw UnsupportedSize("unknown group \"" + name
                          + "\" (expected Cn, Zn, Sn, Dn or Q8)");
  }

  std::string GroupSpec::name() const {
    switch (family) {
      case Family::cyclic:
        return "C" + std::to_string(n);
      case Family::symmetric:
        return "S" + std::to_string(n);
      case Family::dihedral:
        return "D" + std::to_string(n);
      case Family::quaternion8:
        return "Q8";
    }
    return {};
  }

  nlohmann::json GroupSpec::to_json() const {
    static char const* const names[]
        = {"cyclic", "symmetric", "dihedral", "quaternion8"};
    nlohmann::json j;
    j["family"] = names[static_cast<int>(family)];
    if (family != Family::quaternion8) {
      j["n"] = n;
    }
    return j;
  }

  GroupSpec GroupSpec::from_json(nlohmann::json const& j) {
    auto const family = j.at("family").get<std::string>();
    if (family == "quaternion8") {
      return quaternion8();
    }
    auto const n = j.at("n").get<unsigned>();
    if (family == "cyclic") {
      return cyclic(n);
    }
    if (family == "symmetric") {
      return symmetric(n);
    }
    if (family == "dihedral") {
      return dihedral(n);
    }
    throw UnsupportedSize("unknown group family \"" + family + "\"");
  }

  namespace {

    FiniteAlgebra finish_group(std::vector<std::string> labels,
                               Table                    mul,
                               GroupSpec const&         spec) {
      auto const n = static_cast<Element>(labels.size());
      std::vector<Element> inverse(n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (mul(x, y) == 0) {
            inverse[x] = y;
            break;
          }
        }
      }
      nlohmann::json meta;
      meta["construction"] = "group";
      meta["group"]        = spec.to_json();
      return FiniteAlgebra(AlgebraKind::involution_semigroup,
                           std::move(labels),
                           std::move(mul),
                           std::nullopt,
                           std::move(inverse),
                           std::move(meta));
    }

    std::string power_label(char const* base, unsigned i) {
      if (i == 0) {
        return "e";
      }
      if (i == 1) {
        return base;
      }
      return std::string(base) + "^" + std::to_string(i);
    }

    FiniteAlgebra cyclic_group(GroupSpec const& spec) {
      auto const               n = spec.n;
      std::vector<std::string> labels;
      Table                    mul(n);
      for (unsigned i = 0; i < n; ++i) {
        labels.push_back(power_label("a", i));
        for (unsigned j = 0; j < n; ++j) {
          mul.at(i, j) = (i + j) % n;
        }
      }
      return finish_group(std::move(labels), std::move(mul), spec);
    }

    std::string cycle_label(std::vector<unsigned> const& p) {
      std::string       out;
      std::vector<bool> seen(p.size(), false);
      for (unsigned start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == start) {
          continue;
        }
        out += '(';
        for (unsigned x = start; !seen[x]; x = p[x]) {
          seen[x] = true;
          out += std::to_string(x + 1);
        }
        out += ')';
      }
      return out.empty() ? "e" : out;
    }

    FiniteAlgebra symmetric_group(GroupSpec const& spec) {
      if (spec.n > 5) {
        throw UnsupportedSize("symmetric(n) is supported for n <= 5");
      }
      std::vector<std::vector<unsigned>> perms;
      std::vector<unsigned>              p(spec.n);
      std::iota(p.begin(), p.end(), 0u);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));

      auto const n = static_cast<Element>(perms.size());
      std::vector<std::string> labels;
      for (auto const& q : perms) {
        labels.push_back(cycle_label(q));
      }
      // product p*q acts as "p first, then q"
      Table                 mul(n);
      std::vector<unsigned> r(spec.n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          for (unsigned x = 0; x < spec.n; ++x) {
            r[x] = perms[j][perms[i][x]];
          }
          auto it = std::lower_bound(perms.begin(), perms.end(), r);
          mul.at(i, j) = static_cast<Element>(it - perms.begin());
        }
      }
      return finish_group(std::move(labels), std::move(mul), spec);
    }

    FiniteAlgebra dihedral_group(GroupSpec const& spec) {
      auto const n = spec.n;
      // element r^i s^j has index j*n + i; s r = r^-1 s
      std::vector<std::string> labels;
      for (unsigned j = 0; j < 2; ++j) {
        for (unsigned i = 0; i < n; ++i) {
          if (j == 0) {
            labels.push_back(power_label("r", i));
          } else {
            labels.push_back(i == 0 ? std::string("s")
                                    : power_label("r", i) + "s");
          }
        }
      }
      Table mul(2 * n);
      for (unsigned a = 0; a < 2 * n; ++a) {
        for (unsigned b = 0; b < 2 * n; ++b) {
          unsigned const i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
          unsigned const i  = (j1 == 0 ? i1 + i2 : i1 + n - i2) % n;
          unsigned const j  = (j1 + j2) % 2;
          mul.at(a, b)      = j * n + i;
        }
      }
      return finish_group(std::move(labels), std::move(mul), spec);
    }

    FiniteAlgebra quaternion_group(GroupSpec const& spec) {
      // units 1, i, j, k; entry = (unit, negative?) of u*v
      struct Signed {
        unsigned unit;
        bool     negative;
      };
      std::array<std::array<Signed, 4>, 4> const units{{
          {{{0, false}, {1, false}, {2, false}, {3, false}}},
          {{{1, false}, {0, true}, {3, false}, {2, true}}},
          {{{2, false}, {3, true}, {0, true}, {1, false}}},
          {{{3, false}, {2, false}, {1, true}, {0, true}}},
      }};
      std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
      Table                    mul(8);
      for (unsigned a = 0; a < 8; ++a) {
        for (unsigned b = 0; b < 8; ++b) {
          auto const s   = units[a / 2][b / 2];
          bool const neg = s.negative ^ (a % 2 == 1) ^ (b % 2 == 1);
          mul.at(a, b)   = 2 * s.unit + (neg ? 1 : 0);
        }
      }
      return finish_group(std::move(labels), std::move(mul), spec);
    }

  }  // namespace

  FiniteAlgebra make_group(GroupSpec const& spec) {
    if (spec.n == 0) {
      throw UnsupportedSize("group parameter must be positive");
    }
    switch (spec.family) {
      case GroupSpec::Family::cyclic:
        return cyclic_group(spec);
      case GroupSpec::Family::symmetric:
        return symmetric_group(spec);
      case GroupSpec::Family::dihedral:
        return dihedral_group(spec);
      case GroupSpec::Family::quaternion8:
        return quaternion_group(spec);
    }
    throw UnsupportedSize("unknown group family");
  }

  std::optional<GroupInfo> group_structure(FiniteAlgebra const& alg) {
    auto const e = find_identity(alg);
    if (!e) {
      return std::nullopt;
    }
    auto const n = static_cast<Element>(alg.size());
    GroupInfo  info{*e, std::vector<Element>(n)};
    for (Element x = 0; x < n; ++x) {
      bool found = false;
      for (Element y = 0; y < n && !found; ++y) {
        if (alg.mul(x, y) == *e && alg.mul(y, x) == *e) {
          info.inverse[x] = y;
          found           = true;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    // associativity is assumed to have been validated by the caller
    return info;
  }

  GroupInfo require_group(FiniteAlgebra const& alg) {
    auto info = group_structure(alg);
    if (!info) {
      throw NotAGroup("algebra is not a group");
    }
    return std::move(*info);
  }

  ElementSet subgroup_closure(FiniteAlgebra const& group,
                              GroupInfo const&     info,
                              ElementSet const&    generators) {
    std::vector<bool>    in(group.size(), false);
    std::vector<Element> members{info.identity};
    in[info.identity] = true;
    for (auto g : generators) {
      if (!in[g]) {
        in[g] = true;
        members.push_back(g);
      }
    }
    // right-multiply by generators until stable (finite group: a
    // multiplicatively closed subset containing e is a subgroup)
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : generators) {
        auto const y = group.mul(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    return normalized(std::move(members));
  }

  bool is_subgroup(FiniteAlgebra const& group,
                   GroupInfo const&     info,
                   ElementSet const&    set) {
    if (set.empty()) {
      return false;
    }
    auto const in = to_mask(group.size(), set);
    if (!in[info.identity]) {
      return false;
    }
    for (auto x : set) {
      if (!in[info.inverse[x]]) {
        return false;
      }
      for (auto y : set) {
        if (!in[group.mul(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::uint64_t element_order(FiniteAlgebra const& group,
                              GroupInfo const&     info,
                              Element              x) {
    std::uint64_t k = 1;
    for (Element y = x; y != info.identity; y = group.mul(y, x)) {
      ++k;
    }
    return k;
  }

  FiniteAlgebra extract_group(FiniteAlgebra const& alg,
                              ElementSet const&    elements) {
    auto sub  = induced_subalgebra(alg, elements, Signature{});
    auto info = require_group(sub);
    std::vector<Element> order{info.identity};
    for (Element x = 0; x < sub.size(); ++x) {
      if (x != info.identity) {
        order.push_back(x);
      }
    }
    auto reordered = induced_subalgebra(sub, order, Signature{});
    auto inv       = require_group(reordered).inverse;
    return FiniteAlgebra(AlgebraKind::involution_semigroup,
                         reordered.labels(),
                         reordered.mul_table(),
                         std::nullopt,
                         std::move(inv),
                         reordered.meta());
  }

}  // namespace bglab
