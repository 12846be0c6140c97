#include "bglab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bglab/errors.hpp"

namespace bglab {

  // Brandt semigroups -----------------------------------------------------------

  BrandtElement brandt_coordinates(std::size_t group_order,
                                   unsigned    index_count,
                                   Element     x) {
    if (x == 0) {
      return {};
    }
    std::size_t t = x - 1;
    BrandtElement b;
    b.zero  = false;
    b.right = static_cast<unsigned>(t % index_count);
    t /= index_count;
    b.group = static_cast<Element>(t % group_order);
    b.left  = static_cast<unsigned>(t / group_order);
    return b;
  }

  Element brandt_index(std::size_t          group_order,
                       unsigned             index_count,
                       BrandtElement const& b) {
    if (b.zero) {
      return 0;
    }
    return static_cast<Element>(
        1 + (b.left * group_order + b.group) * index_count + b.right);
  }

  FiniteAlgebra brandt_semigroup(FiniteAlgebra const& group, unsigned index_count) {
    if (index_count == 0) {
      throw PreconditionFailed("brandt_semigroup: index set must be non-empty");
    }
    auto const        info = require_group(group);
    std::size_t const g    = group.size();
    std::size_t const size = index_count * index_count * g + 1;
    if (size > default_budgets().max_carrier) {
      throw CarrierTooLarge("brandt_semigroup: carrier of size " + std::to_string(size));
    }
    std::vector<std::string> labels(size);
    std::vector<Element>     star(size, 0);
    Table                    mul(size);
    labels[0] = "0";
    for (Element x = 1; x < size; ++x) {
      auto const b = brandt_coordinates(g, index_count, x);
      labels[x]    = "(" + std::to_string(b.left + 1) + "," + group.label(b.group)
                  + "," + std::to_string(b.right + 1) + ")";
      star[x] = brandt_index(
          g, index_count, {false, b.right, info.inverse[b.group], b.left});
    }
    for (Element x = 1; x < size; ++x) {
      auto const p = brandt_coordinates(g, index_count, x);
      for (Element y = 1; y < size; ++y) {
        auto const q = brandt_coordinates(g, index_count, y);
        if (p.right == q.left) {
          mul.at(x, y) = brandt_index(
              g, index_count, {false, p.left, group.mul(p.group, q.group), q.right});
        }
      }
    }
    nlohmann::json meta;
    meta["construction"] = "brandt";
    meta["group"]        = group.meta();
    meta["index_count"]  = index_count;
    return FiniteAlgebra(AlgebraKind::involution_semigroup,
                         std::move(labels),
                         std::move(mul),
                         std::nullopt,
                         std::move(star),
                         std::move(meta));
  }

  FiniteAlgebra brandt_monoid_b21() {
    // 2x2 Boolean matrices as 4-bit patterns: bit 2i+j is entry (i, j)
    std::vector<std::string> const labels{"0", "1", "a", "b", "e", "f"};
    std::vector<BoolMatrix>        mats;
    for (auto rows : std::vector<std::vector<std::vector<int>>>{
             {{0, 0}, {0, 0}},
             {{1, 0}, {0, 1}},
             {{0, 1}, {0, 0}},
             {{0, 0}, {1, 0}},
             {{1, 0}, {0, 0}},
             {{0, 0}, {0, 1}}}) {
      mats.push_back(BoolMatrix::from_rows(rows));
    }
    auto index_of = [&](BoolMatrix const& m) {
      auto it = std::find(mats.begin(), mats.end(), m);
      if (it == mats.end()) {
        throw Error("B21: operation leaves the carrier");
      }
      return static_cast<Element>(it - mats.begin());
    };
    Table                mul(6), add(6);
    std::vector<Element> star(6);
    for (Element x = 0; x < 6; ++x) {
      star[x] = index_of(mats[x].transposed());
      for (Element y = 0; y < 6; ++y) {
        mul.at(x, y) = index_of(mats[x] * mats[y]);
        add.at(x, y) = index_of(mats[x] & mats[y]);
      }
    }
    nlohmann::json meta;
    meta["construction"] = "b21";
    return FiniteAlgebra(AlgebraKind::involution_ai_semiring,
                         labels,
                         std::move(mul),
                         std::move(add),
                         std::move(star),
                         std::move(meta));
  }

  // Power constructions -----------------------------------------------------

  SubsetMask mask_of(ElementSet const& group_elements) {
    SubsetMask m = 0;
    for (auto x : group_elements) {
      if (x >= 64) {
        throw UnsupportedSize("subset masks hold at most 64 group elements");
      }
      m |= SubsetMask(1) << x;
    }
    return m;
  }

  ElementSet members_of(SubsetMask mask) {
    ElementSet out;
    while (mask != 0) {
      out.push_back(static_cast<Element>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
    return out;
  }

  std::string subset_label(FiniteAlgebra const& group, SubsetMask mask) {
    std::string out = "{";
    bool        first = true;
    for (auto x : members_of(mask)) {
      if (!first) {
        out += ',';
      }
      out += group.label(x);
      first = false;
    }
    return out + "}";
  }

  SubsetMask subset_product(FiniteAlgebra const& group, SubsetMask a, SubsetMask b) {
    SubsetMask out = 0;
    for (auto x : members_of(a)) {
      for (auto y : members_of(b)) {
        out |= SubsetMask(1) << group.mul(x, y);
      }
    }
    return out;
  }

  namespace {
    bool power_nonempty(FiniteAlgebra const& power) {
      auto const& meta = power.meta();
      return meta.is_object() && meta.value("nonempty_only", false);
    }
  }  // namespace

  SubsetMask subset_mask(FiniteAlgebra const& power, Element x) {
    return power_nonempty(power) ? SubsetMask(x) + 1 : SubsetMask(x);
  }

  Element subset_element(FiniteAlgebra const& power, SubsetMask mask) {
    if (power_nonempty(power)) {
      if (mask == 0) {
        throw PreconditionFailed("the empty subset is not in P'(G)");
      }
      return static_cast<Element>(mask - 1);
    }
    return static_cast<Element>(mask);
  }

  FiniteAlgebra power_algebra(FiniteAlgebra const& group,
                              PowerOptions         options,
                              Budgets const&       budgets) {
    auto const        info = require_group(group);
    std::size_t const g    = group.size();
    if (g > budgets.power_bits || g >= 63) {
      throw CarrierTooLarge("power construction: |G| = " + std::to_string(g)
                            + " exceeds the bit budget "
                            + std::to_string(budgets.power_bits));
    }
    SubsetMask const  full   = (SubsetMask(1) << g) - 1;
    SubsetMask const  offset = options.nonempty_only ? 1 : 0;
    std::size_t const size   = static_cast<std::size_t>(full + 1 - offset);
    if (size > budgets.max_carrier) {
      throw CarrierTooLarge("power construction: carrier of size "
                            + std::to_string(size) + " exceeds max_carrier "
                            + std::to_string(budgets.max_carrier));
    }
    auto to_index = [&](SubsetMask m) {
      return static_cast<Element>(m - offset);
    };

    // left[x][B] = xB, filled by peeling the lowest bit of B
    std::vector<std::vector<SubsetMask>> left(g, std::vector<SubsetMask>(full + 1, 0));
    for (Element x = 0; x < g; ++x) {
      for (SubsetMask b = 1; b <= full; ++b) {
        auto const low = static_cast<Element>(std::countr_zero(b));
        left[x][b]     = left[x][b & (b - 1)] | (SubsetMask(1) << group.mul(x, low));
      }
    }

    std::vector<std::string> labels(size);
    Table                    mul(size);
    for (SubsetMask a = offset; a <= full; ++a) {
      labels[to_index(a)] = subset_label(group, a);
      if (a == 0) {
        continue;  // the empty row is all-empty, index 0
      }
      // aB = (low)B u (rest)B, the second row being filled already
      auto const       low  = static_cast<Element>(std::countr_zero(a));
      SubsetMask const rest = a & (a - 1);
      for (SubsetMask b = offset; b <= full; ++b) {
        SubsetMask prod = left[low][b];
        if (rest != 0) {
          prod |= SubsetMask(mul(to_index(rest), to_index(b))) + offset;
        }
        mul.at(to_index(a), to_index(b)) = to_index(prod);
      }
    }

    std::optional<Table> add;
    if (options.with_union) {
      add.emplace(size);
      for (SubsetMask a = offset; a <= full; ++a) {
        for (SubsetMask b = offset; b <= full; ++b) {
          add->at(to_index(a), to_index(b)) = to_index(a | b);
        }
      }
    }
    std::optional<std::vector<Element>> star;
    if (options.with_inverse) {
      star.emplace(size);
      for (SubsetMask a = offset; a <= full; ++a) {
        SubsetMask inv = 0;
        for (auto x : members_of(a)) {
          inv |= SubsetMask(1) << info.inverse[x];
        }
        (*star)[to_index(a)] = to_index(inv);
      }
    }
    nlohmann::json meta;
    meta["construction"]  = "power";
    meta["group"]         = group.meta();
    meta["nonempty_only"] = options.nonempty_only;
    meta["with_union"]    = options.with_union;
    meta["with_inverse"]  = options.with_inverse;
    auto const kind = kind_for(add.has_value(), star.has_value());
    return FiniteAlgebra(kind,
                         std::move(labels),
                         std::move(mul),
                         std::move(add),
                         std::move(star),
                         std::move(meta));
  }

  FiniteAlgebra power_semiring(FiniteAlgebra const& group,
                               bool                 nonempty_only,
                               Budgets const&       budgets) {
    return power_algebra(group, {nonempty_only, true, false}, budgets);
  }

  FiniteAlgebra involution_power(FiniteAlgebra const& group, Budgets const& budgets) {
    return power_algebra(group, {false, false, true}, budgets);
  }

  // Hall relations ----------------------------------------------------------

  BoolMatrix BoolMatrix::operator*(BoolMatrix const& that) const noexcept {
    BoolMatrix out{n, 0};
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned k = 0; k < n; ++k) {
        if (!get(i, k)) {
          continue;
        }
        for (unsigned j = 0; j < n; ++j) {
          if (that.get(k, j)) {
            out.set(i, j);
          }
        }
      }
    }
    return out;
  }

  BoolMatrix BoolMatrix::operator|(BoolMatrix const& that) const noexcept {
    return {n, bits | that.bits};
  }

  BoolMatrix BoolMatrix::operator&(BoolMatrix const& that) const noexcept {
    return {n, bits & that.bits};
  }

  BoolMatrix BoolMatrix::transposed() const noexcept {
    BoolMatrix out{n, 0};
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        out.set(j, i, get(i, j));
      }
    }
    return out;
  }

  namespace {
    bool permanent_search(BoolMatrix const& m, unsigned row, std::uint32_t used) {
      if (row == m.n) {
        return true;
      }
      for (unsigned j = 0; j < m.n; ++j) {
        if (!(used >> j & 1u) && m.get(row, j)
            && permanent_search(m, row + 1, used | (1u << j))) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool BoolMatrix::has_positive_permanent() const {
    return permanent_search(*this, 0, 0);
  }

  std::string BoolMatrix::label() const {
    std::string out = "[";
    for (unsigned i = 0; i < n; ++i) {
      if (i > 0) {
        out += ',';
      }
      for (unsigned j = 0; j < n; ++j) {
        out += get(i, j) ? '1' : '0';
      }
    }
    return out + "]";
  }

  BoolMatrix BoolMatrix::from_rows(std::vector<std::vector<int>> const& rows) {
    auto const n = static_cast<unsigned>(rows.size());
    if (n > 8) {
      throw UnsupportedSize("Boolean matrices are limited to 8x8");
    }
    BoolMatrix m{n, 0};
    for (unsigned i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw PreconditionFailed("matrix rows must be square");
      }
      for (unsigned j = 0; j < n; ++j) {
        m.set(i, j, rows[i][j] != 0);
      }
    }
    return m;
  }

  FiniteAlgebra hall_semiring(unsigned n, bool with_star, Budgets const& budgets) {
    if (n == 0) {
      throw PreconditionFailed("hall_semiring: n must be positive");
    }
    if (n > 4) {
      throw CarrierTooLarge("hall_semiring: n > 4 exceeds the enumeration budget");
    }
    std::uint64_t const      patterns = std::uint64_t(1) << (n * n);
    std::vector<BoolMatrix>  carrier;
    std::vector<std::int32_t> index(patterns, -1);
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
      BoolMatrix m{n, bits};
      if (m.has_positive_permanent()) {
        index[bits] = static_cast<std::int32_t>(carrier.size());
        carrier.push_back(m);
      }
    }
    if (carrier.size() > budgets.max_carrier) {
      throw CarrierTooLarge("hall_semiring: " + std::to_string(carrier.size())
                            + " Hall relations exceed max_carrier "
                            + std::to_string(budgets.max_carrier));
    }
    auto const size    = carrier.size();
    auto       lookup  = [&](BoolMatrix const& m) {
      auto const i = index[m.bits];
      if (i < 0) {
        throw Error("hall_semiring: carrier not closed at " + m.label());
      }
      return static_cast<Element>(i);
    };
    std::vector<std::string> labels;
    Table                    mul(size), add(size);
    for (Element x = 0; x < size; ++x) {
      labels.push_back(carrier[x].label());
      for (Element y = 0; y < size; ++y) {
        mul.at(x, y) = lookup(carrier[x] * carrier[y]);
        add.at(x, y) = lookup(carrier[x] | carrier[y]);
      }
    }
    std::optional<std::vector<Element>> star;
    if (with_star) {
      star.emplace(size);
      for (Element x = 0; x < size; ++x) {
        (*star)[x] = lookup(carrier[x].transposed());
      }
    }
    nlohmann::json meta;
    meta["construction"] = "hall";
    meta["n"]            = n;
    meta["with_star"]    = with_star;
    auto const kind      = kind_for(true, with_star);
    return FiniteAlgebra(kind,
                         std::move(labels),
                         std::move(mul),
                         std::move(add),
                         std::move(star),
                         std::move(meta));
  }

  BoolMatrix hall_matrix(FiniteAlgebra const& hall, Element x) {
    auto const n = hall.meta().at("n").get<unsigned>();
    auto const& label = hall.label(x);
    BoolMatrix m{n, 0};
    // label is "[r0,r1,...]" with one digit per entry
    std::size_t pos = 1;
    for (unsigned i = 0; i < n; ++i, ++pos) {
      for (unsigned j = 0; j < n; ++j, ++pos) {
        m.set(i, j, label.at(pos) == '1');
      }
    }
    return m;
  }

  // The subset B --------------------------------------------------------------

  SubsetB subset_b(FiniteAlgebra const& group, SubsetMask subgroup, Element g) {
    auto const info = require_group(group);
    if (group.size() >= 64) {
      throw UnsupportedSize("subset_b: group too large for subset masks");
    }
    if (g >= group.size()) {
      throw PreconditionFailed("subset_b: g is not a group element");
    }
    auto const members = members_of(subgroup);
    if (members.empty() || members.back() >= group.size()
        || !is_subgroup(group, info, members)) {
      throw NotASubgroup("subset_b: " + subset_label(group, subgroup)
                         + " is not a subgroup");
    }
    SubsetMask const gm  = SubsetMask(1) << g;
    SubsetMask const gi  = SubsetMask(1) << info.inverse[g];
    SubsetB          b;
    b.identity       = SubsetMask(1) << info.identity;
    b.subgroup       = subgroup;
    b.left_coset     = subset_product(group, gi, subgroup);
    b.right_coset    = subset_product(group, subgroup, gm);
    b.conjugate      = subset_product(group, b.left_coset, gm);
    b.subgroup_order = members.size();
    if (b.conjugate == subgroup) {
      throw NormalSubgroup("subset_b: g^-1 H g = H for g = " + group.label(g));
    }
    if (b.left_coset == b.right_coset) {
      throw PreconditionFailed("subset_b: g^-1 H = H g");
    }
    b.carrier = {b.identity, b.subgroup, b.left_coset, b.right_coset, b.conjugate};
    SubsetMask const full = (SubsetMask(1) << group.size()) - 1;
    for (SubsetMask a = 1; a <= full; ++a) {
      if (static_cast<std::size_t>(std::popcount(a)) > b.subgroup_order) {
        b.carrier.push_back(a);
      }
    }
    // closure under union and product
    auto in_carrier = [&](SubsetMask m) {
      return std::find(b.carrier.begin(), b.carrier.end(), m) != b.carrier.end();
    };
    for (std::size_t i = 0; i < 5; ++i) {
      for (auto y : b.carrier) {
        auto const x = b.carrier[i];
        if (!in_carrier(x | y) || !in_carrier(subset_product(group, x, y))
            || !in_carrier(subset_product(group, y, x))) {
          throw Error("subset_b: carrier is not closed");
        }
      }
    }
    return b;
  }

  std::vector<std::string> subset_b_targets(SubsetB const& b) {
    std::vector<std::string> out;
    for (auto m : b.carrier) {
      if (m == b.identity) {
        out.emplace_back("1");
      } else if (m == b.subgroup) {
        out.emplace_back("e");
      } else if (m == b.right_coset) {
        out.emplace_back("a");
      } else if (m == b.left_coset) {
        out.emplace_back("b");
      } else if (m == b.conjugate) {
        out.emplace_back("f");
      } else {
        out.emplace_back("0");
      }
    }
    return out;
  }

  FiniteAlgebra subset_b_algebra(FiniteAlgebra const& group, SubsetB const& b) {
    std::size_t const g    = group.size();
    std::size_t const size = b.carrier.size();
    if (size > default_budgets().max_carrier) {
      throw CarrierTooLarge("subset_b: carrier of size " + std::to_string(size));
    }
    std::map<SubsetMask, Element> index;
    std::vector<std::string>      labels;
    for (Element i = 0; i < size; ++i) {
      index[b.carrier[i]] = i;
      labels.push_back(subset_label(group, b.carrier[i]));
    }
    Table mul(size), add(size);
    for (Element x = 0; x < size; ++x) {
      for (Element y = 0; y < size; ++y) {
        mul.at(x, y) = index.at(subset_product(group, b.carrier[x], b.carrier[y]));
        add.at(x, y) = index.at(b.carrier[x] | b.carrier[y]);
      }
    }
    nlohmann::json meta;
    meta["construction"] = "subset-b";
    meta["group"]        = group.meta();
    meta["subgroup"]     = members_of(b.subgroup);
    // g is recovered as the element with g^-1 H = left_coset; store it
    Element gel = 0;
    for (Element x = 0; x < g; ++x) {
      auto const info = require_group(group);
      if (subset_product(group, SubsetMask(1) << info.inverse[x], b.subgroup)
              == b.left_coset
          && subset_product(group, b.subgroup, SubsetMask(1) << x) == b.right_coset) {
        gel = x;
        break;
      }
    }
    meta["g"] = gel;
    return FiniteAlgebra(AlgebraKind::ai_semiring,
                         std::move(labels),
                         std::move(mul),
                         std::move(add),
                         std::nullopt,
                         std::move(meta));
  }

  // Generic derived algebras --------------------------------------------------

  ElementSet subalgebra_generate(FiniteAlgebra const& alg,
                                 ElementSet const&    seeds,
                                 Signature            ops) {
    if (seeds.empty()) {
      throw PreconditionFailed("subalgebra_generate: seeds must be non-empty");
    }
    if ((ops.add && !alg.has_add()) || (ops.star && !alg.has_star())) {
      throw MissingTable("subalgebra_generate: operation not present");
    }
    std::vector<bool>    in(alg.size(), false);
    std::vector<Element> members;
    auto push = [&](Element x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    for (auto x : seeds) {
      if (x >= alg.size()) {
        throw PreconditionFailed("subalgebra_generate: seed out of range");
      }
      push(x);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const x = members[i];
      if (ops.star) {
        push(alg.star(x));
      }
      for (std::size_t j = 0; j <= i; ++j) {
        auto const y = members[j];
        if (ops.mul) {
          push(alg.mul(x, y));
          push(alg.mul(y, x));
        }
        if (ops.add) {
          push(alg.add(x, y));
          push(alg.add(y, x));
        }
      }
    }
    return normalized(std::move(members));
  }

  ElementSet subalgebra_generate(FiniteAlgebra const& alg, ElementSet const& seeds) {
    return subalgebra_generate(alg, seeds, alg.signature());
  }

  namespace {
    std::string fresh_label(FiniteAlgebra const& alg,
                            ElementSet const&    dropped,
                            std::string          label) {
      auto const gone = to_mask(alg.size(), dropped);
      while (true) {
        auto const hit = alg.find(label);
        if (!hit || gone[*hit]) {
          return label;
        }
        label += '\'';
      }
    }

    nlohmann::json labels_json(FiniteAlgebra const& alg, ElementSet const& set) {
      auto out = nlohmann::json::array();
      for (auto x : set) {
        out.push_back(alg.label(x));
      }
      return out;
    }
  }  // namespace

  FiniteAlgebra rees_quotient(FiniteAlgebra const& alg, ElementSet const& ideal) {
    auto const set = normalized(ideal);
    if (set.empty()) {
      throw PreconditionFailed("rees_quotient: the ideal must be non-empty");
    }
    if (set.back() >= alg.size()) {
      throw PreconditionFailed("rees_quotient: ideal element out of range");
    }
    if (auto v = ideal_violation(alg, set)) {
      throw NotAnIdeal("rees_quotient: " + format_set(alg, set)
                           + " is not an ideal (" + alg.label(v->first) + "*"
                           + alg.label(v->second) + ")",
                       v->first,
                       v->second);
    }
    auto const               in = to_mask(alg.size(), set);
    std::vector<Element>     index(alg.size(), 0);
    std::vector<Element>     kept;
    std::vector<std::string> labels{fresh_label(alg, set, "0")};
    for (Element x = 0; x < alg.size(); ++x) {
      if (!in[x]) {
        index[x] = static_cast<Element>(kept.size() + 1);
        kept.push_back(x);
        labels.push_back(alg.label(x));
      }
    }
    Table mul(kept.size() + 1);
    for (Element i = 0; i < kept.size(); ++i) {
      for (Element j = 0; j < kept.size(); ++j) {
        mul.at(i + 1, j + 1) = index[alg.mul(kept[i], kept[j])];
      }
    }
    nlohmann::json meta;
    meta["construction"] = "rees-quotient";
    meta["base"]         = alg.meta();
    meta["ideal"]        = labels_json(alg, set);
    return FiniteAlgebra(AlgebraKind::semigroup,
                         std::move(labels),
                         std::move(mul),
                         std::nullopt,
                         std::nullopt,
                         std::move(meta));
  }

  namespace {
    FiniteAlgebra adjoin(FiniteAlgebra const& alg, std::string label, bool zero) {
      auto const               n = alg.size();
      std::vector<std::string> labels{label};
      labels.insert(labels.end(), alg.labels().begin(), alg.labels().end());
      Table mul(n + 1);
      for (Element x = 0; x <= n; ++x) {
        for (Element y = 0; y <= n; ++y) {
          if (x == 0 || y == 0) {
            mul.at(x, y) = zero ? 0 : (x == 0 ? y : x);
          } else {
            mul.at(x, y) = alg.mul(x - 1, y - 1) + 1;
          }
        }
      }
      nlohmann::json meta;
      meta["construction"] = zero ? "adjoin-zero" : "adjoin-identity";
      meta["base"]         = alg.meta();
      meta["label"]        = std::move(label);
      return FiniteAlgebra(AlgebraKind::semigroup,
                           std::move(labels),
                           std::move(mul),
                           std::nullopt,
                           std::nullopt,
                           std::move(meta));
    }
  }  // namespace

  FiniteAlgebra adjoin_zero(FiniteAlgebra const& alg, std::string label) {
    return adjoin(alg, std::move(label), true);
  }

  FiniteAlgebra adjoin_identity(FiniteAlgebra const& alg, std::string label) {
    return adjoin(alg, std::move(label), false);
  }

  // Rebuilding ----------------------------------------------------------------

  namespace {
    ElementSet elements_by_label(FiniteAlgebra const& alg, nlohmann::json const& j) {
      ElementSet out;
      for (auto const& l : j) {
        out.push_back(alg.at(l.get<std::string>()));
      }
      return normalized(std::move(out));
    }
  }  // namespace

  FiniteAlgebra rebuild_from_meta(nlohmann::json const& meta) {
    if (!meta.is_object() || !meta.contains("construction")) {
      throw PreconditionFailed("meta does not record a construction");
    }
    auto const c = meta.at("construction").get<std::string>();
    if (c == "group") {
      return make_group(GroupSpec::from_json(meta.at("group")));
    }
    if (c == "brandt") {
      return brandt_semigroup(rebuild_from_meta(meta.at("group")),
                              meta.at("index_count").get<unsigned>());
    }
    if (c == "b21") {
      return brandt_monoid_b21();
    }
    if (c == "power") {
      PowerOptions opt;
      opt.nonempty_only = meta.at("nonempty_only").get<bool>();
      opt.with_union    = meta.at("with_union").get<bool>();
      opt.with_inverse  = meta.at("with_inverse").get<bool>();
      return power_algebra(rebuild_from_meta(meta.at("group")), opt);
    }
    if (c == "hall") {
      return hall_semiring(meta.at("n").get<unsigned>(),
                           meta.at("with_star").get<bool>());
    }
    if (c == "kadourek") {
      return kadourek_semigroup(meta.at("n").get<unsigned>(),
                                meta.at("h").get<unsigned>())
          .algebra;
    }
    if (c == "subset-b") {
      auto const group = rebuild_from_meta(meta.at("group"));
      auto const h     = mask_of(meta.at("subgroup").get<ElementSet>());
      return subset_b_algebra(group, subset_b(group, h, meta.at("g").get<Element>()));
    }
    if (c == "adjoin-zero") {
      return adjoin_zero(rebuild_from_meta(meta.at("base")),
                         meta.at("label").get<std::string>());
    }
    if (c == "adjoin-identity") {
      return adjoin_identity(rebuild_from_meta(meta.at("base")),
                             meta.at("label").get<std::string>());
    }
    if (c == "rees-quotient") {
      auto const base = rebuild_from_meta(meta.at("base"));
      return rees_quotient(base, elements_by_label(base, meta.at("ideal")));
    }
    if (c == "induced-subalgebra") {
      auto const base = rebuild_from_meta(meta.at("base"));
      std::vector<Element> elements;
      for (auto const& l : meta.at("elements")) {
        elements.push_back(base.at(l.get<std::string>()));
      }
      Signature ops;
      ops.add  = meta.at("add").get<bool>();
      ops.star = meta.at("star").get<bool>();
      return induced_subalgebra(base, elements, ops);
    }
    throw PreconditionFailed("unknown construction "" + c + """);
  }

}  // namespace bglab
