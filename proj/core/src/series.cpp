#include <algorithm>
#include <limits>
#include <numeric>

#include "bglab/analysis.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"

namespace bglab {

  std::string_view to_string(FactorKind k) noexcept {
    switch (k) {
      case FactorKind::group:
        return "group";
      case FactorKind::brandt:
        return "brandt";
      case FactorKind::zero:
        return "zero";
      case FactorKind::other:
        return "other";
    }
    return "other";
  }

  // Brandt recognition ----------------------------------------------------------

  namespace {
    BrandtRecognition rejected(std::string reason) {
      BrandtRecognition out;
      out.reason = std::move(reason);
      return out;
    }
  }  // namespace

  BrandtRecognition is_brandt(FiniteAlgebra const& alg) {
    auto const n = alg.size();
    if (n < 2) {
      return rejected("fewer than two elements");
    }
    auto const zero = find_zero(alg);
    if (!zero) {
      return rejected("no zero element");
    }
    auto const z = *zero;

    bool null = true;
    for (Element a = 0; a < n && null; ++a) {
      for (Element b = 0; b < n && null; ++b) {
        null = alg.mul(a, b) == z;
      }
    }
    if (null) {
      return rejected("all products are zero");
    }
    auto const        jc      = j_classes(alg);
    std::size_t const nonzero = jc.class_of[z == 0 ? 1 : 0];
    for (Element a = 0; a < n; ++a) {
      if (a != z && jc.class_of[a] != nonzero) {
        return rejected("not 0-simple: " + alg.label(a) + " generates a proper ideal");
      }
    }

    std::vector<Element> inv(n);
    for (Element a = 0; a < n; ++a) {
      auto const i = inverses_of(alg, a);
      if (i.size() != 1) {
        return rejected("element " + alg.label(a) + " has " + std::to_string(i.size())
                        + " inverses");
      }
      inv[a] = i[0];
    }

    ElementSet idem;
    for (auto e : idempotents(alg)) {
      if (e != z) {
        idem.push_back(e);
      }
    }
    if (idem.empty()) {
      return rejected("no non-zero idempotent");
    }
    auto const k  = static_cast<unsigned>(idem.size());
    auto const e1 = idem[0];

    ElementSet h;
    for (auto const& s : maximal_subgroups(alg)) {
      if (s.idempotent == e1) {
        h = s.elements;
      }
    }
    auto const g = h.size();
    if (n != static_cast<std::size_t>(k) * k * g + 1) {
      return rejected("carrier size is not |I|^2 |G| + 1");
    }

    std::vector<std::size_t> idem_pos(n, k);
    for (unsigned i = 0; i < k; ++i) {
      idem_pos[idem[i]] = i;
    }
    // p[i] in R_{e1} n L_{ei}
    std::vector<Element> p(k);
    for (unsigned i = 0; i < k; ++i) {
      bool found = false;
      for (Element a = 0; a < n && !found; ++a) {
        if (a != z && alg.mul(a, inv[a]) == e1 && alg.mul(inv[a], a) == idem[i]) {
          p[i]  = a;
          found = true;
        }
      }
      if (!found) {
        return rejected("no element joins the first idempotent to "
                        + alg.label(idem[i]));
      }
    }

    // group positions: e1 first, then H ascending, matching extract_group
    std::vector<std::size_t> gpos(n, g);
    gpos[e1]           = 0;
    std::size_t next   = 1;
    for (auto x : h) {
      if (x != e1) {
        gpos[x] = next++;
      }
    }
    BrandtRecognition out;
    out.group       = extract_group(alg, h);
    out.index_count = k;
    out.iso.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      if (a == z) {
        continue;
      }
      auto const l  = idem_pos[alg.mul(a, inv[a])];
      auto const r  = idem_pos[alg.mul(inv[a], a)];
      if (l == k || r == k) {
        return rejected("a a^-1 is not a non-zero idempotent");
      }
      auto const ge = alg.mul(alg.mul(p[l], a), inv[p[r]]);
      if (gpos[ge] == g) {
        return rejected("coordinate of " + alg.label(a) + " leaves the group");
      }
      out.iso[a] = brandt_index(g,
                                k,
                                {false,
                                 static_cast<unsigned>(l),
                                 static_cast<Element>(gpos[ge]),
                                 static_cast<unsigned>(r)});
    }

    auto const        model = brandt_semigroup(*out.group, k);
    std::vector<bool> hit(n, false);
    for (Element a = 0; a < n; ++a) {
      if (hit[out.iso[a]]) {
        return rejected("coordinate map is not injective");
      }
      hit[out.iso[a]] = true;
      for (Element b = 0; b < n; ++b) {
        if (out.iso[alg.mul(a, b)] != model.mul(out.iso[a], out.iso[b])) {
          return rejected("coordinate map is not a homomorphism at ("
                          + alg.label(a) + "," + alg.label(b) + ")");
        }
      }
    }
    out.yes = true;
    return out;
  }

  // Principal series ------------------------------------------------------------

  std::uint64_t series_q(std::size_t h, std::uint64_t m) noexcept {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  q   = m;
    for (std::size_t i = 0; i < h; ++i) {
      if (q > max / 2) {
        return max;
      }
      q *= 2;
    }
    return q;
  }

  std::size_t series_r(std::size_t h, std::size_t k) noexcept {
    return k * h + h + k;
  }

  namespace {
    // J u {0} with products falling below J sent to 0
    FiniteAlgebra factor_algebra(FiniteAlgebra const& alg, ElementSet const& j) {
      auto const               n = j.size() + 1;
      std::vector<std::size_t> pos(alg.size(), 0);
      std::vector<std::string> labels{"0"};
      for (std::size_t i = 0; i < j.size(); ++i) {
        pos[j[i]] = i + 1;
        labels.push_back(std::to_string(i + 1));
      }
      Table mul(n);
      for (std::size_t x = 0; x < j.size(); ++x) {
        for (std::size_t y = 0; y < j.size(); ++y) {
          mul.at(static_cast<Element>(x + 1), static_cast<Element>(y + 1))
              = static_cast<Element>(pos[alg.mul(j[x], j[y])]);
        }
      }
      return FiniteAlgebra(AlgebraKind::semigroup, std::move(labels), std::move(mul));
    }

    std::uint64_t order_in(FiniteAlgebra const& alg, Element e, Element a) {
      std::uint64_t k = 1;
      for (Element x = a; x != e; x = alg.mul(x, a)) {
        ++k;
      }
      return k;
    }
  }  // namespace

  SeriesReport principal_series(FiniteAlgebra const& alg) {
    auto const        jc = j_classes(alg);
    auto const        c  = jc.classes.size();
    std::vector<bool> added(c, false);
    SeriesReport      report;
    ElementSet        current;

    for (std::size_t step = 0; step < c; ++step) {
      std::size_t pick = c;
      for (std::size_t i = 0; i < c && pick == c; ++i) {
        if (!added[i]
            && std::all_of(jc.below[i].begin(), jc.below[i].end(), [&](std::size_t d) {
                 return static_cast<bool>(added[d]);
               })) {
          pick = i;
        }
      }
      added[pick]      = true;
      auto const& cls  = jc.classes[pick];
      current.insert(current.end(), cls.begin(), cls.end());
      std::sort(current.begin(), current.end());
      report.chain.push_back(current);

      SeriesFactor f;
      f.added = cls;
      if (step == 0) {
        auto const sub = induced_subalgebra(alg, cls, Signature{});
        if (group_structure(sub)) {
          f.kind        = FactorKind::group;
          f.group_order = cls.size();
          f.group_name  = describe_group(sub);
        }
      } else {
        auto const in   = to_mask(alg.size(), cls);
        bool       null = true;
        for (auto x : cls) {
          for (auto y : cls) {
            null = null && !in[alg.mul(x, y)];
          }
        }
        if (null) {
          f.kind = FactorKind::zero;
        } else if (auto rec = is_brandt(factor_algebra(alg, cls))) {
          f.kind        = FactorKind::brandt;
          f.group_order = rec.group->size();
          f.index_count = rec.index_count;
          f.group_name  = describe_group(*rec.group);
        }
      }
      report.factors.push_back(std::move(f));
    }

    report.h = report.chain.size() - 1;
    std::size_t k = 0;
    for (auto const& s : maximal_subgroups(alg)) {
      for (auto a : s.elements) {
        report.m = std::lcm(report.m, order_in(alg, s.idempotent, a));
      }
      if (s.elements.size() > 1) {
        auto const series = derived_series(extract_group(alg, s.elements));
        if (series.back().size() == 1) {
          k = std::max(k, series.size() - 1);
        }
      }
    }
    report.k_floored = k == 0;
    report.k         = std::max<std::size_t>(k, 1);
    report.q         = series_q(report.h, report.m);
    report.r         = series_r(report.h, report.k);
    report.brandt_series
        = report.factors[0].kind == FactorKind::group
          && std::all_of(report.factors.begin() + 1, report.factors.end(), [](auto const& f) {
               return f.kind != FactorKind::other;
             });
    return report;
  }

  std::optional<std::string> verify_series(FiniteAlgebra const& alg,
                                           SeriesReport const&  report) {
    auto const& chain = report.chain;
    if (chain.empty()) {
      return "empty chain";
    }
    if (chain.back().size() != alg.size()) {
      return "the last term is not the whole carrier";
    }
    if (report.h + 1 != chain.size()) {
      return "h does not match the chain length";
    }
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (!is_ideal(alg, chain[j])) {
        return "S_" + std::to_string(j) + " is not an ideal";
      }
      if (j > 0
          && (chain[j].size() <= chain[j - 1].size()
              || !std::includes(chain[j].begin(),
                                chain[j].end(),
                                chain[j - 1].begin(),
                                chain[j - 1].end()))) {
        return "S_" + std::to_string(j) + " does not strictly contain its predecessor";
      }
    }
    for (auto x : chain[0]) {
      if (principal_ideal(alg, x) != chain[0]) {
        return "S_0 is not the least ideal";
      }
    }
    for (std::size_t j = 1; j < chain.size(); ++j) {
      auto const lower = to_mask(alg.size(), chain[j - 1]);
      for (auto x : chain[j]) {
        if (lower[x]) {
          continue;
        }
        auto u = principal_ideal(alg, x);
        u.insert(u.end(), chain[j - 1].begin(), chain[j - 1].end());
        if (normalized(std::move(u)) != chain[j]) {
          return "an ideal lies strictly between S_" + std::to_string(j - 1) + " and S_"
                 + std::to_string(j);
        }
      }
    }
    if (report.q != series_q(report.h, report.m)
        || report.r != series_r(report.h, report.k)) {
      return "(q, r) do not match (h, m, k)";
    }
    return std::nullopt;
  }

  Verdict fd_property(FiniteAlgebra const& alg, ElementSet const& brandt_ideal) {
    auto const ideal = normalized(brandt_ideal);
    if (ideal.empty() || ideal.back() >= alg.size() || !is_ideal(alg, ideal)) {
      throw PreconditionFailed("fd_property: the set is not an ideal");
    }
    if (!is_block_group(alg)) {
      throw PreconditionFailed("fd_property: the algebra is not a block-group");
    }
    auto const sub = induced_subalgebra(alg, ideal, Signature{});
    if (!is_brandt(sub)) {
      throw PreconditionFailed("fd_property: the ideal is not a Brandt semigroup");
    }
    auto const z = ideal[*find_zero(sub)];
    for (auto f : idempotents(alg)) {
      for (auto b : ideal) {
        auto const fb = alg.mul(f, b), bf = alg.mul(b, f);
        if ((fb != b && fb != z) || (bf != b && bf != z)) {
          return {false, {f, b}};
        }
      }
    }
    return {};
  }

  // Report ----------------------------------------------------------------------

  nlohmann::json analysis_report(FiniteAlgebra const& alg) {
    nlohmann::json out;
    out["size"] = alg.size();
    out["kind"] = std::string(to_string(alg.kind()));

    auto labels = [&](ElementSet const& s) {
      std::vector<std::string> l;
      for (auto x : s) {
        l.push_back(alg.label(x));
      }
      return l;
    };
    out["idempotents"] = labels(idempotents(alg));

    auto const bg     = is_block_group(alg);
    out["block_group"] = bg.holds;
    if (!bg.holds) {
      out["block_group_witness"] = labels(bg.witness);
    }
    out["unique_inverses"] = unique_inverse_check(alg).holds;
    auto const es          = idempotent_generated(alg);
    out["j_trivial_ES"]    = j_trivial(alg, es).holds;

    auto const report = principal_series(alg);
    auto       series = nlohmann::json::array();
    for (std::size_t j = 0; j < report.chain.size(); ++j) {
      auto const&    f = report.factors[j];
      nlohmann::json s;
      s["ideal"] = report.chain[j];
      s["added"] = f.added;
      s["kind"]  = std::string(to_string(f.kind));
      if (f.kind == FactorKind::group || f.kind == FactorKind::brandt) {
        s["group"]       = f.group_name;
        s["group_order"] = f.group_order;
      }
      if (f.kind == FactorKind::brandt) {
        s["index_count"] = f.index_count;
      }
      series.push_back(std::move(s));
    }
    out["series"]        = std::move(series);
    out["brandt_series"] = report.brandt_series;
    out["h"]             = report.h;
    out["m"]             = report.m;
    out["k"]             = report.k;
    out["k_floored"]     = report.k_floored;
    out["q"]             = report.q;
    out["r"]             = report.r;
    if (auto err = verify_series(alg, report)) {
      out["series_check"] = *err;
    } else {
      out["series_check"] = "ok";
    }

    auto subs = nlohmann::json::array();
    for (auto const& s : maximal_subgroups(alg)) {
      nlohmann::json j;
      j["idempotent"] = alg.label(s.idempotent);
      j["elements"]   = s.elements;
      j["order"]      = s.elements.size();
      auto const grp  = extract_group(alg, s.elements);
      j["group"]      = describe_group(grp);
      if (grp.size() <= 128) {
        auto const a = group_analytics(grp);
        j["exponent"] = a.exponent;
        if (a.derived_length) {
          j["derived_length"] = *a.derived_length;
        }
        j["dedekind"]                = a.dedekind;
        j["has_quaternion_subgroup"] = a.has_quaternion_subgroup;
      }
      subs.push_back(std::move(j));
    }
    out["subgroups"] = std::move(subs);

    if (group_structure(alg) && alg.size() <= 128) {
      auto const a = group_analytics(alg);
      out["group"]                   = describe_group(alg);
      out["solvable"]                = a.solvable;
      out["exponent"]                = a.exponent;
      out["dedekind"]                = a.dedekind;
      out["has_quaternion_subgroup"] = a.has_quaternion_subgroup;
      out["subgroup_count"]          = a.subgroup_count;
      if (a.derived_length) {
        out["derived_length"] = *a.derived_length;
      }
    }
    return out;
  }

}  // namespace bglab
