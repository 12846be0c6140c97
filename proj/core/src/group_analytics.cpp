#include <algorithm>
#include <numeric>
#include <set>

#include "bglab/analysis.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"

namespace bglab {

  Element commutator(FiniteAlgebra const& group, Element a, Element b) {
    auto const info = require_group(group);
    return group.mul(group.mul(info.inverse[a], info.inverse[b]), group.mul(a, b));
  }

  std::vector<ElementSet> subgroups(FiniteAlgebra const& group, std::size_t max_order) {
    if (group.size() > max_order) {
      throw SubgroupEnumerationBudget("subgroup enumeration is limited to |G| <= "
                                      + std::to_string(max_order));
    }
    auto const info = require_group(group);
    struct Entry {
      ElementSet elements;
      ElementSet generators;
    };
    std::vector<Entry>   found{{{info.identity}, {}}};
    std::set<ElementSet> seen{found[0].elements};
    for (std::size_t i = 0; i < found.size(); ++i) {
      auto const in = to_mask(group.size(), found[i].elements);
      for (Element g = 0; g < group.size(); ++g) {
        if (in[g]) {
          continue;
        }
        auto gens = found[i].generators;
        gens.push_back(g);
        auto k = subgroup_closure(group, info, normalized(gens));
        if (seen.insert(k).second) {
          found.push_back({std::move(k), std::move(gens)});
        }
      }
    }
    std::vector<ElementSet> out;
    for (auto& e : found) {
      out.push_back(std::move(e.elements));
    }
    std::sort(out.begin(), out.end(), [](ElementSet const& a, ElementSet const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  std::vector<ElementSet> derived_series(FiniteAlgebra const& group) {
    auto const              info = require_group(group);
    std::vector<ElementSet> series;
    ElementSet              all(group.size());
    std::iota(all.begin(), all.end(), Element(0));
    series.push_back(std::move(all));
    while (true) {
      auto const& g = series.back();
      ElementSet  comms;
      for (auto a : g) {
        for (auto b : g) {
          comms.push_back(group.mul(group.mul(info.inverse[a], info.inverse[b]),
                                    group.mul(a, b)));
        }
      }
      auto next = subgroup_closure(group, info, normalized(std::move(comms)));
      if (next == g) {
        return series;
      }
      series.push_back(std::move(next));
    }
  }

  ElementSet normalizer(FiniteAlgebra const& group, ElementSet const& subgroup) {
    auto const info = require_group(group);
    auto const h    = normalized(subgroup);
    if (h.empty() || h.back() >= group.size() || !is_subgroup(group, info, h)) {
      throw NotASubgroup("normalizer: " + format_set(group, h) + " is not a subgroup");
    }
    ElementSet out;
    for (Element g = 0; g < group.size(); ++g) {
      std::vector<Element> left, right;
      for (auto x : h) {
        left.push_back(group.mul(g, x));
        right.push_back(group.mul(x, g));
      }
      if (normalized(left) == normalized(right)) {
        out.push_back(g);
      }
    }
    if (!is_subgroup(group, info, out)
        || !std::includes(out.begin(), out.end(), h.begin(), h.end())) {
      throw Error("normalizer: result is not a subgroup containing H");
    }
    return out;
  }

  namespace {
    bool is_abelian(FiniteAlgebra const& group, ElementSet const& set) {
      for (auto a : set) {
        for (auto b : set) {
          if (group.mul(a, b) != group.mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_normal(FiniteAlgebra const& group, GroupInfo const& info, ElementSet const& h) {
      auto const in = to_mask(group.size(), h);
      for (Element g = 0; g < group.size(); ++g) {
        for (auto x : h) {
          if (!in[group.mul(group.mul(info.inverse[g], x), g)]) {
            return false;
          }
        }
      }
      return true;
    }

    std::size_t involutions(FiniteAlgebra const&  group,
                            GroupInfo const&      info,
                            ElementSet const&     set) {
      return static_cast<std::size_t>(std::count_if(set.begin(), set.end(), [&](Element x) {
        return x != info.identity && group.mul(x, x) == info.identity;
      }));
    }
  }  // namespace

  GroupAnalytics group_analytics(FiniteAlgebra const& group, std::size_t max_order) {
    auto const     info = require_group(group);
    GroupAnalytics out;
    for (Element x = 0; x < group.size(); ++x) {
      out.exponent = std::lcm(out.exponent, element_order(group, info, x));
    }
    auto const series = derived_series(group);
    out.solvable      = series.back().size() == 1;
    if (out.solvable) {
      out.derived_length = series.size() - 1;
    }
    auto const subs    = subgroups(group, max_order);
    out.subgroup_count = subs.size();
    out.dedekind       = std::all_of(subs.begin(), subs.end(), [&](ElementSet const& h) {
      return is_normal(group, info, h);
    });
    out.has_quaternion_subgroup
        = std::any_of(subs.begin(), subs.end(), [&](ElementSet const& h) {
            return h.size() == 8 && !is_abelian(group, h)
                   && involutions(group, info, h) == 1;
          });
    return out;
  }

  std::string describe_group(FiniteAlgebra const& group) {
    auto const info = require_group(group);
    auto const n    = group.size();
    if (n == 1) {
      return "trivial";
    }
    ElementSet all(n);
    std::iota(all.begin(), all.end(), Element(0));
    for (Element x = 0; x < n; ++x) {
      if (element_order(group, info, x) == n) {
        return "C" + std::to_string(n);
      }
    }
    if (is_abelian(group, all)) {
      return "A" + std::to_string(n);
    }
    if (n == 6) {
      return "S3";
    }
    if (n == 8) {
      return involutions(group, info, all) == 1 ? "Q8" : "D4";
    }
    return "G" + std::to_string(n);
  }

}  // namespace bglab
