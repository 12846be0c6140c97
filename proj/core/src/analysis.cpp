#include "bglab/analysis.hpp"

#include <algorithm>
#include <functional>

#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"

namespace bglab {

  ElementSet idempotents(FiniteAlgebra const& alg) {
    ElementSet out;
    for (Element a = 0; a < alg.size(); ++a) {
      if (alg.mul(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  Element idempotent_power(FiniteAlgebra const& alg, Element a) {
    // the powers of a enter a cycle of length at most |S| which holds
    // exactly one idempotent
    Element x = a;
    for (std::size_t i = 0; i <= alg.size(); ++i) {
      if (alg.mul(x, x) == x) {
        return x;
      }
      x = alg.mul(x, a);
    }
    throw Error("idempotent_power: no idempotent power found (not associative?)");
  }

  Verdict is_block_group(FiniteAlgebra const& alg) {
    auto const e = idempotents(alg);
    for (auto x : e) {
      for (auto y : e) {
        if (x == y) {
          continue;
        }
        bool const left  = alg.mul(x, y) == x && alg.mul(y, x) == y;
        bool const right = alg.mul(x, y) == y && alg.mul(y, x) == x;
        if (left || right) {
          return {false, {x, y}};
        }
      }
    }
    return {};
  }

  ElementSet inverses_of(FiniteAlgebra const& alg, Element a) {
    ElementSet out;
    for (Element b = 0; b < alg.size(); ++b) {
      if (alg.mul(alg.mul(a, b), a) == a && alg.mul(alg.mul(b, a), b) == b) {
        out.push_back(b);
      }
    }
    return out;
  }

  Verdict unique_inverse_check(FiniteAlgebra const& alg) {
    for (Element a = 0; a < alg.size(); ++a) {
      auto const inv = inverses_of(alg, a);
      if (inv.size() > 1) {
        return {false, {a, inv[0], inv[1]}};
      }
    }
    return {};
  }

  bool is_regular(FiniteAlgebra const& alg, Element a) {
    for (Element b = 0; b < alg.size(); ++b) {
      if (alg.mul(alg.mul(a, b), a) == a) {
        return true;
      }
    }
    return false;
  }

  ElementSet idempotent_generated(FiniteAlgebra const& alg) {
    return subalgebra_generate(alg, idempotents(alg), Signature{});
  }

  // J-classes -------------------------------------------------------------------

  JClasses j_classes(FiniteAlgebra const& alg) {
    auto const n = static_cast<Element>(alg.size());
    // Tarjan on the graph a -> ax, a -> xa; iterative to keep the stack flat
    constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool>        on_stack(n, false);
    std::vector<Element>     stack;
    std::vector<ElementSet>  sccs;  // sinks first
    std::size_t              counter = 0;

    struct Frame {
      Element     v;
      std::size_t next;  // 0..2n-1: right then left multiplications
    };
    for (Element root = 0; root < n; ++root) {
      if (index[root] != kUnset) {
        continue;
      }
      std::vector<Frame> call{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty()) {
        auto& f = call.back();
        if (f.next < 2 * static_cast<std::size_t>(n)) {
          auto const x = static_cast<Element>(f.next % n);
          auto const w = f.next < n ? alg.mul(f.v, x) : alg.mul(x, f.v);
          ++f.next;
          if (index[w] == kUnset) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        auto const v = f.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          ElementSet c;
          Element    w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = sccs.size();
            c.push_back(w);
          } while (w != v);
          std::sort(c.begin(), c.end());
          sccs.push_back(std::move(c));
        }
      }
    }

    // strict-below sets as bitsets, in Tarjan order (successors finish first)
    auto const                              k     = sccs.size();
    std::size_t const                       words = (k + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below_bits(k, std::vector<std::uint64_t>(words, 0));
    std::vector<std::size_t> stamp(k, kUnset);
    for (std::size_t c = 0; c < k; ++c) {
      for (auto v : sccs[c]) {
        for (Element x = 0; x < n; ++x) {
          for (auto w : {alg.mul(v, x), alg.mul(x, v)}) {
            auto const d = comp[w];
            if (d == c || stamp[d] == c) {
              continue;
            }
            stamp[d] = c;
            below_bits[c][d / 64] |= std::uint64_t(1) << (d % 64);
            for (std::size_t i = 0; i < words; ++i) {
              below_bits[c][i] |= below_bits[d][i];
            }
          }
        }
      }
    }

    // renumber by least element
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sccs[a][0] < sccs[b][0];
    });
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) {
      position[order[i]] = i;
    }
    JClasses out;
    out.class_of.resize(n);
    for (std::size_t i = 0; i < k; ++i) {
      auto const c = order[i];
      out.classes.push_back(sccs[c]);
      std::vector<std::size_t> below;
      for (std::size_t d = 0; d < k; ++d) {
        if (below_bits[c][d / 64] >> (d % 64) & 1u) {
          below.push_back(position[d]);
        }
      }
      std::sort(below.begin(), below.end());
      out.below.push_back(std::move(below));
    }
    for (Element v = 0; v < n; ++v) {
      out.class_of[v] = position[comp[v]];
    }
    return out;
  }

  ElementSet principal_ideal(FiniteAlgebra const& alg, Element a) {
    std::vector<bool>    in(alg.size(), false);
    std::vector<Element> members{a};
    in[a] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element x = 0; x < alg.size(); ++x) {
        for (auto w : {alg.mul(members[i], x), alg.mul(x, members[i])}) {
          if (!in[w]) {
            in[w] = true;
            members.push_back(w);
          }
        }
      }
    }
    return normalized(std::move(members));
  }

  Verdict j_trivial(FiniteAlgebra const& alg) {
    for (auto const& c : j_classes(alg).classes) {
      if (c.size() > 1) {
        return {false, {c[0], c[1]}};
      }
    }
    return {};
  }

  Verdict j_trivial(FiniteAlgebra const& alg, ElementSet const& subset) {
    auto const sub = induced_subalgebra(alg, subset, Signature{});
    auto       v   = j_trivial(sub);
    for (auto& x : v.witness) {
      x = subset[x];
    }
    return v;
  }

  // Subgroups -----------------------------------------------------------------

  std::vector<MaximalSubgroup> maximal_subgroups(FiniteAlgebra const& alg) {
    std::vector<Element> omega(alg.size());
    for (Element a = 0; a < alg.size(); ++a) {
      omega[a] = idempotent_power(alg, a);
    }
    std::vector<MaximalSubgroup> out;
    for (auto e : idempotents(alg)) {
      MaximalSubgroup g{e, {}};
      for (Element a = 0; a < alg.size(); ++a) {
        if (omega[a] == e && alg.mul(e, a) == a && alg.mul(a, e) == a) {
          g.elements.push_back(a);
        }
      }
      out.push_back(std::move(g));
    }
    return out;
  }

  std::optional<std::uint64_t> aperiodic_index(FiniteAlgebra const& alg) {
    std::uint64_t p = 1;
    for (Element a = 0; a < alg.size(); ++a) {
      // least p_a with a^p_a = a^(p_a + 1)
      Element       x  = a;
      std::uint64_t pa = 1;
      while (alg.mul(x, a) != x) {
        x = alg.mul(x, a);
        if (++pa > alg.size()) {
          return std::nullopt;
        }
      }
      p = std::max(p, pa);
    }
    return p;
  }

}  // namespace bglab
