#include <algorithm>
#include <cmath>
#include <string>

#include "bglab/checker.hpp"
#include "bglab/errors.hpp"
#include "bglab/rng.hpp"
#include "check_common.hpp"

namespace bglab {

  namespace detail {

    std::optional<BlockSide> block_side(Expr const& e) {
      switch (e.kind()) {
        case Expr::Kind::one:
          return BlockSide{};
        case Expr::Kind::vword:
          return BlockSide{false, e.shape(), 1};
        case Expr::Kind::power:
          if (e.base().kind() == Expr::Kind::vword) {
            return BlockSide{false, e.base().shape(), e.exponent()};
          }
          return std::nullopt;
        default:
          return std::nullopt;
      }
    }

  }  // namespace detail

  namespace {

    using detail::BlockSide;

    constexpr std::uint32_t kNone = 0xffffffffu;

    // Largest carrier for which back-pointers (|S|^2 per step) are kept.
    constexpr std::size_t kTraceCarrier = 1024;

    //! One level of the value sets: a node over 2n blocks whose values lie
    //! in the previous level. The left half contributes the pair
    //! (b_1...b_n, b_n...b_1), the right half the product b_(n+1)...b_2n,
    //! and the node is (pl q)(pr q)^repeat.
    struct Level {
      ElementSet values;
      // back-pointers, kept only when tracing
      std::vector<std::vector<std::uint32_t>> pair_prev;  // per step, by pair code
      std::vector<std::vector<Element>>       pair_x;
      std::vector<std::vector<Element>>       prod_prev;  // per step, by product
      std::vector<std::vector<Element>>       prod_x;
      std::vector<std::uint32_t>              pick_pair;  // by node value
      std::vector<Element>                    pick_prod;
    };

    class ValueLevels {
     public:
      ValueLevels(FiniteAlgebra const& alg, BlockWord::Shape shape, ElementSet domain,
                  bool trace, std::uint64_t budget)
          : _alg(alg), _shape(shape), _trace(trace && alg.size() <= kTraceCarrier),
            _budget(budget) {
        _domain = std::move(domain);
        _repeat = 2 * shape.m - 1;
        _pow.resize(alg.size());
        for (Element x = 0; x < alg.size(); ++x) {
          _pow[x] = power(alg, x, _repeat);
        }
        ElementSet current = _domain;
        for (unsigned d = 1; d <= shape.h; ++d) {
          auto lvl = build(current);
          if (!lvl) {
            return;
          }
          bool const stable = lvl->values == current;
          current           = lvl->values;
          _levels.push_back(std::move(*lvl));
          if (stable) {
            break;
          }
        }
        _complete = true;
      }

      bool complete() const noexcept {
        return _complete;
      }
      std::uint64_t work() const noexcept {
        return _work;
      }
      bool traced() const noexcept {
        return _trace;
      }

      //! Value set at height d (0 = the domain).
      ElementSet const& values(unsigned d) const {
        if (d == 0) {
          return _domain;
        }
        return level(d).values;
      }

      //! Block values b_1..b_2n of a node of height d with value `v`.
      std::vector<Element> children(unsigned d, Element v) const {
        auto const& L = level(d);
        auto const  n = _shape.n;
        auto const  N = static_cast<std::uint32_t>(_alg.size());
        std::vector<Element> b(2 * n);
        std::uint32_t        code = L.pick_pair[v];
        for (unsigned i = n; i-- > 1;) {
          b[i] = L.pair_x[i - 1][code];
          code = L.pair_prev[i - 1][code];
        }
        b[0]   = code / N;
        Element p = L.pick_prod[v];
        for (unsigned i = n; i-- > 1;) {
          b[n + i] = L.prod_x[i - 1][p];
          p        = L.prod_prev[i - 1][p];
        }
        b[n] = p;
        return b;
      }

     private:
      Level const& level(unsigned d) const {
        return _levels[std::min<std::size_t>(d, _levels.size()) - 1];
      }

      bool charge(std::uint64_t amount) {
        _work += amount;
        return _work <= _budget;
      }

      std::optional<Level> build(ElementSet const& below) {
        auto const N = static_cast<std::uint32_t>(_alg.size());
        auto const n = _shape.n;
        Level      L;

        // left half: pairs (b_1..b_i, b_i..b_1)
        std::vector<std::uint32_t> pairs;
        std::vector<char>          seen(std::size_t(N) * N, 0);
        for (auto x : below) {
          pairs.push_back(x * N + x);
        }
        for (unsigned i = 1; i < n; ++i) {
          if (!charge(std::uint64_t(pairs.size()) * below.size())) {
            return std::nullopt;
          }
          std::fill(seen.begin(), seen.end(), 0);
          std::vector<std::uint32_t> next;
          std::vector<std::uint32_t> prev;
          std::vector<Element>       px;
          if (_trace) {
            prev.assign(std::size_t(N) * N, kNone);
            px.assign(std::size_t(N) * N, 0);
          }
          for (auto code : pairs) {
            Element const a = code / N, b = code % N;
            for (auto x : below) {
              auto const c = _alg.mul(a, x) * N + _alg.mul(x, b);
              if (!seen[c]) {
                seen[c] = 1;
                next.push_back(c);
                if (_trace) {
                  prev[c] = code;
                  px[c]   = x;
                }
              }
            }
          }
          std::sort(next.begin(), next.end());
          pairs = std::move(next);
          if (_trace) {
            L.pair_prev.push_back(std::move(prev));
            L.pair_x.push_back(std::move(px));
          }
        }

        // right half: products b_(n+1)..b_(n+i)
        ElementSet prods = below;
        for (unsigned i = 1; i < n; ++i) {
          if (!charge(std::uint64_t(prods.size()) * below.size())) {
            return std::nullopt;
          }
          std::vector<char>    hit(N, 0);
          std::vector<Element> prev, px;
          if (_trace) {
            prev.assign(N, 0);
            px.assign(N, 0);
          }
          for (auto p : prods) {
            for (auto x : below) {
              auto const c = _alg.mul(p, x);
              if (!hit[c]) {
                hit[c] = 1;
                if (_trace) {
                  prev[c] = p;
                  px[c]   = x;
                }
              }
            }
          }
          prods.clear();
          for (Element c = 0; c < N; ++c) {
            if (hit[c]) {
              prods.push_back(c);
            }
          }
          if (_trace) {
            L.prod_prev.push_back(std::move(prev));
            L.prod_x.push_back(std::move(px));
          }
        }

        if (!charge(std::uint64_t(pairs.size()) * prods.size())) {
          return std::nullopt;
        }
        std::vector<char> hit(N, 0);
        if (_trace) {
          L.pick_pair.assign(N, kNone);
          L.pick_prod.assign(N, 0);
        }
        for (auto code : pairs) {
          Element const pl = code / N, pr = code % N;
          for (auto q : prods) {
            auto const v = _alg.mul(_alg.mul(pl, q), _pow[_alg.mul(pr, q)]);
            if (!hit[v]) {
              hit[v] = 1;
              if (_trace) {
                L.pick_pair[v] = code;
                L.pick_prod[v] = q;
              }
            }
          }
        }
        for (Element v = 0; v < N; ++v) {
          if (hit[v]) {
            L.values.push_back(v);
          }
        }
        return L;
      }

      FiniteAlgebra const& _alg;
      BlockWord::Shape     _shape;
      bool                 _trace;
      std::uint64_t        _budget;
      std::uint64_t        _repeat = 1;
      ElementSet           _domain;
      std::vector<Element> _pow;
      std::vector<Level>   _levels;
      std::uint64_t        _work     = 0;
      bool                 _complete = false;
    };

    //! Assigns leaf values under `node` so that it evaluates to `value`.
    void assign(ValueLevels const& lv, BlockWord const& node, unsigned height, Element value,
                std::vector<Variable> const& alphabet, std::vector<Element>& out) {
      if (node.is_leaf()) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), node.variable());
        out[static_cast<std::size_t>(it - alphabet.begin())] = value;
        return;
      }
      auto const b = lv.children(height, value);
      for (std::size_t i = 0; i < b.size(); ++i) {
        assign(lv, node.blocks()[i], height - 1, b[i], alphabet, out);
      }
    }

    struct BlockPlan {
      BlockSide        lhs, rhs;
      BlockWord::Shape shape;
    };

    BlockPlan plan_for(Identity const& identity) {
      auto l = detail::block_side(identity.lhs);
      auto r = detail::block_side(identity.rhs);
      if (!l || !r || (l->unit && r->unit)
          || (!l->unit && !r->unit && !(l->shape == r->shape))) {
        throw PreconditionFailed("block evaluation needs both sides to be 1 or powers "
                                 "of one v-word: " + identity.to_string());
      }
      return {*l, *r, l->unit ? r->shape : l->shape};
    }

    Element side_value(FiniteAlgebra const& alg, BlockSide const& s, Element top, Element one) {
      return s.unit ? one : power(alg, top, s.exponent);
    }

    std::uint64_t leaf_count(BlockWord::Shape const& s) {
      double const leaves = std::pow(2.0 * s.n, s.h);
      return leaves >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                              : static_cast<std::uint64_t>(leaves);
    }

    //! Substitution making the v-word evaluate to `top`, if small enough.
    std::optional<Substitution> rebuild_witness(ValueLevels const&  lv,
                                                BlockWord::Shape    shape,
                                                Element             top) {
      if (!lv.traced() || leaf_count(shape) > default_budgets().word_length) {
        return std::nullopt;
      }
      auto const           word     = v_word(shape.n, shape.m, shape.h);
      auto const           alphabet = word.alphabet();
      std::vector<Element> values(alphabet.size());
      assign(lv, word, shape.h, top, alphabet, values);
      return Substitution(alphabet, std::move(values));
    }

    std::string vword_name(BlockWord::Shape const& s) {
      return "v[" + std::to_string(s.n) + "," + std::to_string(s.m) + ","
             + std::to_string(s.h) + "]";
    }

  }  // namespace

  bool is_block_identity(Identity const& identity) {
    try {
      plan_for(identity);
      return true;
    } catch (PreconditionFailed const&) {
      return false;
    }
  }

  ElementSet vword_values(FiniteAlgebra const& alg,
                          BlockWord::Shape     shape,
                          ElementSet const&    domain) {
    ValueLevels lv(alg, shape, normalized(domain), false,
                   std::numeric_limits<std::uint64_t>::max());
    return lv.values(shape.h);
  }

  CheckVerdict check_identity_block(FiniteAlgebra const& alg,
                                    Identity const&      identity,
                                    CheckOptions const&  options) {
    auto const plan = plan_for(identity);
    auto const one  = detail::unit_for(alg, identity);
    auto const dom  = detail::uniform_domain(alg, options);

    CheckVerdict v;
    v.method = "block";
    ValueLevels const lv(alg, plan.shape, dom, true, options.budget);
    v.evaluations = lv.work();
    if (!lv.complete()) {
      v.status = CheckStatus::budget_exceeded;
      v.note   = "value sets of " + vword_name(plan.shape) + " exceed the budget of "
               + std::to_string(options.budget) + " products";
      return v;
    }
    auto const& top = lv.values(plan.shape.h);
    v.note          = std::to_string(top.size()) + " values of " + vword_name(plan.shape);
    for (auto t : top) {
      auto const l = side_value(alg, plan.lhs, t, one);
      auto const r = side_value(alg, plan.rhs, t, one);
      ++v.evaluations;
      if (l != r) {
        v.status    = CheckStatus::counterexample;
        v.lhs_value = l;
        v.rhs_value = r;
        v.witness   = rebuild_witness(lv, plan.shape, t);
        v.note      = vword_name(plan.shape) + " takes the value " + alg.label(t);
        if (!v.witness) {
          v.note += "; substitution too large to list";
        }
        return v;
      }
    }
    return v;
  }

  namespace detail {

    CheckVerdict sample_block_identity(FiniteAlgebra const& alg,
                                       Identity const&      identity,
                                       std::uint64_t        samples,
                                       std::uint64_t        seed,
                                       CheckOptions const&  options) {
      auto const plan   = plan_for(identity);
      auto const one    = unit_for(alg, identity);
      auto const domain = uniform_domain(alg, options);
      auto const N      = alg.size();
      auto const n      = plan.shape.n;
      auto const rep    = 2 * plan.shape.m - 1;

      CheckVerdict v;
      v.method = "sampled-levels";
      v.seed   = seed;
      if (domain.empty()) {
        v.status = CheckStatus::no_counterexample_found;
        v.note   = "empty domain";
        return v;
      }
      if (N > 2 * kTraceCarrier) {
        v.status = CheckStatus::budget_exceeded;
        v.note   = "carrier too large for the value distribution";
        return v;
      }

      // exact distribution of the node value when the leaves are drawn
      // independently and uniformly from the domain
      std::vector<Element> pw(N);
      for (Element x = 0; x < N; ++x) {
        pw[x] = power(alg, x, rep);
      }
      std::vector<double> dist(N, 0.0);
      for (auto x : domain) {
        dist[x] = 1.0 / static_cast<double>(domain.size());
      }
      std::uint64_t work = 0;
      for (unsigned d = 1; d <= plan.shape.h; ++d) {
        std::vector<Element> support;
        for (Element x = 0; x < N; ++x) {
          if (dist[x] > 0) {
            support.push_back(x);
          }
        }
        std::vector<double> pairs(N * N, 0.0);
        for (auto x : support) {
          pairs[x * N + x] = dist[x];
        }
        std::vector<double> prods = dist;
        for (unsigned i = 1; i < n; ++i) {
          std::vector<double> next(N * N, 0.0);
          for (std::size_t c = 0; c < N * N; ++c) {
            if (pairs[c] == 0) {
              continue;
            }
            Element const a = static_cast<Element>(c / N), b = static_cast<Element>(c % N);
            for (auto x : support) {
              next[alg.mul(a, x) * N + alg.mul(x, b)] += pairs[c] * dist[x];
            }
            work += support.size();
          }
          pairs = std::move(next);
          std::vector<double> pn(N, 0.0);
          for (Element p = 0; p < N; ++p) {
            if (prods[p] == 0) {
              continue;
            }
            for (auto x : support) {
              pn[alg.mul(p, x)] += prods[p] * dist[x];
            }
          }
          prods = std::move(pn);
          if (work > options.budget) {
            v.status = CheckStatus::budget_exceeded;
            v.note   = "value distribution exceeds the budget";
            return v;
          }
        }
        std::vector<double> out(N, 0.0);
        for (std::size_t c = 0; c < N * N; ++c) {
          if (pairs[c] == 0) {
            continue;
          }
          Element const pl = static_cast<Element>(c / N), pr = static_cast<Element>(c % N);
          for (Element q = 0; q < N; ++q) {
            if (prods[q] != 0) {
              out[alg.mul(alg.mul(pl, q), pw[alg.mul(pr, q)])] += pairs[c] * prods[q];
            }
          }
        }
        dist = std::move(out);
      }

      std::vector<double> cdf(N);
      double              acc = 0;
      for (Element x = 0; x < N; ++x) {
        acc += dist[x];
        cdf[x] = acc;
      }
      for (std::uint64_t s = 0; s < samples; ++s) {
        auto const u = unit_interval(mix(seed, s)) * acc;
        auto       t = static_cast<Element>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        t            = std::min<Element>(t, static_cast<Element>(N - 1));
        while (dist[t] == 0 && t > 0) {
          --t;
        }
        auto const l = side_value(alg, plan.lhs, t, one);
        auto const r = side_value(alg, plan.rhs, t, one);
        if (l != r) {
          v.status      = CheckStatus::counterexample;
          v.evaluations = s + 1;
          v.lhs_value   = l;
          v.rhs_value   = r;
          ValueLevels const lv(alg, plan.shape, domain, true,
                               std::numeric_limits<std::uint64_t>::max());
          v.witness = rebuild_witness(lv, plan.shape, t);
          v.note    = vword_name(plan.shape) + " drew the value " + alg.label(t);
          return v;
        }
      }
      v.status      = CheckStatus::no_counterexample_found;
      v.evaluations = samples;
      return v;
    }

  }  // namespace detail

}  // namespace bglab
