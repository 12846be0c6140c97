#ifndef BGLAB_SRC_CHECK_COMMON_HPP_
#define BGLAB_SRC_CHECK_COMMON_HPP_

// Shared plumbing of the identity checkers; not installed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "bglab/checker.hpp"

namespace bglab::detail {

  inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
      return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  //! Scans [begin, end) and returns the first failing position in it.
  using RangeScan = std::function<std::optional<std::uint64_t>(
      std::uint64_t begin, std::uint64_t end, std::atomic<std::uint64_t> const& best)>;

  //! Least failing position in [0, total), computed by `workers` threads
  //! taking chunks in increasing order. Each worker owns one scanner made
  //! by `make_scan`. Exceptions from a worker are rethrown.
  inline std::optional<std::uint64_t> first_failure(std::uint64_t                     total,
                                                    unsigned                          workers,
                                                    std::function<RangeScan()> const& make_scan) {
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();
    if (total == 0) {
      return std::nullopt;
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 1024)));
    std::uint64_t const chunk = std::clamp<std::uint64_t>(total / (std::uint64_t(workers) * 64),
                                                          256, 1 << 16);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{none};
    std::exception_ptr         error;
    std::mutex                 error_mutex;

    auto body = [&] {
      try {
        auto scan = make_scan();
        while (true) {
          auto const c     = next.fetch_add(1);
          auto const begin = c * chunk;
          if (begin >= total || begin >= best.load()) {
            return;
          }
          auto const end = std::min(total, begin + chunk);
          if (auto hit = scan(begin, end, best)) {
            auto cur = best.load();
            while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        best.store(0);
      }
    };

    if (workers <= 1) {
      body();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < workers; ++i) {
        pool.emplace_back(body);
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
    auto const b = best.load();
    return b == none ? std::nullopt : std::optional<std::uint64_t>(b);
  }

  //! Resolved element set of every variable of `alphabet`.
  std::vector<ElementSet> resolve_domains(FiniteAlgebra const&         alg,
                                          std::vector<Variable> const& alphabet,
                                          CheckOptions const&          options);

  //! The single domain shared by every variable; throws PreconditionFailed
  //! when per-variable domains differ.
  ElementSet uniform_domain(FiniteAlgebra const& alg, CheckOptions const& options);

  //! Identity element, when the identity uses `1`; throws MissingIdentity.
  Element unit_for(FiniteAlgebra const& alg, Identity const& identity);

  //! Throws MissingStar when the identity needs a star the algebra lacks.
  void require_operations(FiniteAlgebra const& alg, Identity const& identity);

  //! A side of a block identity: the unit, or v[shape]^exponent.
  struct BlockSide {
    bool             unit = true;
    BlockWord::Shape shape;
    std::uint64_t    exponent = 1;
  };
  std::optional<BlockSide> block_side(Expr const& e);

  //! Sampled check of a block identity through the value distribution of
  //! its v-word.
  CheckVerdict sample_block_identity(FiniteAlgebra const& alg,
                                     Identity const&      identity,
                                     std::uint64_t        samples,
                                     std::uint64_t        seed,
                                     CheckOptions const&  options);

}  // namespace bglab::detail

#endif  // BGLAB_SRC_CHECK_COMMON_HPP_
