#pragma once

// Segmented prime windows and the map-reduce kernel every census runs on.
//
// [lo, hi) is cut into fixed-size windows. Each window is sieved independently
// against a shared table of base primes, the per-window results are stored in
// a slot indexed by the window, and the slots are merged in ascending window
// order. The OpenMP path and the serial reference path therefore produce the
// same result for any associative merge, whatever the thread count.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <omp.h>

#include "artinlab/arith.hpp"
#include "artinlab/parallel.hpp"

namespace artinlab {

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

struct CensusOptions {
    u64 window = u64{1} << 20;
    /// false selects the serial reference path.
    bool parallel = true;
    /// 0 means thread_count().
    int threads = 0;
    /// Called after each finished window; may be invoked from worker threads
    /// but never concurrently.
    ProgressFn progress;
};

class PrimeWindows {
public:
    PrimeWindows(u64 lo, u64 hi, u64 window);

    std::size_t size() const { return count_; }
    std::pair<u64, u64> bounds(std::size_t i) const;

    /// Primes of window i, ascending, appended to `out` after clearing it.
    void primes(std::size_t i, std::vector<u64>& out) const;

private:
    u64 lo_;
    u64 hi_;
    u64 window_;
    std::size_t count_;
    std::vector<u64> base_;
    bool use_sieve_;
};

namespace detail {
void report_progress(const CensusOptions& options, std::size_t done, std::size_t total);
}

/// map: (std::span<const u64> primes, u64 window_lo, u64 window_hi) -> T
/// merge: (T& accumulator, T&& window_result)
template <class T, class Map, class Merge>
T reduce_prime_windows(u64 lo, u64 hi, const CensusOptions& options, T init, Map map, Merge merge) {
    if (hi <= lo) return init;
    const PrimeWindows windows(lo, hi, options.window);
    const std::size_t n = windows.size();
    std::vector<T> partial(n, init);

    if (options.parallel) {
        const int threads = options.threads > 0 ? options.threads : thread_count();
        std::size_t done = 0;
#pragma omp parallel num_threads(threads)
        {
            std::vector<u64> buffer;
#pragma omp for schedule(dynamic, 1)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
                const auto idx = static_cast<std::size_t>(i);
                windows.primes(idx, buffer);
                const auto [wlo, whi] = windows.bounds(idx);
                partial[idx] = map(std::span<const u64>(buffer), wlo, whi);
                if (options.progress) {
#pragma omp critical(artinlab_progress)
                    detail::report_progress(options, ++done, n);
                }
            }
        }
    } else {
        std::vector<u64> buffer;
        for (std::size_t i = 0; i < n; ++i) {
            windows.primes(i, buffer);
            const auto [wlo, whi] = windows.bounds(i);
            partial[i] = map(std::span<const u64>(buffer), wlo, whi);
            detail::report_progress(options, i + 1, n);
        }
    }

    T acc = std::move(init);
    for (auto& p : partial) merge(acc, std::move(p));
    return acc;
}

/// Counts primes in [lo, hi) satisfying pred.
template <class Pred>
u64 count_primes_if(u64 lo, u64 hi, const CensusOptions& options, Pred pred) {
    return reduce_prime_windows(
        lo, hi, options, u64{0},
        [&](std::span<const u64> ps, u64, u64) {
            u64 c = 0;
            for (u64 p : ps)
                if (pred(p)) ++c;
            return c;
        },
        [](u64& acc, u64&& v) { acc += v; });
}

/// Primes in [lo, hi) satisfying pred, ascending.
template <class Pred>
std::vector<u64> collect_primes_if(u64 lo, u64 hi, const CensusOptions& options, Pred pred) {
    return reduce_prime_windows(
        lo, hi, options, std::vector<u64>{},
        [&](std::span<const u64> ps, u64, u64) {
            std::vector<u64> out;
            for (u64 p : ps)
                if (pred(p)) out.push_back(p);
            return out;
        },
        [](std::vector<u64>& acc, std::vector<u64>&& v) { acc.insert(acc.end(), v.begin(), v.end()); });
}

/// OpenMP counterpart of primes_in_range.
std::vector<u64> primes_in_range_parallel(u64 lo, u64 hi, const CensusOptions& options = {});

/// Streams primes of [lo, hi) in ascending order; stops early when visit returns false.
void for_each_prime(u64 lo, u64 hi, const std::function<bool(u64)>& visit, u64 window = u64{1} << 20);

}  // namespace artinlab
