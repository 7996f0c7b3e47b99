#include "artinlab/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

int g_thread_override = 0;

// Sieves the odd numbers of [a, b) with the odd base primes. Every base prime
// p with p * p < b must be present.
void sieve_window(u64 a, u64 b, const std::vector<u64>& base, std::vector<u64>& out) {
    out.clear();
    if (b <= a) return;
    if (a <= 2 && 2 < b) out.push_back(2);
    const u64 first = std::max<u64>(3, a | 1);
    if (first >= b) return;
    const u64 count = (b - first + 1) / 2;
    std::vector<unsigned char> marks(count, 1);
    for (u64 p : base) {
        if (p == 2) continue;
        const u128 pp = static_cast<u128>(p) * p;
        if (pp >= b) break;
        u64 start = pp >= first ? static_cast<u64>(pp) : ((first + p - 1) / p) * p;
        if ((start & 1) == 0) start += p;
        for (u64 m = start; m < b; m += 2 * p) marks[(m - first) / 2] = 0;
    }
    for (u64 i = 0; i < count; ++i)
        if (marks[i]) out.push_back(first + 2 * i);
}

}  // namespace

int thread_count() {
    if (g_thread_override > 0) return g_thread_override;
    if (const char* env = std::getenv("ARTINLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1, omp_get_max_threads());
}

void set_thread_count(int n) { g_thread_override = n > 0 ? n : 0; }

PrimeWindows::PrimeWindows(u64 lo, u64 hi, u64 window) : lo_(lo), hi_(std::max(lo, hi)), window_(window) {
    if (window_ == 0) throw std::invalid_argument("census window must be positive");
    count_ = static_cast<std::size_t>((hi_ - lo_ + window_ - 1) / window_);
    const u64 root = hi_ > 0 ? isqrt(hi_ - 1) : 0;
    // Narrow ranges far out are cheaper to test number by number than to sieve.
    use_sieve_ = root <= (u64{1} << 27) && root <= 64 * (hi_ - lo_) + 1'000'000;
    if (use_sieve_) base_ = primes_below(root + 1);
}

std::pair<u64, u64> PrimeWindows::bounds(std::size_t i) const {
    const u64 a = lo_ + static_cast<u64>(i) * window_;
    return {a, std::min(hi_, a + window_)};
}

void PrimeWindows::primes(std::size_t i, std::vector<u64>& out) const {
    const auto [a, b] = bounds(i);
    if (use_sieve_) {
        sieve_window(a, b, base_, out);
        return;
    }
    out.clear();
    for (u64 m = a; m < b; ++m)
        if (is_prime(m)) out.push_back(m);
}

namespace detail {
void report_progress(const CensusOptions& options, std::size_t done, std::size_t total) {
    if (options.progress) options.progress(done, total);
}
}  // namespace detail

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    CensusOptions serial;
    serial.parallel = false;
    return collect_primes_if(lo, hi, serial, [](u64) { return true; });
}

std::vector<u64> primes_in_range_parallel(u64 lo, u64 hi, const CensusOptions& options) {
    CensusOptions o = options;
    o.parallel = true;
    return collect_primes_if(lo, hi, o, [](u64) { return true; });
}

void for_each_prime(u64 lo, u64 hi, const std::function<bool(u64)>& visit, u64 window) {
    if (hi <= lo) return;
    const PrimeWindows windows(lo, hi, window);
    std::vector<u64> buffer;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        windows.primes(i, buffer);
        for (u64 p : buffer)
            if (!visit(p)) return;
    }
}

}  // namespace artinlab
