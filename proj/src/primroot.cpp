#include "artinlab/primroot.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

bool excluded(i64 g, u64 p, const PrimrootOptions& options) {
    if (!options.exclude_small) return false;
    return p == 2 || reduce_mod(g, p) == 0;
}

}  // namespace

std::string to_string(PrStatus s) {
    switch (s) {
        case PrStatus::DividesG: return "DividesG";
        case PrStatus::PrimitiveRoot: return "PrimitiveRoot";
        case PrStatus::InPq: return "InPq";
    }
    return "?";
}

bool is_primitive_root(i64 g, u64 p) {
    if (p == 2) return reduce_mod(g, 2) == 1;
    const u64 a = reduce_mod(g, p);
    if (a == 0) return false;
    for (u64 q : distinct_prime_factors(p - 1))
        if (mod_pow(static_cast<i64>(a), (p - 1) / q, p) == 1) return false;
    return true;
}

bool in_Pq0(i64 g, u64 p, u64 q) {
    const u64 a = reduce_mod(g, p);
    if (a == 0) throw std::invalid_argument("in_Pq0: p divides g");
    if (q == 0 || (p - 1) % q != 0) return false;
    return mod_pow(static_cast<i64>(a), (p - 1) / q, p) == 1;
}

QClassification classify(i64 g, u64 p) {
    QClassification c;
    c.p = p;
    if (reduce_mod(g, p) == 0) {
        c.status = PrStatus::DividesG;
        return c;
    }
    if (p == 2) {
        c.status = PrStatus::PrimitiveRoot;
        return c;
    }
    for (u64 q : distinct_prime_factors(p - 1))
        if (in_Pq0(g, p, q)) {
            c.status = PrStatus::InPq;
            c.q = q;
            return c;
        }
    c.status = PrStatus::PrimitiveRoot;
    return c;
}

std::vector<u64> enumerate_pr_primes(i64 g, u64 lo, u64 hi, const PrimrootOptions& options) {
    return collect_primes_if(lo, hi, options.census,
                             [&](u64 p) { return !excluded(g, p, options) && is_primitive_root(g, p); });
}

u64 count_pr_primes(i64 g, u64 lo, u64 hi, const PrimrootOptions& options) {
    return count_primes_if(lo, hi, options.census,
                           [&](u64 p) { return !excluded(g, p, options) && is_primitive_root(g, p); });
}

GapReport gap_stats(i64 g, u64 x, unsigned m, const PrimrootOptions& options) {
    if (m < 2) throw std::invalid_argument("gap_stats: m must be at least 2");
    if (x < 10) throw std::invalid_argument("gap_stats: x must be at least 10");
    if (x == std::numeric_limits<u64>::max()) throw std::invalid_argument("gap_stats: x too large");
    const auto qs = enumerate_pr_primes(g, 2, x + 1, options);
    GapReport r;
    r.g = g;
    r.x = x;
    r.m = m;
    r.primes_found = qs.size();
    if (qs.size() < m)
        throw InsufficientData("gap_stats: found " + std::to_string(qs.size()) + " primes with " +
                               std::to_string(g) + " as primitive root up to " + std::to_string(x) +
                               ", need " + std::to_string(m));
    r.min_gap = std::numeric_limits<u64>::max();
    for (std::size_t n = 0; n + m - 1 < qs.size(); ++n) {
        const u64 span = qs[n + m - 1] - qs[n];
        ++r.histogram[span];
        if (span < r.min_gap) {
            r.min_gap = span;
            r.attained_at = qs[n];
        }
    }
    return r;
}

std::optional<std::vector<u64>> consecutive_run(i64 g, u64 x, unsigned m, const PrimrootOptions& options) {
    if (m < 1) throw std::invalid_argument("consecutive_run: m must be at least 1");
    if (x == std::numeric_limits<u64>::max()) throw std::invalid_argument("consecutive_run: x too large");
    std::vector<u64> run;
    bool done = false;
    for_each_prime(
        2, x + 1,
        [&](u64 p) {
            if (!excluded(g, p, options) && is_primitive_root(g, p)) {
                run.push_back(p);
                if (run.size() == m) {
                    done = true;
                    return false;
                }
            } else {
                run.clear();
            }
            return true;
        },
        options.census.window);
    if (!done) return std::nullopt;
    return run;
}

}  // namespace artinlab
