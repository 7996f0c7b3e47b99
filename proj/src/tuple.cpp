#include "artinlab/tuple.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "artinlab/errors.hpp"

namespace artinlab {

bool TupleH::contains(i64 h) const { return std::binary_search(offsets.begin(), offsets.end(), h); }

bool is_admissible(std::span<const i64> offsets) {
    const u64 k = offsets.size();
    for (u64 p : primes_below(k + 1)) {
        std::vector<bool> hit(p, false);
        u64 covered = 0;
        for (i64 h : offsets) {
            const u64 r = reduce_mod(h, p);
            if (!hit[r]) {
                hit[r] = true;
                ++covered;
            }
        }
        if (covered == p) return false;
    }
    return true;
}

TupleH make_tuple(std::vector<i64> offsets) {
    if (offsets.empty()) throw std::invalid_argument("tuple must have at least one offset");
    std::sort(offsets.begin(), offsets.end());
    if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
        throw std::invalid_argument("tuple offsets must be distinct");
    if (!is_admissible(offsets)) throw std::invalid_argument("tuple is not admissible");
    return TupleH{std::move(offsets), std::nullopt};
}

std::optional<u64> default_threshold(u64 k) {
    u128 v = static_cast<u128>(9) * k * k;
    for (u64 i = 0; i < k; ++i) {
        v *= 4;
        if (v > std::numeric_limits<u64>::max()) return std::nullopt;
    }
    return static_cast<u64>(v);
}

TupleH paper_tuple(u64 k, std::optional<u64> K_override) {
    if (k == 0) throw std::invalid_argument("paper_tuple: k must be at least 1");
    // K >= k already makes every difference divisible by each p <= k
    if (K_override && *K_override < k)
        throw std::invalid_argument("paper_tuple: K override must be at least k");
    const auto natural = default_threshold(k);
    u64 K;
    if (K_override)
        K = natural ? std::min(*natural, *K_override) : *K_override;
    else if (natural)
        K = *natural;
    else
        throw ResourceError("paper_tuple: 9k^2 4^k overflows; supply a K override");

    TupleH t;
    t.K = K;
    if (k == 1) {
        t.offsets = {0};
        return t;
    }
    const u128 limit = static_cast<u128>(std::numeric_limits<i64>::max());
    u128 fact = 1;
    for (u64 i = 2; i <= K; ++i) {
        fact *= i;
        if (fact * (k - 1) > limit)
            throw ResourceError("paper_tuple: (k-1) K! overflows for K = " + std::to_string(K) +
                                "; supply a smaller K override");
    }
    for (u64 i = 0; i < k; ++i) t.offsets.push_back(static_cast<i64>(static_cast<u128>(i) * fact));
    return t;
}

u64 largest_difference_prime(const TupleH& tuple) {
    u64 best = 1;
    for (std::size_t i = 0; i < tuple.k(); ++i)
        for (std::size_t j = i + 1; j < tuple.k(); ++j) {
            const u64 d = static_cast<u64>(tuple.offsets[j] - tuple.offsets[i]);
            const auto ps = distinct_prime_factors(d);
            if (!ps.empty()) best = std::max(best, ps.back());
        }
    return best;
}

}  // namespace artinlab
