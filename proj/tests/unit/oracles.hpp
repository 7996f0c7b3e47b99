#pragma once
// Slow, obviously-correct reference implementations shared by the unit tests.

#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<bool> naive_sieve(u64 limit) {
    std::vector<bool> p(limit, true);
    for (u64 i = 0; i < limit && i < 2; ++i) p[i] = false;
    for (u64 i = 2; i * i < limit; ++i)
        if (p[i])
            for (u64 j = i * i; j < limit; j += i) p[j] = false;
    return p;
}

inline u64 rem(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 order(i64 g, u64 p) {
    const u64 a = rem(g, p);
    u64 v = a;
    for (u64 l = 1;; ++l) {
        if (v == 1) return l;
        v = v * a % p;
    }
}

// +1 / -1 / 0 by listing the squares mod p
inline int qr(i64 a, u64 p) {
    const u64 r = rem(a, p);
    if (r == 0) return 0;
    for (u64 x = 1; x < p; ++x)
        if (x * x % p == r) return 1;
    return -1;
}

}  // namespace oracle
