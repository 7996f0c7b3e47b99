#include "artinlab/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

constexpr u64 kTrialBound = 1'000'000;

const std::vector<u64>& trial_primes() {
    static const std::vector<u64> table = primes_below(kTrialBound + 1);
    return table;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = mod_pow(static_cast<i64>(a % n), d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

u64 rho_step(u64 x, u64 c, u64 n) { return (mul_mod(x, x, n) + c) % n; }

// Brent's cycle finding. Returns a nontrivial factor of the odd composite n,
// or n when the given increment c fails.
u64 brent_rho(u64 n, u64 c) {
    constexpr u64 kBatch = 128;
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = rho_step(y, c, n);
        for (u64 k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const u64 lim = std::min(kBatch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = rho_step(y, c, n);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        if (r > (u64{1} << 40)) break;
    }
    if (g == n) {
        // Backtrack one step at a time from the last saved point.
        do {
            ys = rho_step(ys, c, n);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    // Deterministic restart schedule: c = 1, 2, 3, ...
    for (u64 c = 1;; ++c) {
        const u64 d = brent_rho(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
    }
}

}  // namespace

std::vector<u64> Factorization::primes() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& f : factors)
        for (unsigned e = 0; e < f.exponent; ++e) v *= f.prime;
    return v;
}

ResidueClass::ResidueClass(u64 residue_, u64 modulus_) : residue(residue_), modulus(modulus_) {
    if (modulus == 0) throw std::invalid_argument("residue class modulus must be positive");
    if (residue >= modulus) throw std::invalid_argument("residue must lie in [0, modulus)");
}

ResidueClass ResidueClass::of(i64 value, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("residue class modulus must be positive");
    return ResidueClass(reduce_mod(value, modulus), modulus);
}

bool ResidueClass::contains(i64 value) const { return reduce_mod(value, modulus) == residue; }

u64 reduce_mod(i64 a, u64 m) {
    const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

u64 mod_pow(i64 base, u64 exponent, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (modulus == 1) return 0;
    u64 b = reduce_mod(base, modulus);
    u64 result = 1;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kSmall) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    // The first twelve primes are a witness set for every n < 3.3 * 10^24.
    for (u64 a : kSmall)
        if (miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

bool is_prime(i64 n) { return n > 1 && is_prime(static_cast<u64>(n)); }

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 rest = n;
    for (u64 p : trial_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<u64> big;
        split_into(rest, big);
        std::sort(big.begin(), big.end());
        for (u64 p : big) {
            if (!f.factors.empty() && f.factors.back().prime == p)
                ++f.factors.back().exponent;
            else
                f.factors.push_back({p, 1});
        }
    }
    return f;
}

std::vector<u64> distinct_prime_factors(u64 n) { return factorize(n).primes(); }

u64 multiplicative_order(i64 g, u64 p) {
    if (p < 2) throw std::invalid_argument("multiplicative_order: modulus must be prime");
    if (reduce_mod(g, p) == 0) throw std::invalid_argument("multiplicative_order: p divides g");
    u64 order = p - 1;
    for (const auto& [q, e] : factorize(p - 1).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (mod_pow(g, order / q, p) != 1) break;
            order /= q;
        }
    }
    return order;
}

int jacobi(i64 a_signed, u64 n) {
    if (n == 0 || (n & 1) == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
    u64 a = reduce_mod(a_signed, n);
    int t = 1;
    while (a != 0) {
        const int z = std::countr_zero(a);
        a >>= z;
        if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        const u64 r = n % a;
        n = a;
        a = r;
    }
    return n == 1 ? t : 0;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) {
        if (a == 0) throw std::invalid_argument("kronecker: (0/0) is undefined");
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    u64 m;
    if (n < 0) {
        m = static_cast<u64>(-(static_cast<i128>(n)));
        if (a < 0) result = -result;
    } else {
        m = static_cast<u64>(n);
    }
    const int v = std::countr_zero(m);
    if (v > 0) {
        if ((a & 1) == 0) return 0;
        if (v & 1) {
            const u64 r = reduce_mod(a, 8);
            if (r == 3 || r == 5) result = -result;
        }
        m >>= v;
    }
    return result * jacobi(a, m);
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_checked(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    const u128 l = static_cast<u128>(a / std::gcd(a, b)) * b;
    if (l > static_cast<u128>(std::numeric_limits<i64>::max()))
        throw ResourceError("lcm exceeds the signed 64-bit range");
    return static_cast<u64>(l);
}

ResidueClass crt_solve(std::span<const ResidueClass> congruences) {
    if (congruences.empty()) throw std::invalid_argument("crt_solve: empty system");
    auto pair_compatible = [](const ResidueClass& x, const ResidueClass& y) {
        const u64 g = std::gcd(x.modulus, y.modulus);
        return x.residue % g == y.residue % g;
    };
    u64 r = congruences[0].residue;
    u64 m = congruences[0].modulus;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        const u64 r2 = congruences[i].residue;
        const u64 m2 = congruences[i].modulus;
        const u64 g = std::gcd(m, m2);
        if (r % g != r2 % g) {
            // A system is solvable iff it is pairwise solvable, so some j < i clashes with i.
            for (std::size_t j = 0; j < i; ++j) {
                if (!pair_compatible(congruences[j], congruences[i]))
                    throw IncompatibleCongruences(
                        j, i,
                        "incompatible congruences #" + std::to_string(j) + " (" +
                            std::to_string(congruences[j].residue) + " mod " +
                            std::to_string(congruences[j].modulus) + ") and #" + std::to_string(i) + " (" +
                            std::to_string(r2) + " mod " + std::to_string(m2) + ")");
            }
            throw InvariantViolation("crt_solve: global clash without a pairwise witness");
        }
        const u64 l = lcm_checked(m, m2);
        // r + m * t = r2 (mod m2)  =>  (m/g) t = (r2 - r)/g (mod m2/g)
        const u64 m2g = m2 / g;
        u64 t = 0;
        if (m2g > 1) {
            const u64 diff = reduce_mod(static_cast<i64>((static_cast<i128>(r2) - static_cast<i128>(r)) /
                                                         static_cast<i128>(g)),
                                        m2g);
            // inverse of (m/g) modulo m2g
            i128 old_r = static_cast<i128>((m / g) % m2g), rr = static_cast<i128>(m2g);
            i128 old_s = 1, s = 0;
            while (rr != 0) {
                const i128 q = old_r / rr;
                std::swap(old_r, rr);
                rr -= q * old_r;
                std::swap(old_s, s);
                s -= q * old_s;
            }
            const u64 inv = static_cast<u64>(((old_s % static_cast<i128>(m2g)) + static_cast<i128>(m2g)) %
                                             static_cast<i128>(m2g));
            t = mul_mod(diff, inv, m2g);
        }
        r = static_cast<u64>((static_cast<u128>(m) * t + r) % l);
        m = l;
    }
    return ResidueClass(r, m);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<u64> primes_below(u64 limit) {
    std::vector<u64> out;
    if (limit <= 2) return out;
    std::vector<bool> composite(limit, false);
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

u64 primorial(u64 z) {
    u64 w = 1;
    for (u64 p : primes_below(z + 1)) {
        if (static_cast<u128>(w) * p > static_cast<u128>(std::numeric_limits<i64>::max()))
            throw ResourceError("primorial(" + std::to_string(z) + ") exceeds the signed 64-bit range");
        w *= p;
    }
    return w;
}

int moebius(u64 n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (const auto& f : factorize(n).factors) {
        if (f.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    u64 phi = n;
    for (u64 p : factorize(n).primes()) phi = phi / p * (p - 1);
    return phi;
}

bool is_squarefree(u64 n) { return n != 0 && moebius(n) != 0; }

ArithmeticTable::ArithmeticTable(u64 limit) : mu(limit, 0), phi(limit, 0), least_factor(limit, 0) {
    if (limit > (u64{1} << 32)) throw ResourceError("arithmetic table limit too large");
    std::vector<std::uint32_t> primes;
    if (limit > 1) {
        mu[1] = 1;
        phi[1] = 1;
    }
    // Linear sieve.
    for (u64 i = 2; i < limit; ++i) {
        if (least_factor[i] == 0) {
            least_factor[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
            phi[i] = i - 1;
        }
        for (std::uint32_t p : primes) {
            const u64 ip = i * p;
            if (p > least_factor[i] || ip >= limit) break;
            least_factor[ip] = p;
            if (i % p == 0) {
                mu[ip] = 0;
                phi[ip] = phi[i] * p;
            } else {
                mu[ip] = static_cast<signed char>(-mu[i]);
                phi[ip] = phi[i] * (p - 1);
            }
        }
    }
}

}  // namespace artinlab
