#pragma once

// Exact integer and modular arithmetic on 64-bit values. Products are formed
// in 128-bit intermediates, so every operation is exact for inputs below 2^63.

#include <cstdint>
#include <span>
#include <vector>

namespace artinlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing. n = 1 has no factors.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    std::vector<u64> primes() const;
    u64 value() const;
};

/// 0 <= residue < modulus.
struct ResidueClass {
    u64 residue = 0;
    u64 modulus = 1;

    ResidueClass() = default;
    ResidueClass(u64 residue, u64 modulus);
    /// Reduces any signed integer into the class modulo `modulus`.
    static ResidueClass of(i64 value, u64 modulus);

    bool contains(i64 value) const;
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

/// Least nonnegative residue of a signed value.
u64 reduce_mod(i64 a, u64 m);

/// base^exponent mod modulus, in [0, modulus). Throws std::invalid_argument for modulus 0.
u64 mod_pow(i64 base, u64 exponent, u64 modulus);

/// Deterministic for every 64-bit input (Miller-Rabin with a fixed witness set).
bool is_prime(u64 n);
bool is_prime(i64 n);

/// Trial division to 10^6, then Brent's rho with a fixed restart schedule.
Factorization factorize(u64 n);

/// Distinct prime divisors, ascending.
std::vector<u64> distinct_prime_factors(u64 n);

/// Least l >= 1 with g^l = 1 (mod p). Throws std::invalid_argument when p | g.
u64 multiplicative_order(i64 g, u64 p);

/// Kronecker symbol (a/n), the extension of the Jacobi symbol to every integer n.
int kronecker(i64 a, i64 n);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, u64 n);

/// Solves a system of congruences with arbitrary (possibly non-coprime) moduli.
/// Throws IncompatibleCongruences naming a clashing pair, ResourceError when the
/// lcm of the moduli leaves the signed 64-bit range.
ResidueClass crt_solve(std::span<const ResidueClass> congruences);

/// Primes in [lo, hi), ascending. Segmented; working memory is one segment.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Every prime below `limit` (simple sieve, used for small tables).
std::vector<u64> primes_below(u64 limit);

u64 gcd(u64 a, u64 b);
u64 lcm_checked(u64 a, u64 b);
u64 isqrt(u64 n);

/// prod_{p <= z} p; ResourceError when it overflows.
u64 primorial(u64 z);

/// Moebius function (factorization based).
int moebius(u64 n);
u64 euler_phi(u64 n);
bool is_squarefree(u64 n);

/// Table of mu, phi and the least prime factor on [0, limit).
struct ArithmeticTable {
    explicit ArithmeticTable(u64 limit);

    u64 limit() const { return static_cast<u64>(mu.size()); }

    std::vector<signed char> mu;
    std::vector<u64> phi;
    std::vector<std::uint32_t> least_factor;
};

}  // namespace artinlab
