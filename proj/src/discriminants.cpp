#include "artinlab/discriminants.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "artinlab/errors.hpp"
#include "artinlab/quadchar.hpp"

namespace artinlab {

namespace {

u64 abs_u(i64 v) { return v < 0 ? static_cast<u64>(0) - static_cast<u64>(v) : static_cast<u64>(v); }

// sign_pattern_solutions builds a table of size |D_1|; beyond this a direct scan is used.
constexpr u64 kTableLimit = u64{1} << 24;
constexpr u64 kScanLimit = u64{1} << 32;

std::vector<u64> odd_primes_up_to(u64 z) {
    std::vector<u64> out;
    for (u64 p : primes_below(z + 1))
        if (p != 2) out.push_back(p);
    return out;
}

}  // namespace

std::string to_string(DiscCase c) { return c == DiscCase::CaseI ? "CaseI" : "CaseII"; }

i64 DiscFactorization::rest() const {
    i64 r = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) r *= factors[i];
    return r;
}

i64 squarefree_kernel(i64 g) {
    if (g == 0) throw std::invalid_argument("squarefree_kernel: g must be nonzero");
    i64 s = 1;
    for (const auto& pp : factorize(abs_u(g)).factors)
        if (pp.exponent % 2 == 1) s *= static_cast<i64>(pp.prime);
    return g < 0 ? -s : s;
}

i64 fundamental_discriminant(i64 g) {
    if (g == 0) throw std::invalid_argument("fundamental_discriminant: g must be nonzero");
    if (g == -1) throw std::invalid_argument("fundamental_discriminant: g = -1 is excluded");
    const i64 s = squarefree_kernel(g);
    if (s == 1) throw std::invalid_argument("fundamental_discriminant: g is a perfect square");
    if (reduce_mod(s, 4) == 1) return s;
    if (std::llabs(s) > std::numeric_limits<i64>::max() / 4)
        throw ResourceError("fundamental_discriminant: 4s overflows");
    return 4 * s;
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1) return false;
    if (reduce_mod(d, 4) == 1) return is_squarefree(abs_u(d));
    if (reduce_mod(d, 4) != 0) return false;
    const i64 m = d / 4;
    const u64 r = reduce_mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(abs_u(m));
}

bool is_prime_discriminant(i64 d) {
    if (d == -4 || d == 8 || d == -8) return true;
    const u64 p = abs_u(d);
    if (p < 3 || !is_prime(p)) return false;
    return p % 4 == 1 ? d > 0 : d < 0;
}

DiscFactorization prime_discriminant_factorization(i64 g0, u64 K) {
    if (!is_fundamental_discriminant(g0))
        throw std::invalid_argument("prime_discriminant_factorization: " + std::to_string(g0) +
                                    " is not a fundamental discriminant");
    if (K == 0) throw std::invalid_argument("prime_discriminant_factorization: K must be positive");

    std::vector<i64> odd;
    i64 odd_product = 1;
    for (u64 p : distinct_prime_factors(abs_u(g0))) {
        if (p == 2) continue;
        const i64 D = p % 4 == 1 ? static_cast<i64>(p) : -static_cast<i64>(p);
        odd.push_back(D);
        odd_product *= D;
    }
    const i64 two_part = g0 / odd_product;  // 1, -4, 8 or -8

    auto by_modulus = [](i64 a, i64 b) { return std::llabs(a) < std::llabs(b); };
    std::sort(odd.begin(), odd.end(), by_modulus);

    DiscFactorization out;
    out.g0 = g0;
    out.K = K;

    const bool large = !odd.empty() && abs_u(odd.back()) > K;
    std::vector<i64> tail;
    i64 lead;
    if (large) {
        out.case_tag = DiscCase::CaseII;
        lead = odd.back();
        odd.pop_back();
        tail = odd;
        if (two_part != 1) tail.push_back(two_part);
    } else if (two_part != 1) {
        out.case_tag = abs_u(two_part) > K ? DiscCase::CaseII : DiscCase::CaseI;
        lead = two_part;
        tail = odd;
    } else {
        out.case_tag = DiscCase::CaseI;
        lead = odd.back();
        odd.pop_back();
        tail = odd;
    }
    std::stable_sort(tail.begin(), tail.end(), by_modulus);
    out.factors.push_back(lead);
    out.factors.insert(out.factors.end(), tail.begin(), tail.end());
    return out;
}

u64 build_W(i64 g0, u64 z) {
    if (z < 2) throw std::invalid_argument("build_W: z must be at least 2");
    return lcm_checked(abs_u(g0), primorial(z));
}

NuChecks check_nu_conditions(u64 nu, u64 W, i64 g0, const TupleH& tuple, u64 z) {
    NuChecks c;
    c.coprime_to_W = true;
    c.shifted_coprime = true;
    c.kronecker_minus_one = true;
    const auto odd = odd_primes_up_to(z);
    for (i64 h : tuple.offsets) {
        const u64 v = (nu + reduce_mod(h, W)) % W;
        if (gcd(v, W) != 1) c.coprime_to_W = false;
        for (u64 p : odd)
            if ((v % p + p - 1) % p == 0) c.shifted_coprime = false;
        // kronecker(g0, .) has period |g0|, which divides W
        if (kronecker(g0, static_cast<i64>(v)) != -1) c.kronecker_minus_one = false;
    }
    return c;
}

NuChecks verify_nu(const NuCertificate& cert) {
    NuChecks c = check_nu_conditions(cert.nu.residue, cert.nu.modulus, cert.g0, cert.tuple, cert.z);
    std::set<u64> used;
    for (const auto& cc : cert.composite_classes) {
        const bool in_range = 2 * cc.prime >= cert.z && cc.prime < cert.z && is_prime(cc.prime);
        const bool fresh = used.insert(cc.prime).second;
        const bool divides = cert.nu.modulus % cc.prime == 0 &&
                             (cert.nu.residue + reduce_mod(cc.h, cc.prime)) % cc.prime == 0;
        const bool outside = !cert.tuple.contains(cc.h) && cc.h > cert.tuple.front() && cc.h < cert.tuple.back();
        if (!(in_range && fresh && divides && outside)) c.composite_classes_ok = false;
    }
    return c;
}

NuCertificate choose_nu(i64 g, const TupleH& tuple, u64 K, u64 z, NuOptions options) {
    if (tuple.offsets.empty()) throw std::invalid_argument("choose_nu: empty tuple");
    if (!is_admissible(tuple.offsets)) throw std::invalid_argument("choose_nu: tuple is not admissible");
    if (K <= 8 || K <= 2 * tuple.k()) throw std::invalid_argument("choose_nu: K must exceed 8 and 2k");
    if (z < 2) throw std::invalid_argument("choose_nu: z must be at least 2");

    NuCertificate cert;
    cert.g = g;
    cert.z = z;
    cert.tuple = tuple;
    cert.g0 = fundamental_discriminant(g);
    cert.factorization = prime_discriminant_factorization(cert.g0, K);
    const auto& fac = cert.factorization;
    const u64 W = build_W(cert.g0, z);
    const i64 D1 = fac.leading();
    const u64 m1 = abs_u(D1);
    const u64 M1 = lcm_checked(W / m1, 2);
    const i64 h1 = tuple.front();

    // Composite classes: every h of the tuple's parity strictly between h_1 and
    // h_k and outside the tuple gets its own prime p in [z/2, z) with nu = -h (mod p).
    std::vector<ResidueClass> fixed{ResidueClass::of(h1 + 1, 2)};
    std::set<u64> fixed_primes;
    if (options.exclude_non_tuple && tuple.k() > 1) {
        std::vector<u64> pool;
        for (u64 p : odd_primes_up_to(z > 0 ? z - 1 : 0))
            if (2 * p >= z && abs_u(D1) % p != 0) pool.push_back(p);
        const u128 span = static_cast<u128>(tuple.back() - h1);
        if (span / 2 > pool.size() + tuple.k())
            throw ResourceError("choose_nu: too few primes in [z/2, z) for the non-tuple offsets");
        for (i64 h = h1 + 2; h < tuple.back(); h += 2) {
            if (tuple.contains(h)) continue;
            bool assigned = false;
            for (u64 p : pool) {
                if (fixed_primes.count(p)) continue;
                bool ok = true;
                for (i64 hi : tuple.offsets) {
                    const u64 diff = reduce_mod(h - hi, p);
                    if (diff == 0 || diff == p - 1) ok = false;  // h = h_i or h = h_i - 1
                }
                if (!ok) continue;
                fixed_primes.insert(p);
                fixed.push_back(ResidueClass::of(-h, p));
                cert.composite_classes.push_back({p, h});
                assigned = true;
                break;
            }
            if (!assigned)
                throw ResourceError("choose_nu: no prime in [z/2, z) left for offset h = " + std::to_string(h));
        }
    }

    // nu_1 mod M1: scan the lattice of the fixed congruences and test the
    // avoidance conditions at the other odd primes of M1.
    const ResidueClass base = crt_solve(fixed);
    struct Avoid {
        u64 p;
        std::vector<bool> bad;
    };
    std::vector<Avoid> avoid;
    for (u64 p : distinct_prime_factors(M1)) {
        if (p == 2 || fixed_primes.count(p) || m1 % p == 0) continue;
        Avoid a{p, std::vector<bool>(p, false)};
        for (i64 h : tuple.offsets) {
            a.bad[reduce_mod(-h, p)] = true;
            if (p <= z) a.bad[reduce_mod(1 - h, p)] = true;
        }
        if (std::all_of(a.bad.begin(), a.bad.end(), [](bool b) { return b; }))
            throw ConstructionFailure("choose_nu: every class mod " + std::to_string(p) +
                                      " meets some nu + h_i or nu + h_i - 1");
        avoid.push_back(std::move(a));
    }
    const u64 steps = M1 / base.modulus;
    if (steps > kScanLimit) throw ResourceError("choose_nu: nu_1 search space too large");
    bool found1 = false;
    for (u64 j = 0; j < steps && !found1; ++j) {
        const u64 cand = base.residue + j * base.modulus;
        bool ok = true;
        for (const auto& a : avoid)
            if (a.bad[cand % a.p]) {
                ok = false;
                break;
            }
        if (ok) {
            cert.nu1 = cand;
            found1 = true;
        }
    }
    if (!found1) throw ConstructionFailure("choose_nu: no admissible nu_1");

    // Required signs of kronecker(D_1, nu_2 + h_i): with g0 = D_1 * rest,
    // (g0 / n) = (D_1 / n)(rest / n) and (rest / n) depends on n mod M1 only.
    const i64 rest = fac.rest();
    std::vector<int> target(tuple.k());
    for (std::size_t i = 0; i < tuple.k(); ++i) {
        const i64 n = static_cast<i64>((cert.nu1 + reduce_mod(tuple.offsets[i], M1)) % M1);
        const int r = kronecker(rest, n);
        if (r == 0) throw InvariantViolation("choose_nu: nu_1 + h_i shares a factor with D_2 ... D_l");
        target[i] = -r;
    }

    const bool odd_lead = m1 % 2 == 1;
    auto nu2_ok = [&](u64 v) {
        if (!odd_lead && v % 2 != cert.nu1 % 2) return false;
        for (std::size_t i = 0; i < tuple.k(); ++i) {
            const u64 n = (v + reduce_mod(tuple.offsets[i], m1)) % m1;
            if (odd_lead && m1 <= z && n == 1 % m1) return false;
            if (kronecker(D1, static_cast<i64>(n)) != target[i]) return false;
        }
        return true;
    };

    bool found2 = false;
    auto incongruent = [&] {
        std::set<u64> seen;
        for (i64 h : tuple.offsets)
            if (!seen.insert(reduce_mod(h, m1)).second) return false;
        return true;
    };
    if (fac.case_tag == DiscCase::CaseII && odd_lead && m1 <= kTableLimit && incongruent()) {
        SignPattern pattern(tuple.offsets, target);
        // kronecker(D_1, n) = (n / |D_1|) for a prime discriminant D_1
        for (u64 v : sign_pattern_solutions(m1, pattern))
            if (nu2_ok(v)) {
                cert.nu2 = v;
                found2 = true;
                break;
            }
    } else {
        if (m1 > kScanLimit) throw ResourceError("choose_nu: |D_1| too large to scan");
        for (u64 v = 0; v < m1 && !found2; ++v)
            if (nu2_ok(v)) {
                cert.nu2 = v;
                found2 = true;
            }
    }
    if (!found2) throw ConstructionFailure("choose_nu: no class mod |D_1| = " + std::to_string(m1) + " meets the sign conditions");

    const ResidueClass parts[] = {ResidueClass(cert.nu1, M1), ResidueClass(cert.nu2, m1)};
    cert.nu = crt_solve(parts);
    if (cert.nu.modulus != W) throw InvariantViolation("choose_nu: glued modulus differs from W");
    cert.checks = verify_nu(cert);
    if (!cert.checks.all()) throw InvariantViolation("choose_nu: constructed nu fails verification");
    return cert;
}

}  // namespace artinlab
