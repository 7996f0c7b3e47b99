#pragma once

// Pre-sieving residue class construction. Given g, a tuple H and a sieving
// level z, builds nu mod W = lcm(g0, prod_{p <= z} p) such that for every i
//   (i)   nu + h_i is coprime to W,
//   (ii)  nu + h_i - 1 is coprime to every odd prime p <= z,
//   (iii) the Kronecker symbol (g0 / nu + h_i) is -1,
// so that the primes the sieve detects are never quadratic residues of g and
// never 1 mod a small odd prime. The sieving level z stands in for the
// triple logarithm of the sieve scale, which is below 2 for any feasible N.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinlab/arith.hpp"
#include "artinlab/tuple.hpp"

namespace artinlab {

enum class DiscCase { CaseI, CaseII };

std::string to_string(DiscCase c);

struct DiscFactorization {
    i64 g0 = 0;
    /// Coprime prime discriminants D_1, ..., D_l with D_1 chosen by the ordering rules.
    std::vector<i64> factors;
    u64 K = 0;
    DiscCase case_tag = DiscCase::CaseI;

    i64 leading() const { return factors.front(); }
    /// D_2 ... D_l (1 when l = 1).
    i64 rest() const;
};

struct NuChecks {
    bool coprime_to_W = false;          // (i)
    bool shifted_coprime = false;       // (ii)
    bool kronecker_minus_one = false;   // (iii)
    bool composite_classes_ok = true;   // every p^(h) divides nu + h

    bool all() const { return coprime_to_W && shifted_coprime && kronecker_minus_one && composite_classes_ok; }
};

struct CompositeClass {
    u64 prime;
    i64 h;
};

struct NuCertificate {
    ResidueClass nu;  // modulus is W
    u64 z = 0;
    i64 g = 0;
    i64 g0 = 0;
    TupleH tuple;
    DiscFactorization factorization;
    u64 nu1 = 0;      // the class mod [W / |D_1|, 2]
    u64 nu2 = 0;      // the class mod |D_1|
    NuChecks checks;
    std::vector<CompositeClass> composite_classes;

    u64 W() const { return nu.modulus; }
};

/// Squarefree kernel with sign: g = s * f^2, s squarefree.
i64 squarefree_kernel(i64 g);

/// Discriminant of Q(sqrt g): s if s = 1 (mod 4), else 4s. Rejects 0, -1 and perfect squares.
i64 fundamental_discriminant(i64 g);

bool is_fundamental_discriminant(i64 d);

/// True for -4, 8, -8 and (-1)^((p-1)/2) p with p an odd prime.
bool is_prime_discriminant(i64 d);

/// Factors g0 into coprime prime discriminants and orders them:
///   some |D_i| > K               -> D_1 is the largest such odd prime discriminant (CaseII)
///   all |D_i| <= K, g0 even       -> D_1 is the 2-part in {-4, 8, -8}
///   all |D_i| <= K, g0 odd, l > 1 -> D_1 is the factor of largest modulus (>= 5)
/// Remaining factors follow by increasing |D|.
DiscFactorization prime_discriminant_factorization(i64 g0, u64 K);

/// lcm(|g0|, prod_{p <= z} p)
u64 build_W(i64 g0, u64 z);

struct NuOptions {
    bool exclude_non_tuple = false;
};

/// Pre-sieving construction: nu_1 avoids
/// -h_i modulo each odd prime of W not dividing D_1, and 1 - h_i too when p <= z (and, when
/// exclude_non_tuple is set, sits in -h mod a distinct prime p^(h) in [z/2, z)
/// for every non-tuple h of the tuple's parity in [h_1, h_k]); nu_2 is the
/// least class mod |D_1| meeting (i'), (ii'), (iii'); nu glues both by CRT.
NuCertificate choose_nu(i64 g, const TupleH& tuple, u64 K, u64 z, NuOptions options = {});

/// Recomputes every condition from the certificate's fields.
NuChecks verify_nu(const NuCertificate& cert);

/// Checks (i)-(iii) for a bare candidate nu mod W.
NuChecks check_nu_conditions(u64 nu, u64 W, i64 g0, const TupleH& tuple, u64 z);

}  // namespace artinlab
