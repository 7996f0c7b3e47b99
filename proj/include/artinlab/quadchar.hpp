#pragma once

// Quadratic-character machinery over F_p: exact character sums of monic
// polynomials and exact counts of residue/nonresidue sign patterns among the
// shifts n + h_i. Everything here is computed by enumeration, so these
// functions serve as the oracle the inequalities are tested against.

#include <cstdint>
#include <span>
#include <vector>

#include "artinlab/arith.hpp"

namespace artinlab {

/// Coefficients in ascending order: c_0 + c_1 T + ... + c_d T^d.
using Polynomial = std::vector<i64>;

struct SignPattern {
    std::vector<i64> offsets;
    std::vector<int> signs;  // each +1 or -1

    SignPattern() = default;
    SignPattern(std::vector<i64> offsets, std::vector<int> signs);

    std::size_t size() const { return offsets.size(); }
};

constexpr unsigned kMaxCharSumDegree = 8;

/// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, u64 p);

/// sum_{a mod p} (f(a)/p) by enumeration. f must be monic (leading coefficient
/// exactly 1) of degree 1 <= d <= 8 with d < p; p must be an odd prime.
i64 char_sum(std::span<const i64> coefficients, u64 p);

/// True when f mod p is the square of a polynomial over F_p.
bool is_square_mod_p(std::span<const i64> coefficients, u64 p);

/// (d - 1) sqrt(p)
double weil_bound(unsigned degree, u64 p);

/// 1 iff (n + h_i / p) = eps_i for every i. Throws ExcludedPoint when some
/// n + h_i = 0 (mod p).
int legendre_indicator(i64 n, u64 p, const SignPattern& pattern);

/// (1/2^k) prod (1 + eps_i (n + h_i / p)), evaluated without the exclusion check.
double indicator_product_formula(i64 n, u64 p, const SignPattern& pattern);

/// Number of n mod p solving (n + h_i / p) = eps_i for all i. Offsets must be
/// pairwise incongruent mod p.
u64 count_sign_pattern_solutions(u64 p, const SignPattern& pattern);

/// The solutions themselves, ascending in [0, p).
std::vector<u64> sign_pattern_solutions(u64 p, const SignPattern& pattern);

/// p / 2^k - (k - 1) sqrt(p) - k
double sign_pattern_lower_bound(u64 p, std::size_t k);

/// Counts for all 2^k sign patterns at once; index bit i set means eps_i = -1.
std::vector<u64> count_all_sign_patterns(u64 p, std::span<const i64> offsets);

/// One row per (prime, degree) of the Weil-bound sweep over every monic
/// polynomial with coefficients in [0, p).
struct WeilSweepRow {
    u64 p = 0;
    unsigned degree = 0;
    u64 polynomials = 0;     // monic polynomials covered
    u64 squares = 0;         // excluded because square mod p
    i64 max_abs_sum = 0;     // over non-square polynomials
    double bound = 0.0;
    u64 violations = 0;
};

/// Sweep over all monic f of the given degree mod p. For p <= literal_cutoff,
/// or when p divides the degree, each polynomial is evaluated directly (degree
/// may reach p here). Otherwise polynomials are grouped into translation orbits
/// f(T) -> f(T + s), which share the same character sum and squareness, and
/// each orbit representative (T^{d-1} coefficient zero) is evaluated exactly
/// by correlating its value histogram against the character table.
WeilSweepRow weil_sweep(u64 p, unsigned degree, u64 literal_cutoff = 50);

/// Character sums of every depressed polynomial T^d + c_{d-2}T^{d-2} + ... + c_0
/// in lexicographic order of (c_{d-2}, ..., c_0); used by weil_sweep.
std::vector<i64> depressed_char_sums(u64 p, unsigned degree);

}  // namespace artinlab
