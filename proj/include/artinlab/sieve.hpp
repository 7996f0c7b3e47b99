#pragma once

// Maynard-Tao weights restricted to n = nu (mod W), and the weighted sums
//   S1      = sum w(n)
//   S2(m)   = sum chi_prime(n + h_m) w(n)
//   S2~(m)  = sum chi_{prime with g a primitive root}(n + h_m) w(n)
// over a window of n.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "artinlab/arith.hpp"
#include "artinlab/census.hpp"
#include "artinlab/polynomial.hpp"
#include "artinlab/tuple.hpp"

namespace artinlab {

struct SieveParams {
    u64 N = 0;
    double theta = 0.2;
    u64 R = 0;
    u64 W = 1;
    ResidueClass nu;
    const PolynomialF* F = nullptr;
};

/// floor(N^theta), robust to rounding when N^theta is an integer.
u64 sieve_level(u64 N, double theta);

/// Validates theta in (0, 1/4), R >= 2 and gcd(nu + h_i, W) = 1 for every offset.
SieveParams make_sieve_params(u64 N, double theta, const ResidueClass& nu, const PolynomialF& F, const TupleH& tuple);

struct LambdaTable {
    unsigned k = 0;
    u64 R = 0;
    u64 W = 1;
    std::map<std::vector<u64>, double> entries;

    /// 0 for absent tuples.
    double lookup(const std::vector<u64>& d) const;
};

struct LambdaOptions {
    /// 0 selects 10^4 for k <= 3 and 10^3 otherwise.
    u64 max_R = 0;
};

/// lambda_d = (prod mu(d_i) d_i) sum_{r : d_i | r_i} F(log r_1 / log R, ...) / prod phi(r_i),
/// the sum over r with prod r_i squarefree, coprime to W and below R.
LambdaTable lambda_weights(const SieveParams& params, const TupleH& tuple, LambdaOptions options = {});

/// Entries whose key is not squarefree, not coprime to W or not below R.
std::size_t lambda_support_violations(const LambdaTable& table);

/// (sum_{d_i | n + h_i} lambda_d)^2
double weight_w(i64 n, const LambdaTable& table, const TupleH& tuple);

struct SieveSums {
    u64 terms = 0;  // number of n visited
    double S1 = 0.0;
    double S2 = 0.0;
    double S2_tilde = 0.0;
    std::vector<double> S2_m;
    std::vector<double> S2_tilde_m;
    bool expectations_defined = false;
    double EX = 0.0;
    double EY = 0.0;
    double predicted_S1 = 0.0;
    double predicted_S2 = 0.0;
};

struct SieveOptions {
    CensusOptions census;
    /// When set, every prime n + h_m must escape P_q for all q <= presieve_z;
    /// a failure raises InvariantViolation.
    std::optional<u64> presieve_z;
    /// Budget on the number of n visited.
    u64 max_terms = u64{1} << 26;
    /// Number of n per parallel chunk.
    u64 chunk = 4096;
};

/// Sums over n = nu (mod W) with lo <= n < hi.
SieveSums compute_sums(i64 g, const SieveParams& params, const TupleH& tuple, const LambdaTable& table, u64 lo, u64 hi,
                       const SieveOptions& options = {});

/// (S2 / S1, (S2 - S2~) / S1); DegenerateDistribution when S1 = 0.
std::pair<double, double> weighted_expectations(const SieveSums& sums);

}  // namespace artinlab
