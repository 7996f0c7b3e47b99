#pragma once

#include <string>
#include <vector>

#include "artinlab/arith.hpp"
#include "artinlab/census.hpp"

namespace artinlab {

struct CountReport {
    std::string label;
    u64 x = 0;
    u64 observed = 0;
    double predicted = 0.0;
    bool predicted_available = true;
    double ratio = 0.0;  // observed / predicted, 0 when unavailable
    /// Extra figures that some reports carry (e.g. the empirical density).
    double density = 0.0;
    std::vector<std::string> warnings;
};

/// Acceptance bands for the ratio checks.
struct HeuristicTolerances {
    double hooley = 0.05;
    double artin = 0.01;
    double twin = 0.15;
};

/// int_2^x dt / log t
double log_integral(double x);
/// int_a^b dt / log t, 2 <= a <= b
double log_integral(double a, double b);
/// int_2^x dt / log^2 t
double log2_integral(double x);

/// Observed #{p <= x : p = 1 (mod q), g^((p-1)/q) = 1 (mod p)} against li(x) / (q(q-1)).
CountReport hooley_count_check(i64 g, u64 q, u64 x, const CensusOptions& options = {});

/// prod_{p <= truncation} (1 - 1/(p(p-1)))
double artin_constant(u64 truncation = 1000000);

/// #{p <= x : g a primitive root} against artin_constant() * pi(x), the latter
/// only for squarefree g != 1 (mod 4).
CountReport artin_density(i64 g, u64 x, const CensusOptions& options = {});

struct SingularSeries {
    u64 truncation = 0;
    double value = 0.0;
    /// The partial product exceeds the full one by at most this factor.
    double overestimate_factor = 1.0;
};

/// (1/4) prod_{3 < p <= truncation} (1 - 3/(p-1)^2)
SingularSeries singular_series(u64 truncation);

/// Twin pairs p, p + 2 with p <= x and 2 a primitive root of both, against
/// singular_series(10^6) * int_2^x dt / log^2 t.
CountReport twin_pr_count(u64 x, const CensusOptions& options = {});

/// Primes p <= x, p not dividing g, with ord_p(g) <= L.
u64 order_tail_census(i64 g, u64 x, u64 L, const CensusOptions& options = {});

/// sum_{l <= L} omega(g^l - 1); every prime counted by order_tail_census divides some g^l - 1.
u64 order_tail_bound(i64 g, u64 L);

}  // namespace artinlab
