#include "artinlab/heuristics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "artinlab/errors.hpp"
#include "artinlab/primroot.hpp"

namespace artinlab {

namespace {

// int_a^b e^u / u^power du after t = e^u
double log_power_integral(double a, double b, int power) {
    if (!(a >= 2.0)) throw std::invalid_argument("log integral: lower limit must be at least 2");
    if (b < a) throw std::invalid_argument("log integral: upper limit below lower limit");
    if (b == a) return 0.0;
    auto f = [power](double u) { return std::exp(u) / std::pow(u, power); };
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, std::log(a), std::log(b), 20, 1e-14,
                                                                         &error);
}

void finish(CountReport& r) { r.ratio = r.predicted_available && r.predicted > 0 ? r.observed / r.predicted : 0.0; }

double bits(i64 g) { return std::log2(std::fabs(static_cast<double>(g))); }

}  // namespace

double log_integral(double x) { return log_power_integral(2.0, x, 1); }
double log_integral(double a, double b) { return log_power_integral(a, b, 1); }
double log2_integral(double x) { return log_power_integral(2.0, x, 2); }

CountReport hooley_count_check(i64 g, u64 q, u64 x, const CensusOptions& options) {
    if (!is_prime(q)) throw std::invalid_argument("hooley_count_check: q must be prime");
    if (x < 2) throw std::invalid_argument("hooley_count_check: x must be at least 2");
    CountReport r;
    r.label = "hooley g=" + std::to_string(g) + " q=" + std::to_string(q);
    r.x = x;
    r.observed = count_primes_if(2, x + 1, options, [&](u64 p) {
        if (reduce_mod(g, p) == 0) return false;
        return in_Pq0(g, p, q);
    });
    r.predicted = log_integral(static_cast<double>(x)) / static_cast<double>(q * (q - 1));
    if (r.predicted < 30.0) r.warnings.push_back("insufficient scale: predicted count below 30");
    if (static_cast<double>(x) < 100.0 * static_cast<double>(q) * static_cast<double>(q))
        r.warnings.push_back("insufficient scale: x below 100 q^2");
    finish(r);
    return r;
}

double artin_constant(u64 truncation) {
    double c = 1.0;
    for (u64 p : primes_in_range(2, truncation + 1)) {
        const double pd = static_cast<double>(p);
        c *= 1.0 - 1.0 / (pd * (pd - 1.0));
    }
    return c;
}

CountReport artin_density(i64 g, u64 x, const CensusOptions& options) {
    if (g == -1) throw std::invalid_argument("artin_density: g = -1 is excluded");
    if (x < 2) throw std::invalid_argument("artin_density: x must be at least 2");
    CountReport r;
    r.label = "artin g=" + std::to_string(g);
    r.x = x;
    const auto counts = reduce_prime_windows(
        2, x + 1, options, std::pair<u64, u64>{0, 0},
        [&](std::span<const u64> ps, u64, u64) {
            std::pair<u64, u64> c{ps.size(), 0};
            for (u64 p : ps)
                if (is_primitive_root(g, p)) ++c.second;
            return c;
        },
        [](std::pair<u64, u64>& acc, std::pair<u64, u64>&& v) {
            acc.first += v.first;
            acc.second += v.second;
        });
    r.observed = counts.second;
    r.density = counts.first ? static_cast<double>(counts.second) / static_cast<double>(counts.first) : 0.0;
    const u64 ag = g < 0 ? static_cast<u64>(-g) : static_cast<u64>(g);
    const bool classical = g != 0 && is_squarefree(ag) && reduce_mod(g, 4) != 1 && ag != 1;
    if (classical) {
        r.predicted = artin_constant() * static_cast<double>(counts.first);
    } else {
        r.predicted_available = false;
        r.warnings.push_back("predicted density unavailable: g is not squarefree with g != 1 (mod 4)");
    }
    finish(r);
    return r;
}

SingularSeries singular_series(u64 truncation) {
    if (truncation < 5) throw std::invalid_argument("singular_series: truncation must be at least 5");
    SingularSeries s;
    s.truncation = truncation;
    double v = 0.25;
    for (u64 p : primes_in_range(5, truncation + 1)) {
        const double pm = static_cast<double>(p) - 1.0;
        v *= 1.0 - 3.0 / (pm * pm);
    }
    s.value = v;
    // sum_{p > T} 3/(p-1)^2 <= sum_{n >= T} 3/n^2 <= 3/(T-1)
    s.overestimate_factor = std::exp(3.0 / (static_cast<double>(truncation) - 1.0));
    return s;
}

CountReport twin_pr_count(u64 x, const CensusOptions& options) {
    if (x < 2) throw std::invalid_argument("twin_pr_count: x must be at least 2");
    CountReport r;
    r.label = "twin primitive-root pairs g=2";
    r.x = x;
    r.observed = count_primes_if(2, x + 1, options, [](u64 p) {
        return is_prime(p + 2) && is_primitive_root(2, p) && is_primitive_root(2, p + 2);
    });
    r.predicted = singular_series(1000000).value * log2_integral(static_cast<double>(std::max<u64>(x, 2)));
    if (x < 100) r.warnings.push_back("insufficient scale: x below 100");
    finish(r);
    return r;
}

u64 order_tail_census(i64 g, u64 x, u64 L, const CensusOptions& options) {
    if (L < 1) throw std::invalid_argument("order_tail_census: L must be at least 1");
    if (g == 0 || g == 1 || g == -1) throw std::invalid_argument("order_tail_census: g must satisfy |g| >= 2");
    if (static_cast<double>(L) * bits(g) > 4096.0)
        throw ResourceError("order_tail_census: L log2|g| exceeds 4096");
    return count_primes_if(2, x + 1, options, [&](u64 p) {
        const u64 a = reduce_mod(g, p);
        if (a == 0) return false;
        u64 v = 1;
        for (u64 l = 1; l <= L; ++l) {
            v = mul_mod(v, a, p);
            if (v == 1) return true;
        }
        return false;
    });
}

u64 order_tail_bound(i64 g, u64 L) {
    if (g == 0 || g == 1 || g == -1) throw std::invalid_argument("order_tail_bound: g must satisfy |g| >= 2");
    if (static_cast<double>(L) * bits(g) > 62.0)
        throw ResourceError("order_tail_bound: g^L - 1 does not fit in 64 bits");
    u64 total = 0;
    i128 power = 1;
    for (u64 l = 1; l <= L; ++l) {
        power *= g;
        const i128 v = power - 1;
        const u64 m = static_cast<u64>(v < 0 ? -v : v);
        total += distinct_prime_factors(m).size();
    }
    return total;
}

}  // namespace artinlab
