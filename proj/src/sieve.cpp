#include "artinlab/sieve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "artinlab/errors.hpp"
#include "artinlab/mkopt.hpp"
#include "artinlab/primroot.hpp"

namespace artinlab {

namespace {

// Neumaier's compensated sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    void add(const CompensatedSum& o) {
        add(o.sum);
        add(o.comp);
    }
    double value() const { return sum + comp; }
};

std::vector<u64> sieving_primes(u64 R, u64 W) {
    std::vector<u64> out;
    for (u64 p : primes_below(R))
        if (W % p != 0) out.push_back(p);
    return out;
}

// Primes p < R with p | m and p not dividing W.
std::vector<u64> small_prime_divisors(u64 m, const std::vector<u64>& primes) {
    std::vector<u64> out;
    for (u64 p : primes) {
        if (m % p == 0) out.push_back(p);
    }
    return out;
}

struct Partial {
    u64 terms = 0;
    CompensatedSum s1;
    std::vector<CompensatedSum> s2, s2t;
    bool violation = false;
    std::string message;
};

}  // namespace

u64 sieve_level(u64 N, double theta) {
    if (N < 2) throw std::invalid_argument("sieve_level: N must be at least 2");
    const long double v = std::pow(static_cast<long double>(N), static_cast<long double>(theta));
    return static_cast<u64>(std::floor(v * (1.0L + 1e-12L)));
}

SieveParams make_sieve_params(u64 N, double theta, const ResidueClass& nu, const PolynomialF& F, const TupleH& tuple) {
    if (!(theta > 0.0 && theta < 0.25)) throw std::invalid_argument("sieve: theta must lie in (0, 1/4)");
    SieveParams p;
    p.N = N;
    p.theta = theta;
    p.R = sieve_level(N, theta);
    if (p.R < 2) throw std::invalid_argument("sieve: R = floor(N^theta) must be at least 2");
    p.W = nu.modulus;
    p.nu = nu;
    p.F = &F;
    if (F.k() != tuple.k()) throw std::invalid_argument("sieve: F has the wrong number of variables");
    for (i64 h : tuple.offsets)
        if (gcd((nu.residue + reduce_mod(h, p.W)) % p.W, p.W) != 1)
            throw std::invalid_argument("sieve: nu + h_i shares a factor with W");
    return p;
}

double LambdaTable::lookup(const std::vector<u64>& d) const {
    auto it = entries.find(d);
    return it == entries.end() ? 0.0 : it->second;
}

LambdaTable lambda_weights(const SieveParams& params, const TupleH& tuple, LambdaOptions options) {
    if (params.F == nullptr) throw std::invalid_argument("lambda_weights: F is not set");
    if (params.R < 2) throw std::invalid_argument("lambda_weights: R must be at least 2");
    const unsigned k = static_cast<unsigned>(tuple.k());
    const u64 cap = options.max_R ? options.max_R : (k <= 3 ? 10000 : 1000);
    if (params.R > cap)
        throw ResourceError("lambda_weights: R = " + std::to_string(params.R) + " exceeds the enumeration cap " +
                            std::to_string(cap));

    LambdaTable table;
    table.k = k;
    table.R = params.R;
    table.W = params.W;

    const PolynomialF& F = *params.F;
    F.compile();
    const double logR = std::log(static_cast<double>(params.R));
    const ArithmeticTable arith(params.R);
    std::map<std::vector<u64>, CompensatedSum> acc;

    std::vector<u64> primes;
    std::vector<unsigned> slot;
    std::vector<u64> r(k), d(k);
    std::vector<double> t(k);
    for (u64 n = 1; n < params.R; ++n) {
        if (arith.mu[n] == 0 || gcd(n, params.W) != 1) continue;
        primes.clear();
        for (u64 m = n; m > 1; m /= arith.least_factor[m]) primes.push_back(arith.least_factor[m]);
        const std::size_t w = primes.size();
        slot.assign(w, 0);
        // every assignment of the primes of n to the k slots
        for (;;) {
            std::fill(r.begin(), r.end(), 1);
            for (std::size_t j = 0; j < w; ++j) r[slot[j]] *= primes[j];
            double phi = 1.0;
            for (unsigned i = 0; i < k; ++i) {
                t[i] = std::log(static_cast<double>(r[i])) / logR;
                phi *= static_cast<double>(arith.phi[r[i]]);
            }
            const double y = F(t) / phi;
            if (y != 0.0) {
                for (u64 mask = 0; mask < (u64{1} << w); ++mask) {
                    std::fill(d.begin(), d.end(), 1);
                    for (std::size_t j = 0; j < w; ++j)
                        if (mask >> j & 1) d[slot[j]] *= primes[j];
                    acc[d].add(y);
                }
            }
            std::size_t j = 0;
            while (j < w && ++slot[j] == k) slot[j++] = 0;
            if (j == w) break;
        }
    }

    for (const auto& [key, sum] : acc) {
        double scale = 1.0;
        for (u64 di : key) {
            const double v = static_cast<double>(di);
            scale *= arith.mu[di] < 0 ? -v : v;
        }
        const double lambda = scale * sum.value();
        if (lambda != 0.0) table.entries.emplace(key, lambda);
    }
    return table;
}

std::size_t lambda_support_violations(const LambdaTable& table) {
    std::size_t bad = 0;
    for (const auto& [d, value] : table.entries) {
        u128 prod = 1;
        bool ok = d.size() == table.k;
        for (u64 di : d) {
            prod *= di;
            if (prod >= table.R) ok = false;
            if (!ok) break;
        }
        if (ok) {
            const u64 P = static_cast<u64>(prod);
            ok = is_squarefree(P) && gcd(P, table.W) == 1;
        }
        if (!ok) ++bad;
    }
    return bad;
}

namespace {

double divisor_sum(const LambdaTable& table, const std::vector<std::vector<u64>>& divs) {
    const unsigned k = table.k;
    std::vector<u64> d(k, 1);
    CompensatedSum total;
    // slot i, prime index j within slot i, running product
    auto rec = [&](auto&& self, unsigned i, std::size_t j, u64 prod) -> void {
        if (i == k) {
            total.add(table.lookup(d));
            return;
        }
        if (j == divs[i].size()) {
            self(self, i + 1, 0, prod);
            return;
        }
        self(self, i, j + 1, prod);
        const u64 p = divs[i][j];
        if (static_cast<u128>(prod) * p < table.R) {
            d[i] *= p;
            self(self, i, j + 1, prod * p);
            d[i] /= p;
        }
    };
    rec(rec, 0, 0, 1);
    return total.value();
}

double weight_with_primes(i64 n, const LambdaTable& table, const TupleH& tuple, const std::vector<u64>& primes) {
    std::vector<std::vector<u64>> divs(table.k);
    for (unsigned i = 0; i < table.k; ++i) {
        const i64 m = n + tuple.offsets[i];
        if (m <= 0) throw std::invalid_argument("weight_w: n + h_i must be positive");
        divs[i] = small_prime_divisors(static_cast<u64>(m), primes);
    }
    const double s = divisor_sum(table, divs);
    return s * s;
}

}  // namespace

double weight_w(i64 n, const LambdaTable& table, const TupleH& tuple) {
    if (tuple.k() != table.k) throw std::invalid_argument("weight_w: table built for a different k");
    return weight_with_primes(n, table, tuple, sieving_primes(table.R, table.W));
}

SieveSums compute_sums(i64 g, const SieveParams& params, const TupleH& tuple, const LambdaTable& table, u64 lo, u64 hi,
                       const SieveOptions& options) {
    const unsigned k = static_cast<unsigned>(tuple.k());
    if (table.k != k) throw std::invalid_argument("compute_sums: table built for a different k");
    if (table.W != params.W) throw std::invalid_argument("compute_sums: table built for a different W");
    if (hi > (u64{1} << 63)) throw std::invalid_argument("compute_sums: window end above 2^63");
    const u64 W = params.W;

    SieveSums out;
    out.S2_m.assign(k, 0.0);
    out.S2_tilde_m.assign(k, 0.0);

    u64 count = 0, n0 = 0;
    if (hi > lo) {
        n0 = lo + (params.nu.residue + W - lo % W) % W;
        if (n0 < hi) count = (hi - 1 - n0) / W + 1;
    }
    if (count > options.max_terms)
        throw ResourceError("compute_sums: " + std::to_string(count) + " terms exceed the budget of " +
                            std::to_string(options.max_terms));
    for (i64 h : tuple.offsets)
        if (static_cast<u128>(hi) + static_cast<u128>(h) >= (u128{1} << 63))
            throw std::invalid_argument("compute_sums: n + h_i leaves the 63-bit range");

    const auto primes = sieving_primes(table.R, W);
    const u64 chunk = std::max<u64>(options.chunk, 1);
    const std::size_t chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
    std::vector<Partial> parts(chunks);

    auto run_chunk = [&](std::size_t c) {
        Partial& part = parts[c];
        part.s2.assign(k, {});
        part.s2t.assign(k, {});
        const u64 first = c * chunk;
        const u64 last = std::min<u64>(count, first + chunk);
        for (u64 idx = first; idx < last; ++idx) {
            const u64 n = n0 + idx * W;
            const double w = weight_with_primes(static_cast<i64>(n), table, tuple, primes);
            ++part.terms;
            part.s1.add(w);
            for (unsigned m = 0; m < k; ++m) {
                const u64 p = n + static_cast<u64>(tuple.offsets[m]);
                if (!is_prime(p)) continue;
                part.s2[m].add(w);
                bool pr;
                if (options.presieve_z) {
                    const auto cls = classify(g, p);
                    if (cls.status == PrStatus::InPq && cls.q <= *options.presieve_z && !part.violation) {
                        part.violation = true;
                        part.message = "compute_sums: prime " + std::to_string(p) + " lies in P_" +
                                       std::to_string(cls.q) + " despite pre-sieving";
                    }
                    pr = cls.status == PrStatus::PrimitiveRoot;
                } else {
                    pr = is_primitive_root(g, p);
                }
                if (pr) part.s2t[m].add(w);
            }
        }
    };

    if (options.census.parallel) {
        const int threads = options.census.threads > 0 ? options.census.threads : thread_count();
        std::size_t done = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
            run_chunk(static_cast<std::size_t>(c));
            if (options.census.progress) {
#pragma omp critical(artinlab_progress)
                detail::report_progress(options.census, ++done, chunks);
            }
        }
    } else {
        for (std::size_t c = 0; c < chunks; ++c) {
            run_chunk(c);
            detail::report_progress(options.census, c + 1, chunks);
        }
    }

    CompensatedSum s1;
    std::vector<CompensatedSum> s2(k), s2t(k);
    for (const auto& part : parts) {
        if (part.violation) throw InvariantViolation(part.message);
        out.terms += part.terms;
        s1.add(part.s1);
        for (unsigned m = 0; m < k; ++m) {
            s2[m].add(part.s2[m]);
            s2t[m].add(part.s2t[m]);
        }
    }
    out.S1 = s1.value();
    CompensatedSum total2, total2t;
    for (unsigned m = 0; m < k; ++m) {
        out.S2_m[m] = s2[m].value();
        out.S2_tilde_m[m] = s2t[m].value();
        total2.add(out.S2_m[m]);
        total2t.add(out.S2_tilde_m[m]);
    }
    out.S2 = total2.value();
    out.S2_tilde = total2t.value();

    if (out.S1 > 0.0) {
        const auto [ex, ey] = weighted_expectations(out);
        out.EX = ex;
        out.EY = ey;
        out.expectations_defined = true;
    }

    if (params.F != nullptr && hi > lo && params.N >= 2) {
        const PolynomialF& F = *params.F;
        const double Ik = i_form(F, F).get_d();
        double J = 0.0;
        for (unsigned m = 0; m < k; ++m) J += j_form(F, F, m).get_d();
        const double phiW = static_cast<double>(euler_phi(W));
        const double Wd = static_cast<double>(W);
        const double length = static_cast<double>(hi - lo);
        const double logR = std::log(static_cast<double>(params.R));
        const double base = std::pow(phiW, k) / std::pow(Wd, k + 1) * length;
        out.predicted_S1 = base * std::pow(logR, k) * Ik;
        out.predicted_S2 = base / std::log(static_cast<double>(params.N)) * std::pow(logR, k + 1) * J;
    }
    return out;
}

std::pair<double, double> weighted_expectations(const SieveSums& sums) {
    if (!(sums.S1 > 0.0)) throw DegenerateDistribution("weighted_expectations: S1 = 0");
    return {sums.S2 / sums.S1, (sums.S2 - sums.S2_tilde) / sums.S1};
}

}  // namespace artinlab
