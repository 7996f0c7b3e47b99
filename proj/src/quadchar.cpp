#include "artinlab/quadchar.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

void require_odd_prime(u64 p, const char* who) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

void require_pattern(const SignPattern& pattern) {
    if (pattern.offsets.empty()) throw std::invalid_argument("sign pattern must have k >= 1");
    if (pattern.offsets.size() != pattern.signs.size())
        throw std::invalid_argument("sign pattern: offsets and signs differ in length");
    for (int s : pattern.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("sign pattern: signs must be +1 or -1");
}

void require_incongruent(u64 p, std::span<const i64> offsets) {
    std::vector<bool> seen(p, false);
    for (i64 h : offsets) {
        const u64 r = reduce_mod(h, p);
        if (seen[r]) throw std::invalid_argument("offsets must be pairwise incongruent mod p");
        seen[r] = true;
    }
}

// chi[t] for t in [0, p): 0, +1 or -1
std::vector<int> character_table(u64 p) {
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (u64 a = 1; a <= p / 2; ++a) chi[mul_mod(a, a, p)] = 1;
    return chi;
}

u64 eval_mod(std::span<const u64> coeffs, u64 a, u64 p) {
    u64 v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = (mul_mod(v, a, p) + coeffs[i]) % p;
    return v;
}

std::vector<u64> reduce_coefficients(std::span<const i64> c, u64 p) {
    std::vector<u64> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = reduce_mod(c[i], p);
    return out;
}

}  // namespace

SignPattern::SignPattern(std::vector<i64> offsets_, std::vector<int> signs_)
    : offsets(std::move(offsets_)), signs(std::move(signs_)) {
    require_pattern(*this);
}

int legendre(i64 a, u64 p) { return jacobi(a, p); }

i64 char_sum(std::span<const i64> coefficients, u64 p) {
    require_odd_prime(p, "char_sum");
    if (coefficients.size() < 2) throw std::invalid_argument("char_sum: degree must be at least 1");
    if (coefficients.back() != 1) throw std::invalid_argument("char_sum: polynomial must be monic");
    const u64 d = coefficients.size() - 1;
    if (d > kMaxCharSumDegree) throw std::invalid_argument("char_sum: degree above 8");
    if (d >= p) throw std::invalid_argument("char_sum: degree must be below p");
    const auto chi = character_table(p);
    const auto c = reduce_coefficients(coefficients, p);
    i64 sum = 0;
    for (u64 a = 0; a < p; ++a) sum += chi[eval_mod(c, a, p)];
    return sum;
}

bool is_square_mod_p(std::span<const i64> coefficients, u64 p) {
    require_odd_prime(p, "is_square_mod_p");
    auto f = reduce_coefficients(coefficients, p);
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return true;  // 0 = 0^2
    const std::size_t d = f.size() - 1;
    if (d % 2 == 1) return false;
    // f = lead * monic; lead must itself be a square.
    const u64 lead = f.back();
    if (legendre(static_cast<i64>(lead), p) != 1) return false;
    const u64 lead_inv = mod_pow(static_cast<i64>(lead), p - 2, p);
    for (auto& c : f) c = mul_mod(c, lead_inv, p);
    // Monic square root g of degree m is fixed by the top m + 1 coefficients of f.
    const std::size_t m = d / 2;
    std::vector<u64> g(m + 1, 0);
    g[m] = 1;
    const u64 inv2 = (p + 1) / 2;
    for (std::size_t j = 1; j <= m; ++j) {
        // coefficient of T^{d-j} in g^2 is 2 g_m g_{m-j} + sum_{0<i<j} g_{m-i} g_{m-j+i}
        u64 s = 0;
        for (std::size_t i = 1; i < j; ++i) s = (s + mul_mod(g[m - i], g[m - j + i], p)) % p;
        g[m - j] = mul_mod((f[d - j] + p - s) % p, inv2, p);
    }
    for (std::size_t e = 0; e <= d; ++e) {
        u64 s = 0;
        for (std::size_t i = (e > m ? e - m : 0); i <= std::min(e, m); ++i) s = (s + mul_mod(g[i], g[e - i], p)) % p;
        if (s != f[e]) return false;
    }
    return true;
}

double weil_bound(unsigned degree, u64 p) {
    return (static_cast<double>(degree) - 1.0) * std::sqrt(static_cast<double>(p));
}

int legendre_indicator(i64 n, u64 p, const SignPattern& pattern) {
    require_odd_prime(p, "legendre_indicator");
    require_pattern(pattern);
    int all = 1;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const int chi = legendre(static_cast<i64>(reduce_mod(n, p) + reduce_mod(pattern.offsets[i], p)), p);
        if (chi == 0)
            throw ExcludedPoint("legendre_indicator: n + h_" + std::to_string(i + 1) + " vanishes mod " +
                                std::to_string(p));
        if (chi != pattern.signs[i]) all = 0;
    }
    return all;
}

double indicator_product_formula(i64 n, u64 p, const SignPattern& pattern) {
    require_pattern(pattern);
    double prod = 1.0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const int chi = legendre(static_cast<i64>(reduce_mod(n, p) + reduce_mod(pattern.offsets[i], p)), p);
        prod *= 1.0 + pattern.signs[i] * chi;
    }
    return std::ldexp(prod, -static_cast<int>(pattern.size()));
}

std::vector<u64> sign_pattern_solutions(u64 p, const SignPattern& pattern) {
    require_odd_prime(p, "sign_pattern_solutions");
    require_pattern(pattern);
    require_incongruent(p, pattern.offsets);
    const auto chi = character_table(p);
    std::vector<u64> h(pattern.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = reduce_mod(pattern.offsets[i], p);
    std::vector<u64> out;
    for (u64 n = 0; n < p; ++n) {
        bool ok = true;
        for (std::size_t i = 0; i < h.size() && ok; ++i) ok = chi[(n + h[i]) % p] == pattern.signs[i];
        if (ok) out.push_back(n);
    }
    return out;
}

u64 count_sign_pattern_solutions(u64 p, const SignPattern& pattern) {
    return sign_pattern_solutions(p, pattern).size();
}

double sign_pattern_lower_bound(u64 p, std::size_t k) {
    const double kp = static_cast<double>(k);
    return static_cast<double>(p) / std::ldexp(1.0, static_cast<int>(k)) - (kp - 1.0) * std::sqrt(static_cast<double>(p)) -
           kp;
}

std::vector<u64> count_all_sign_patterns(u64 p, std::span<const i64> offsets) {
    require_odd_prime(p, "count_all_sign_patterns");
    if (offsets.empty() || offsets.size() > 20) throw std::invalid_argument("count_all_sign_patterns: 1 <= k <= 20");
    require_incongruent(p, offsets);
    const auto chi = character_table(p);
    std::vector<u64> h(offsets.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = reduce_mod(offsets[i], p);
    std::vector<u64> counts(std::size_t{1} << h.size(), 0);
    for (u64 n = 0; n < p; ++n) {
        std::size_t index = 0;
        bool excluded = false;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const int c = chi[(n + h[i]) % p];
            if (c == 0) {
                excluded = true;
                break;
            }
            if (c < 0) index |= std::size_t{1} << i;
        }
        if (!excluded) ++counts[index];
    }
    return counts;
}

std::vector<i64> depressed_char_sums(u64 p, unsigned degree) {
    require_odd_prime(p, "depressed_char_sums");
    if (degree < 2 || degree > 4) throw std::invalid_argument("depressed_char_sums: degree must be 2, 3 or 4");
    const auto chi = character_table(p);
    // chi2[t] = chi[t mod p] for t in [0, 2p)
    std::vector<std::int32_t> chi2(2 * p);
    for (u64 t = 0; t < 2 * p; ++t) chi2[t] = chi[t % p];

    const unsigned middle = degree - 2;  // coefficients c_1 .. c_{d-2}
    u64 classes = 1;
    for (unsigned i = 0; i < middle; ++i) classes *= p;

    std::vector<i64> sums;
    sums.reserve(classes * p);
    std::vector<std::int32_t> hist(p);
    std::vector<u64> mid(middle, 0);
    for (u64 cls = 0; cls < classes; ++cls) {
        // mid[0] is the most significant (highest-degree) middle coefficient.
        u64 rest = cls;
        for (unsigned i = middle; i-- > 0;) {
            mid[i] = rest % p;
            rest /= p;
        }
        std::fill(hist.begin(), hist.end(), 0);
        for (u64 a = 0; a < p; ++a) {
            // Horner over [1, 0, mid..., c]; the constant c enters through the correlation.
            u64 v = a % p;
            for (unsigned i = 0; i < middle; ++i) v = (mul_mod(v, a, p) + mid[i]) % p;
            v = mul_mod(v, a, p);
            ++hist[v];
        }
        for (u64 c = 0; c < p; ++c) {
            const std::int32_t* x = chi2.data() + c;
            std::int64_t s = 0;
            for (u64 t = 0; t < p; ++t) s += hist[t] * x[t];
            sums.push_back(s);
        }
    }
    return sums;
}

WeilSweepRow weil_sweep(u64 p, unsigned degree, u64 literal_cutoff) {
    require_odd_prime(p, "weil_sweep");
    if (degree < 2 || degree > 3) throw std::invalid_argument("weil_sweep: degree must be 2 or 3");
    WeilSweepRow row;
    row.p = p;
    row.degree = degree;
    row.bound = weil_bound(degree, p);

    auto record = [&](i64 s, u64 multiplicity) {
        row.polynomials += multiplicity;
        const i64 a = std::llabs(s);
        if (a > row.max_abs_sum) row.max_abs_sum = a;
        if (static_cast<double>(a) > row.bound) row.violations += multiplicity;
    };

    if (p <= literal_cutoff || p % degree == 0) {
        // Direct evaluation; unlike char_sum this also covers degree >= p.
        const auto chi = character_table(p);
        std::vector<u64> c(degree + 1, 0);
        c[degree] = 1;
        Polynomial f(degree + 1, 0);
        f[degree] = 1;
        u64 total = 1;
        for (unsigned i = 0; i < degree; ++i) total *= p;
        for (u64 idx = 0; idx < total; ++idx) {
            u64 rest = idx;
            for (unsigned i = 0; i < degree; ++i) {
                c[i] = rest % p;
                f[i] = static_cast<i64>(c[i]);
                rest /= p;
            }
            if (is_square_mod_p(f, p)) {
                ++row.squares;
                ++row.polynomials;
                continue;
            }
            i64 sum = 0;
            for (u64 a = 0; a < p; ++a) sum += chi[eval_mod(c, a, p)];
            record(sum, 1);
        }
        return row;
    }

    // Each translation orbit {f(T + s)} has exactly p members because the
    // T^{d-1} coefficient shifts by d * s and p does not divide d.
    const auto sums = depressed_char_sums(p, degree);
    const unsigned middle = degree - 2;
    Polynomial f(degree + 1, 0);
    f[degree] = 1;
    for (std::size_t idx = 0; idx < sums.size(); ++idx) {
        u64 rest = idx;
        f[0] = static_cast<i64>(rest % p);
        rest /= p;
        for (unsigned i = 0; i < middle; ++i) {
            f[1 + i] = static_cast<i64>(rest % p);
            rest /= p;
        }
        if (is_square_mod_p(f, p)) {
            row.squares += p;
            row.polynomials += p;
            continue;
        }
        record(sums[idx], p);
    }
    return row;
}

}  // namespace artinlab
