#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "artinlab/errors.hpp"
#include "artinlab/quadchar.hpp"
#include "oracles.hpp"

using namespace artinlab;

namespace {

i64 literal_sum(const Polynomial& f, u64 p) {
    i64 s = 0;
    for (u64 a = 0; a < p; ++a) {
        u64 v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = (v * a + oracle::rem(f[i], p)) % p;
        s += oracle::qr(static_cast<i64>(v), p);
    }
    return s;
}

// f is a square iff f = g^2 for one of the p^(d/2) monic g of half degree
bool square_oracle(const Polynomial& f, u64 p) {
    const std::size_t d = f.size() - 1;
    if (d % 2) return false;
    const std::size_t h = d / 2;
    std::vector<u64> g(h + 1, 0);
    g[h] = 1;
    u64 total = 1;
    for (std::size_t i = 0; i < h; ++i) total *= p;
    for (u64 idx = 0; idx < total; ++idx) {
        u64 t = idx;
        for (std::size_t i = 0; i < h; ++i) {
            g[i] = t % p;
            t /= p;
        }
        std::vector<u64> sq(d + 1, 0);
        for (std::size_t i = 0; i <= h; ++i)
            for (std::size_t j = 0; j <= h; ++j) sq[i + j] = (sq[i + j] + g[i] * g[j]) % p;
        bool eq = true;
        for (std::size_t i = 0; i <= d; ++i) eq = eq && sq[i] == oracle::rem(f[i], p);
        if (eq) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("char_sum examples") {
    CHECK(char_sum(Polynomial{0, 1}, 13) == 0);
    CHECK(char_sum(Polynomial{0, 1, 1}, 7) == -1);
    CHECK(char_sum(Polynomial{0, 0, 1}, 11) == 10);
    CHECK_THROWS_AS(char_sum(Polynomial{0, 2}, 13), std::invalid_argument);
    CHECK_THROWS_AS(char_sum(Polynomial{0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(char_sum(Polynomial{1, 0, 0, 1}, 3), std::invalid_argument);
}

TEST_CASE("char_sum against literal enumeration") {
    for (u64 p : {5ULL, 7ULL, 11ULL, 13ULL})
        for (i64 a = -3; a < 4; ++a)
            for (i64 b = 0; b < 5; ++b) {
                const Polynomial f{a, b, -a, 1};
                REQUIRE(char_sum(f, p) == literal_sum(f, p));
            }
}

TEST_CASE("square detection against brute-force squaring") {
    for (u64 p : {3ULL, 5ULL, 7ULL})
        for (unsigned d : {2u, 3u, 4u}) {
            u64 total = 1;
            for (unsigned i = 0; i < d; ++i) total *= p;
            for (u64 idx = 0; idx < total; ++idx) {
                Polynomial f(d + 1, 0);
                f[d] = 1;
                u64 t = idx;
                for (unsigned i = 0; i < d; ++i) {
                    f[i] = static_cast<i64>(t % p);
                    t /= p;
                }
                REQUIRE(is_square_mod_p(f, p) == square_oracle(f, p));
            }
        }
}

TEST_CASE("depressed sums against literal evaluation") {
    for (u64 p : {5ULL, 7ULL, 11ULL, 23ULL})
        for (unsigned d : {2u, 3u}) {
            const auto sums = depressed_char_sums(p, d);
            std::size_t idx = 0;
            if (d == 2) {
                for (u64 c0 = 0; c0 < p; ++c0) REQUIRE(sums[idx++] == literal_sum({static_cast<i64>(c0), 0, 1}, p));
            } else {
                for (u64 c1 = 0; c1 < p; ++c1)
                    for (u64 c0 = 0; c0 < p; ++c0)
                        REQUIRE(sums[idx++] == literal_sum({static_cast<i64>(c0), static_cast<i64>(c1), 0, 1}, p));
            }
            CHECK(idx == sums.size());
        }
}

TEST_CASE("weil_sweep orbit path matches the literal path") {
    for (u64 p : {53ULL, 59ULL, 61ULL})
        for (unsigned d : {2u, 3u}) {
            const auto fast = weil_sweep(p, d, 0);
            const auto slow = weil_sweep(p, d, 1000);
            CHECK(fast.polynomials == slow.polynomials);
            CHECK(fast.squares == slow.squares);
            CHECK(fast.max_abs_sum == slow.max_abs_sum);
            CHECK(fast.violations == 0);
            CHECK(slow.violations == 0);
        }
    // degree 3 at p = 3 is swept literally
    const auto r = weil_sweep(3, 3);
    CHECK(r.polynomials == 27);
    CHECK(r.violations == 0);
    CHECK(weil_sweep(3, 2).squares == 3);
}

TEST_CASE("legendre_indicator examples") {
    CHECK(legendre_indicator(1, 13, SignPattern({0}, {1})) == 1);
    CHECK(legendre_indicator(1, 13, SignPattern({0}, {-1})) == 0);
    CHECK(legendre_indicator(3, 13, SignPattern({0, 1}, {1, 1})) == 1);
    CHECK_THROWS_AS(legendre_indicator(12, 13, SignPattern({0, 1}, {1, 1})), ExcludedPoint);
}

TEST_CASE("count_sign_pattern_solutions examples") {
    CHECK(count_sign_pattern_solutions(13, SignPattern({0}, {1})) == 6);
    CHECK(count_sign_pattern_solutions(13, SignPattern({0, 1}, {1, 1})) == 2);
    u64 brute = 0;
    for (i64 n = 0; n < 101; ++n)
        if (oracle::qr(n, 101) == -1 && oracle::qr(n + 2, 101) == -1 && oracle::qr(n + 6, 101) == -1) ++brute;
    CHECK(count_sign_pattern_solutions(101, SignPattern({0, 2, 6}, {-1, -1, -1})) == brute);
    CHECK_THROWS_AS(count_sign_pattern_solutions(13, SignPattern({0, 13}, {1, 1})), std::invalid_argument);
}

TEST_CASE("sign patterns partition the admissible residues") {
    const std::vector<std::vector<i64>> sets{{0}, {0, 1}, {0, 2}, {0, 2, 6}, {0, 4, 10}, {1, 5, 7}};
    for (u64 p = 3; p <= 500; p += 2) {
        if (!oracle::trial_prime(p)) continue;
        for (const auto& h : sets) {
            std::vector<u64> r;
            for (i64 x : h) r.push_back(oracle::rem(-x, p));
            std::sort(r.begin(), r.end());
            if (std::adjacent_find(r.begin(), r.end()) != r.end()) continue;
            const auto counts = count_all_sign_patterns(p, h);
            u64 total = 0;
            for (std::size_t mask = 0; mask < counts.size(); ++mask) {
                SignPattern pat;
                pat.offsets = h;
                for (std::size_t i = 0; i < h.size(); ++i) pat.signs.push_back((mask >> i) & 1 ? -1 : 1);
                const u64 c = count_sign_pattern_solutions(p, pat);
                REQUIRE(c == counts[mask]);
                CHECK(static_cast<double>(c) >= sign_pattern_lower_bound(p, h.size()));
                u64 via_indicator = 0;
                for (u64 n = 0; n < p; ++n) {
                    if (std::binary_search(r.begin(), r.end(), n)) continue;
                    via_indicator += static_cast<u64>(legendre_indicator(static_cast<i64>(n), p, pat));
                    REQUIRE(indicator_product_formula(static_cast<i64>(n), p, pat) ==
                            static_cast<double>(legendre_indicator(static_cast<i64>(n), p, pat)));
                }
                REQUIRE(via_indicator == c);
                const auto sols = sign_pattern_solutions(p, pat);
                REQUIRE(sols.size() == c);
                total += c;
            }
            REQUIRE(total == p - r.size());
        }
    }
}

TEST_CASE("weil bound formula") {
    CHECK(weil_bound(2, 101) == doctest::Approx(std::sqrt(101.0)));
    CHECK(weil_bound(3, 7) == doctest::Approx(2 * std::sqrt(7.0)));
    CHECK(sign_pattern_lower_bound(101, 3) == doctest::Approx(101.0 / 8 - 2 * std::sqrt(101.0) - 3));
}
