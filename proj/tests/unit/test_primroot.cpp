#include <doctest.h>

#include <stdexcept>

#include "artinlab/errors.hpp"
#include "artinlab/primroot.hpp"
#include "oracles.hpp"

using namespace artinlab;

namespace {

bool pr_oracle(i64 g, u64 p) {
    if (p == 2) return oracle::rem(g, 2) == 1;
    if (oracle::rem(g, p) == 0) return false;
    return oracle::order(g, p) == p - 1;
}

}  // namespace

TEST_CASE("is_primitive_root examples") {
    CHECK(is_primitive_root(2, 11));
    CHECK_FALSE(is_primitive_root(2, 7));
    CHECK_FALSE(is_primitive_root(14, 7));
    CHECK(is_primitive_root(3, 2));
    CHECK_FALSE(is_primitive_root(2, 2));
    for (u64 p : primes_in_range(2, 3000))
        for (i64 g : {2, 3, -2, 5, 6, 10, -3})
            REQUIRE(is_primitive_root(g, p) == pr_oracle(g, p));
}

TEST_CASE("in_Pq0 examples") {
    CHECK(in_Pq0(2, 7, 2));
    CHECK_FALSE(in_Pq0(2, 7, 3));
    CHECK_FALSE(in_Pq0(2, 11, 3));
    CHECK_THROWS_AS(in_Pq0(6, 3, 2), std::invalid_argument);
}

TEST_CASE("classify examples") {
    CHECK(classify(2, 11).status == PrStatus::PrimitiveRoot);
    const auto c = classify(2, 7);
    CHECK(c.status == PrStatus::InPq);
    CHECK(c.q == 2);
    CHECK(classify(6, 3).status == PrStatus::DividesG);
}

TEST_CASE("classification partition and least q") {
    for (i64 g : {2, 3, 5, -2, 6}) {
        for (u64 p : primes_in_range(3, 100000)) {
            const auto c = classify(g, p);
            if (oracle::rem(g, p) == 0) {
                REQUIRE(c.status == PrStatus::DividesG);
                continue;
            }
            const auto qs = distinct_prime_factors(p - 1);
            bool any = false;
            u64 least = 0;
            for (u64 q : qs)
                if (in_Pq0(g, p, q)) {
                    if (!any) least = q;
                    any = true;
                }
            REQUIRE(is_primitive_root(g, p) == !any);
            if (any) {
                REQUIRE(c.status == PrStatus::InPq);
                REQUIRE(c.q == least);
                REQUIRE(mod_pow(g, (p - 1) / c.q, p) == 1);
            } else {
                REQUIRE(c.status == PrStatus::PrimitiveRoot);
            }
        }
    }
}

TEST_CASE("enumerate_pr_primes") {
    CHECK(enumerate_pr_primes(2, 3, 30) == std::vector<u64>{3, 5, 11, 13, 19, 29});
    CHECK(enumerate_pr_primes(2, 7, 8).empty());
    CHECK(enumerate_pr_primes(4, 3, 100000).empty());
    CHECK(enumerate_pr_primes(9, 3, 10000).empty());
    PrimrootOptions opt;
    opt.census.window = 4096;
    const auto whole = enumerate_pr_primes(3, 0, 60000, opt);
    auto a = enumerate_pr_primes(3, 0, 12345, opt), b = enumerate_pr_primes(3, 12345, 60000, opt);
    a.insert(a.end(), b.begin(), b.end());
    CHECK(a == whole);
    std::vector<u64> want;
    for (u64 p : primes_in_range(0, 60000))
        if (pr_oracle(3, p)) want.push_back(p);
    CHECK(whole == want);
    CHECK(count_pr_primes(3, 0, 60000, opt) == want.size());
    opt.exclude_small = true;
    const auto ex = enumerate_pr_primes(3, 0, 100, opt);
    CHECK(std::find(ex.begin(), ex.end(), 2) == ex.end());
    opt.census.parallel = false;
    opt.exclude_small = false;
    CHECK(enumerate_pr_primes(3, 0, 60000, opt) == whole);
}

TEST_CASE("gap_stats") {
    const auto r = gap_stats(2, 100, 2);
    CHECK(r.min_gap == 2);
    CHECK(r.attained_at == 3);
    // enumeration oracle for triples
    std::vector<u64> q;
    for (u64 p : primes_in_range(0, 101))
        if (pr_oracle(2, p)) q.push_back(p);
    u64 best = ~u64{0}, at = 0;
    for (std::size_t i = 0; i + 2 < q.size(); ++i)
        if (q[i + 2] - q[i] < best) {
            best = q[i + 2] - q[i];
            at = q[i];
        }
    const auto r3 = gap_stats(2, 100, 3);
    CHECK(r3.min_gap == best);
    CHECK(r3.attained_at == at);
    u64 total = 0;
    for (const auto& [gap, n] : r.histogram) total += n;
    CHECK(total == q.size() - 1);
    CHECK_THROWS_AS(gap_stats(2, 10, 5), InsufficientData);
    CHECK_THROWS_AS(gap_stats(2, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(gap_stats(2, 100, 1), std::invalid_argument);
}

TEST_CASE("gap_stats min gap is even away from 2") {
    for (i64 g : {3, 5, 6, 7}) {
        const auto r = gap_stats(g, 20000, 2);
        if (r.attained_at != 2) CHECK(r.min_gap % 2 == 0);
    }
}

TEST_CASE("consecutive_run") {
    CHECK(consecutive_run(2, 100, 2) == std::optional<std::vector<u64>>(std::vector<u64>{3, 5}));
    CHECK(consecutive_run(2, 10, 1) == std::optional<std::vector<u64>>(std::vector<u64>{3}));
    CHECK_FALSE(consecutive_run(2, 100, 50).has_value());
    const auto run = consecutive_run(2, 1000000, 3);
    REQUIRE(run.has_value());
    const auto& v = *run;
    const auto between = primes_in_range(v.front(), v.back() + 1);
    CHECK(between == v);
    for (u64 p : v) CHECK(pr_oracle(2, p));
    // no earlier run
    const auto ps = primes_in_range(0, v.back() + 1);
    for (std::size_t i = 0; i + 2 < ps.size() && ps[i] < v.front(); ++i)
        REQUIRE_FALSE((pr_oracle(2, ps[i]) && pr_oracle(2, ps[i + 1]) && pr_oracle(2, ps[i + 2])));
}
