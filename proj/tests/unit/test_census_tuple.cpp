#include <doctest.h>

#include "artinlab/census.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/tuple.hpp"
#include "oracles.hpp"

using namespace artinlab;

TEST_CASE("serial and parallel census agree") {
    CensusOptions serial;
    serial.parallel = false;
    serial.window = 1 << 14;
    CensusOptions par = serial;
    par.parallel = true;
    par.threads = 4;
    const auto a = primes_in_range_parallel(1000, 500000, serial);
    const auto b = primes_in_range_parallel(1000, 500000, par);
    CHECK(a == b);
    CHECK(a == primes_in_range(1000, 500000));
    auto pred = [](u64 p) { return p % 4 == 1; };
    CHECK(count_primes_if(0, 300000, serial, pred) == count_primes_if(0, 300000, par, pred));
    CHECK(collect_primes_if(0, 300000, serial, pred) == collect_primes_if(0, 300000, par, pred));
}

TEST_CASE("windows tile the range") {
    const PrimeWindows w(17, 1000, 100);
    u64 expect = 17;
    std::vector<u64> all, buf;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto [lo, hi] = w.bounds(i);
        CHECK(lo == expect);
        expect = hi;
        w.primes(i, buf);
        all.insert(all.end(), buf.begin(), buf.end());
    }
    CHECK(expect == 1000);
    CHECK(all == primes_in_range(17, 1000));
}

TEST_CASE("progress callback sees every window") {
    CensusOptions opt;
    opt.window = 1000;
    std::size_t calls = 0, last_total = 0;
    opt.progress = [&](std::size_t, std::size_t total) {
        ++calls;
        last_total = total;
    };
    count_primes_if(0, 10000, opt, [](u64) { return true; });
    CHECK(calls == 10);
    CHECK(last_total == 10);
}

TEST_CASE("for_each_prime streams in order and stops early") {
    std::vector<u64> seen;
    for_each_prime(
        0, 1000000,
        [&](u64 p) {
            seen.push_back(p);
            return seen.size() < 100;
        },
        1 << 10);
    CHECK(seen.size() == 100);
    CHECK(seen == primes_in_range(0, 542));
}

TEST_CASE("is_admissible") {
    CHECK_FALSE(is_admissible(std::vector<i64>{0, 2, 4}));
    CHECK(is_admissible(std::vector<i64>{0, 2, 6}));
    CHECK(is_admissible(std::vector<i64>{0}));
    CHECK_FALSE(is_admissible(std::vector<i64>{0, 1}));
    // brute force: admissible iff every p <= k misses a class
    for (i64 a = 1; a < 30; ++a)
        for (i64 b = a + 1; b < 30; ++b) {
            const std::vector<i64> h{0, a, b};
            bool ok = true;
            for (u64 p : {2ULL, 3ULL}) {
                std::vector<bool> hit(p, false);
                for (i64 x : h) hit[oracle::rem(x, p)] = true;
                ok = ok && std::find(hit.begin(), hit.end(), false) != hit.end();
            }
            REQUIRE(is_admissible(h) == ok);
        }
}

TEST_CASE("paper_tuple") {
    CHECK(paper_tuple(2, 4).offsets == std::vector<i64>{0, 24});
    CHECK(paper_tuple(3, 4).offsets == std::vector<i64>{0, 24, 48});
    CHECK(paper_tuple(2, 4).K == std::optional<u64>(4));
    CHECK_THROWS_AS(paper_tuple(2), ResourceError);
    CHECK_THROWS_AS(paper_tuple(3, 2), std::invalid_argument);
    CHECK(paper_tuple(3, 3).offsets == std::vector<i64>{0, 6, 12});
    CHECK(default_threshold(2) == std::optional<u64>(576));
    CHECK(paper_tuple(1).offsets == std::vector<i64>{0});
    for (u64 k = 1; k <= 5; ++k)
        for (u64 K = k; K <= 2 * k + 2; ++K) CHECK(is_admissible(paper_tuple(k, K).offsets));
}

TEST_CASE("make_tuple validates and sorts") {
    const auto t = make_tuple({6, 0, 2});
    CHECK(t.offsets == std::vector<i64>{0, 2, 6});
    CHECK(t.contains(2));
    CHECK_FALSE(t.contains(4));
    CHECK_THROWS_AS(make_tuple({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_tuple({0, 2, 4}), std::invalid_argument);
    CHECK(largest_difference_prime(make_tuple({0, 2, 6})) == 3);
    CHECK(largest_difference_prime(make_tuple({0})) == 1);
}
