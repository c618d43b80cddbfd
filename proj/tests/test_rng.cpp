#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "eprb/rng.hpp"

using eprb::SplitMix64;
using eprb::Xoshiro256ss;

TEST_CASE("same seed produces the same stream") {
    Xoshiro256ss a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("different seeds diverge") {
    Xoshiro256ss a(42), b(43);
    int equal = 0;
    for (int i = 0; i < 256; ++i)
        if (a.next() == b.next()) ++equal;
    CHECK(equal == 0);
}

TEST_CASE("streams of one seed are distinct and reproducible") {
    auto s0 = Xoshiro256ss::for_stream(7, 0);
    auto s1 = Xoshiro256ss::for_stream(7, 1);
    auto s0_again = Xoshiro256ss::for_stream(7, 0);
    int equal = 0;
    for (int i = 0; i < 256; ++i) {
        const std::uint64_t a = s0.next();
        CHECK(a == s0_again.next());
        if (a == s1.next()) ++equal;
    }
    CHECK(equal == 0);
}

TEST_CASE("signs are fair") {
    Xoshiro256ss rng(123);
    const int n = 1'000'000;
    long sum = 0;
    for (int i = 0; i < n; ++i) sum += rng.next_sign();
    // 5 sigma band around zero, sigma = sqrt(n)
    CHECK(std::abs(sum) < 5.0 * std::sqrt(static_cast<double>(n)));
}

TEST_CASE("unit doubles stay in [0,1) with the right mean") {
    Xoshiro256ss rng(99);
    const int n = 200'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("next_below covers its range uniformly") {
    Xoshiro256ss rng(2024);
    std::map<std::uint64_t, int> hits;
    const int n = 70'000;
    for (int i = 0; i < n; ++i) ++hits[rng.next_below(7)];
    CHECK(hits.size() == 7);
    for (const auto& [value, count] : hits) {
        CHECK(value < 7);
        CHECK(count > n / 7 - 5 * std::sqrt(n / 7.0));
        CHECK(count < n / 7 + 5 * std::sqrt(n / 7.0));
    }
}

TEST_CASE("splitmix64 walks distinct values") {
    SplitMix64 sm(0);
    std::vector<std::uint64_t> seen;
    for (int i = 0; i < 64; ++i) seen.push_back(sm.next());
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
}
