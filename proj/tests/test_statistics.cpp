#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "eprb/rng.hpp"
#include "eprb/statistics.hpp"

using namespace eprb;

namespace {

ExperimentData uniform_sets(const std::array<std::vector<OutcomePair>, 4>& pairs) {
    ExperimentData data;
    for (int s = 0; s < 4; ++s) {
        data.sets[s].setting = kSettings[s];
        data.sets[s].pairs = pairs[s];
    }
    return validate_experiment(std::move(data));
}

CorrelationSet corr_of(const std::array<double, 4>& values) {
    CorrelationSet c;
    c.value = values;
    c.n = 1;
    return c;
}

// Oracle: evaluate |C_p1 - C_p2 + C_p3 + C_p4| for all 24 orderings.
double s_chsh_all_permutations(const std::array<double, 4>& c) {
    std::array<int, 4> p = {0, 1, 2, 3};
    double best = -1.0;
    do {
        best = std::max(best, std::abs(c[p[0]] - c[p[1]] + c[p[2]] + c[p[3]]));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace

TEST_CASE("perfectly correlated set gives C = 1") {
    std::array<std::vector<OutcomePair>, 4> pairs;
    for (int s = 0; s < 4; ++s) pairs[s].assign(7, {+1, +1});
    auto corr = correlations(uniform_sets(pairs));
    for (int s = 0; s < 4; ++s) CHECK(corr.value[s] == 1.0);
}

TEST_CASE("opposite products cancel") {
    std::array<std::vector<OutcomePair>, 4> pairs;
    for (int s = 0; s < 4; ++s) pairs[s] = {{+1, +1}, {+1, -1}};
    auto corr = correlations(uniform_sets(pairs));
    for (int s = 0; s < 4; ++s) CHECK(corr.value[s] == 0.0);
}

TEST_CASE("correlations use only the first N pairs") {
    std::array<std::vector<OutcomePair>, 4> pairs;
    pairs[0] = {{+1, +1}, {+1, +1}, {-1, +1}, {-1, +1}};  // tail would cancel
    pairs[1] = {{+1, +1}, {+1, +1}};
    pairs[2] = {{+1, +1}, {+1, +1}};
    pairs[3] = {{+1, +1}, {+1, +1}};
    auto corr = correlations(uniform_sets(pairs));
    CHECK(corr.n == 2);
    CHECK(corr.value[0] == 1.0);
}

TEST_CASE("correlations from counts match correlations from data") {
    Xoshiro256ss rng(31);
    for (int round = 0; round < 30; ++round) {
        std::array<std::vector<OutcomePair>, 4> pairs;
        const std::size_t n = 1 + rng.next_below(60);
        for (int s = 0; s < 4; ++s)
            for (std::size_t i = 0; i < n; ++i)
                pairs[s].push_back({static_cast<std::int8_t>(rng.next_sign()),
                                    static_cast<std::int8_t>(rng.next_sign())});
        auto data = uniform_sets(pairs);
        auto direct = correlations(data);
        auto via_counts = correlations_from_counts(aggregate_counts(data));
        CHECK(direct.value == via_counts.value);
        CHECK(direct.pair_sum == via_counts.pair_sum);
        CHECK(direct.source_digest == via_counts.source_digest);
        for (int s = 0; s < 4; ++s) {
            // exact rational with denominator N, inside [-1, 1]
            CHECK(direct.value[s] == static_cast<double>(direct.pair_sum[s]) /
                                         static_cast<double>(direct.n));
            CHECK(std::abs(direct.value[s]) <= 1.0);
            CHECK(std::abs(direct.pair_sum[s]) <= static_cast<std::int64_t>(direct.n));
        }
    }
}

TEST_CASE("correlations are invariant under within-set reordering") {
    Xoshiro256ss rng(77);
    std::array<std::vector<OutcomePair>, 4> pairs;
    for (int s = 0; s < 4; ++s)
        for (int i = 0; i < 25; ++i)
            pairs[s].push_back({static_cast<std::int8_t>(rng.next_sign()),
                                static_cast<std::int8_t>(rng.next_sign())});
    auto data = uniform_sets(pairs);
    auto baseline = correlations(data);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        for (int s = 0; s < 4; ++s)
            for (std::size_t i = data.sets[s].pairs.size(); i > 1; --i)
                std::swap(data.sets[s].pairs[i - 1], data.sets[s].pairs[rng.next_below(i)]);
        auto shuffled = correlations(data);
        CHECK(shuffled.value == baseline.value);
        CHECK(shuffled.pair_sum == baseline.pair_sum);
    }
}

TEST_CASE("c_plus_minus on hand-checked tuples") {
    auto [p1, m1] = c_plus_minus(corr_of({1, 1, 1, 1}));
    CHECK(p1 == 2.0);
    CHECK(m1 == 2.0);

    const double r = 1.0 / std::sqrt(2.0);
    auto [p2, m2] = c_plus_minus(corr_of({-r, r, -r, -r}));
    CHECK(p2 == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(0.0).epsilon(1e-12));

    auto [p3, m3] = c_plus_minus(corr_of({0, 0, 0, 0}));
    CHECK(p3 == 0.0);
    CHECK(m3 == 0.0);
}

TEST_CASE("s_chsh on hand-checked tuples") {
    CHECK(s_chsh(corr_of({1, 1, 1, 1})).s_chsh == 2.0);

    const double r = 1.0 / std::sqrt(2.0);
    const auto stat = s_chsh(corr_of({-r, r, -r, -r}));
    CHECK(stat.s_chsh == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(stat.negated_slot == 1);
}

TEST_CASE("negation-slot collapse equals the 24-permutation maximum") {
    Xoshiro256ss rng(4242);
    for (int round = 0; round < 500; ++round) {
        std::array<double, 4> c;
        for (auto& v : c) v = 2.0 * rng.next_unit() - 1.0;
        const double collapsed = s_chsh(corr_of(c)).s_chsh;
        const double oracle = s_chsh_all_permutations(c);
        CHECK(std::abs(collapsed - oracle) <= 1e-12);
    }
}

TEST_CASE("s_chsh never exceeds max(c_plus, c_minus)") {
    Xoshiro256ss rng(5353);
    for (int round = 0; round < 2000; ++round) {
        std::array<double, 4> c;
        for (auto& v : c) v = 2.0 * rng.next_unit() - 1.0;
        const auto stat = s_chsh(corr_of(c));
        CHECK(stat.s_chsh >= 0.0);
        CHECK(stat.s_chsh <= std::max(stat.c_plus, stat.c_minus) + 1e-12);
        CHECK(std::max(stat.c_plus, stat.c_minus) <= 4.0 + 1e-12);
    }
}

TEST_CASE("s_chsh is invariant under relabeling of settings") {
    Xoshiro256ss rng(616);
    for (int round = 0; round < 200; ++round) {
        std::array<double, 4> c;
        for (auto& v : c) v = 2.0 * rng.next_unit() - 1.0;
        const double base = s_chsh(corr_of(c)).s_chsh;
        std::array<int, 4> p = {0, 1, 2, 3};
        do {
            std::array<double, 4> relabeled;
            for (int i = 0; i < 4; ++i) relabeled[i] = c[p[i]];
            CHECK(std::abs(s_chsh(corr_of(relabeled)).s_chsh - base) <= 1e-12);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("per-quadruple identity |xz - xw| + |yz + yw| = 2") {
    for (int x : kSignOfIndex)
        for (int y : kSignOfIndex)
            for (int z : kSignOfIndex)
                for (int w : kSignOfIndex)
                    CHECK(std::abs(x * z - x * w) + std::abs(y * z + y * w) == 2);
}

TEST_CASE("empty window is rejected") {
    ExperimentData data;
    for (int s = 0; s < 4; ++s) data.sets[s].setting = kSettings[s];
    data.n_common = 0;
    CHECK_THROWS_AS(correlations(data), EmptyDataSet);
}
