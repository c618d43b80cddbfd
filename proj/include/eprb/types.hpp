#pragma once

// Core domain types for four-setting EPRB data: outcome pairs, per-setting
// data sets, and the 2x2 per-setting tallies everything downstream runs on.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "eprb/errors.hpp"

namespace eprb {

// The four measurement settings, one per direction pair.
enum class Setting : int {
    AC = 0,  // directions (a, c)
    AD = 1,  // directions (a, d)
    BC = 2,  // directions (b, c)
    BD = 3,  // directions (b, d)
};

inline constexpr std::array<Setting, 4> kSettings = {Setting::AC, Setting::AD,
                                                     Setting::BC, Setting::BD};

constexpr int setting_index(Setting s) { return static_cast<int>(s); }

constexpr const char* setting_name(Setting s) {
    constexpr const char* names[] = {"ac", "ad", "bc", "bd"};
    return names[setting_index(s)];
}

// Sign <-> array index convention used everywhere: index 0 is +1, index 1
// is -1. Matches the fixed cell order (+,+), (+,-), (-,+), (-,-).
constexpr int sign_index(int v) { return v > 0 ? 0 : 1; }
inline constexpr std::array<int, 2> kSignOfIndex = {+1, -1};

// One detected pair of outcomes; both values must be +1 or -1 once validated.
struct OutcomePair {
    std::int8_t a = 0;
    std::int8_t b = 0;
};

// All pairs recorded under one setting, in detection order.
struct DataSet {
    Setting setting = Setting::AC;
    std::vector<OutcomePair> pairs;

    std::size_t size() const { return pairs.size(); }
};

// The four data sets of one experiment. n_common is the common length
// N = min(N_1, N_2, N_3, N_4); all statistics use the first N pairs of
// each set. Treat as immutable once validated.
struct ExperimentData {
    std::array<DataSet, 4> sets;
    std::size_t n_common = 0;

    const DataSet& set(Setting s) const { return sets[setting_index(s)]; }
    DataSet& set(Setting s) { return sets[setting_index(s)]; }
};

// Per-setting tallies of the first n_common pairs: counts[s][ia][ib] with the
// sign_index convention. Each setting's four cells sum to n. source_digest
// ties the tally to the data it came from.
struct PairCounts {
    std::array<std::array<std::array<std::uint64_t, 2>, 2>, 4> counts{};
    std::uint64_t n = 0;
    std::uint64_t source_digest = 0;

    std::uint64_t cell(Setting s, int a, int b) const {
        return counts[setting_index(s)][sign_index(a)][sign_index(b)];
    }
    std::uint64_t& cell(Setting s, int a, int b) {
        return counts[setting_index(s)][sign_index(a)][sign_index(b)];
    }
};

// Content fingerprint (FNV-1a) used to verify that correlations and quadruple
// results came from the same data.
std::uint64_t digest(const ExperimentData& data);
std::uint64_t digest(const PairCounts& counts);

// Checks all invariants and recomputes n_common. Throws EmptyDataSet if any
// set is empty, BadOutcome if any value is outside {+1, -1}.
ExperimentData validate_experiment(ExperimentData data);

// Tallies the first n_common pairs of each set. The result's source_digest is
// the digest of `data`, so downstream results can be matched to correlations
// computed from the same experiment.
PairCounts aggregate_counts(const ExperimentData& data);

// Builds a PairCounts directly from raw cells (used when only tallies are
// available, e.g. fuzzing). Each setting's cells must sum to the same n >= 1.
PairCounts make_pair_counts(
    const std::array<std::array<std::array<std::uint64_t, 2>, 2>, 4>& cells);

}  // namespace eprb
