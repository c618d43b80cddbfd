#pragma once

// Correlations and the CHSH-type combinations built from them. Correlations
// are accumulated as exact integer sums of +-1 products and divided once, so
// C_s is the correctly rounded value of an exact rational with denominator N.

#include <array>
#include <cstdint>
#include <utility>

#include "eprb/types.hpp"

namespace eprb {

struct CorrelationSet {
    std::array<double, 4> value{};         // C_s = pair_sum[s] / n
    std::array<std::int64_t, 4> pair_sum{};  // exact sum of A*B over first n pairs
    std::uint64_t n = 0;
    std::uint64_t source_digest = 0;

    double operator[](Setting s) const { return value[setting_index(s)]; }
};

// C_s = (1/N) sum A_{s,n} B_{s,n} over the first N pairs of each set.
// Throws EmptyDataSet when N = 0.
CorrelationSet correlations(const ExperimentData& data);

// Same statistic computed from tallies: the correlation depends on the data
// only through the per-setting cell counts.
CorrelationSet correlations_from_counts(const PairCounts& counts);

// The two sign variants |C1 -+ C2| + |C3 +- C4|.
// first = |C1 - C2| + |C3 + C4|, second = |C1 + C2| + |C3 - C4|.
std::pair<double, double> c_plus_minus(const CorrelationSet& corr);

struct ChshStatistics {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double s_chsh = 0.0;
    int negated_slot = 0;  // which correlation sits in the minus position at the max
};

// S = max over all 24 orderings of |C_p1 - C_p2 + C_p3 + C_p4|. The value of
// one ordering depends only on which correlation is negated, so the maximum
// collapses to four candidates; the 24-way search stays in the test suite as
// the oracle for that collapse.
ChshStatistics s_chsh(const CorrelationSet& corr);

}  // namespace eprb
