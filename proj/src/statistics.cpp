#include "eprb/statistics.hpp"

#include <cmath>
#include <tuple>

namespace eprb {

CorrelationSet correlations(const ExperimentData& data) {
    if (data.n_common == 0) throw EmptyDataSet("cannot correlate zero pairs");
    CorrelationSet out;
    out.n = data.n_common;
    out.source_digest = digest(data);
    for (int s = 0; s < 4; ++s) {
        const auto& pairs = data.sets[s].pairs;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < data.n_common; ++i)
            sum += static_cast<std::int64_t>(pairs[i].a) * pairs[i].b;
        out.pair_sum[s] = sum;
        out.value[s] = static_cast<double>(sum) / static_cast<double>(out.n);
    }
    return out;
}

CorrelationSet correlations_from_counts(const PairCounts& counts) {
    if (counts.n == 0) throw EmptyDataSet("cannot correlate zero pairs");
    CorrelationSet out;
    out.n = counts.n;
    out.source_digest = counts.source_digest;
    for (int s = 0; s < 4; ++s) {
        const auto& m = counts.counts[s];
        // a*b = +1 on the diagonal cells, -1 off-diagonal
        std::int64_t sum = static_cast<std::int64_t>(m[0][0] + m[1][1]) -
                           static_cast<std::int64_t>(m[0][1] + m[1][0]);
        out.pair_sum[s] = sum;
        out.value[s] = static_cast<double>(sum) / static_cast<double>(out.n);
    }
    return out;
}

std::pair<double, double> c_plus_minus(const CorrelationSet& corr) {
    const auto& c = corr.value;
    double plus = std::abs(c[0] - c[1]) + std::abs(c[2] + c[3]);
    double minus = std::abs(c[0] + c[1]) + std::abs(c[2] - c[3]);
    return {plus, minus};
}

ChshStatistics s_chsh(const CorrelationSet& corr) {
    const auto& c = corr.value;
    ChshStatistics out;
    std::tie(out.c_plus, out.c_minus) = c_plus_minus(corr);
    const double total = c[0] + c[1] + c[2] + c[3];
    out.s_chsh = -1.0;
    for (int k = 0; k < 4; ++k) {
        const double candidate = std::abs(total - 2.0 * c[k]);
        if (candidate > out.s_chsh) {
            out.s_chsh = candidate;
            out.negated_slot = k;
        }
    }
    return out;
}

}  // namespace eprb
