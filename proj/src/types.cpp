#include "eprb/types.hpp"

#include <algorithm>
#include <string>

namespace eprb {

namespace {

constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

void fnv_byte(std::uint64_t& h, std::uint8_t byte) {
    h ^= byte;
    h *= kFnvPrime;
}

void fnv_u64(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) fnv_byte(h, static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::uint64_t digest(const ExperimentData& data) {
    std::uint64_t h = kFnvOffset;
    for (const DataSet& set : data.sets) {
        fnv_u64(h, static_cast<std::uint64_t>(set.setting));
        fnv_u64(h, set.pairs.size());
        for (const OutcomePair& p : set.pairs) {
            fnv_byte(h, static_cast<std::uint8_t>(p.a));
            fnv_byte(h, static_cast<std::uint8_t>(p.b));
        }
    }
    return h;
}

std::uint64_t digest(const PairCounts& counts) {
    std::uint64_t h = kFnvOffset;
    fnv_u64(h, counts.n);
    for (const auto& per_setting : counts.counts)
        for (const auto& row : per_setting)
            for (std::uint64_t c : row) fnv_u64(h, c);
    return h;
}

ExperimentData validate_experiment(ExperimentData data) {
    std::size_t n_min = 0;
    bool first = true;
    for (int s = 0; s < 4; ++s) {
        DataSet& set = data.sets[s];
        if (set.setting != kSettings[s])
            throw ValidationError("data sets out of order: slot " + std::to_string(s) +
                                  " holds setting " + setting_name(set.setting));
        if (set.pairs.empty())
            throw EmptyDataSet(std::string("data set ") + setting_name(set.setting) +
                               " has no pairs");
        for (const OutcomePair& p : set.pairs) {
            if ((p.a != 1 && p.a != -1) || (p.b != 1 && p.b != -1))
                throw BadOutcome(std::string("outcome outside {+1,-1} in set ") +
                                 setting_name(set.setting));
        }
        n_min = first ? set.size() : std::min(n_min, set.size());
        first = false;
    }
    data.n_common = n_min;
    return data;
}

PairCounts aggregate_counts(const ExperimentData& data) {
    PairCounts out;
    out.n = data.n_common;
    out.source_digest = digest(data);
    for (int s = 0; s < 4; ++s) {
        const auto& pairs = data.sets[s].pairs;
        for (std::size_t i = 0; i < data.n_common; ++i)
            ++out.counts[s][sign_index(pairs[i].a)][sign_index(pairs[i].b)];
    }
    return out;
}

PairCounts make_pair_counts(
    const std::array<std::array<std::array<std::uint64_t, 2>, 2>, 4>& cells) {
    PairCounts out;
    out.counts = cells;
    for (int s = 0; s < 4; ++s) {
        std::uint64_t total = 0;
        for (const auto& row : cells[s])
            for (std::uint64_t c : row) total += c;
        if (s == 0) {
            out.n = total;
        } else if (total != out.n) {
            throw ValidationError("pair counts do not share a common total");
        }
    }
    if (out.n == 0) throw EmptyDataSet("pair counts sum to zero");
    out.source_digest = digest(out);
    return out;
}

}  // namespace eprb
