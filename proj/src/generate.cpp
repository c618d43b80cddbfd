#include "eprb/generate.hpp"

#include <cmath>
#include <string>

#include "eprb/rng.hpp"

namespace eprb {

namespace {

// Stream ids: one per setting for pair draws, one for quadruple draws,
// one per setting for the post-generation shuffles.
constexpr std::uint64_t kSettingStream0 = 0;
constexpr std::uint64_t kQuadrupleStream = 4;
constexpr std::uint64_t kShuffleStream0 = 5;

ExperimentData empty_sets(std::uint64_t n_pairs) {
    if (n_pairs == 0) throw EmptyDataSet("generator asked for zero pairs");
    ExperimentData data;
    for (int s = 0; s < 4; ++s) {
        data.sets[s].setting = kSettings[s];
        data.sets[s].pairs.reserve(n_pairs);
    }
    return data;
}

void shuffle_pairs(std::vector<OutcomePair>& pairs, Xoshiro256ss& rng) {
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.next_below(i)]);
}

}  // namespace

const char* generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::QuadrupleRandom: return "quadruple-random";
        case GeneratorKind::IndependentRandom: return "independent-random";
        case GeneratorKind::CorrelatedPairs: return "correlated-pairs";
    }
    return "?";
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "quadruple-random" || name == "quadruple") return GeneratorKind::QuadrupleRandom;
    if (name == "independent-random" || name == "iid") return GeneratorKind::IndependentRandom;
    if (name == "correlated-pairs" || name == "correlated") return GeneratorKind::CorrelatedPairs;
    throw UsageError("unknown generator kind: " + name);
}

ExperimentData generate_quadruple_random(std::uint64_t n_pairs, std::uint64_t seed) {
    ExperimentData data = empty_sets(n_pairs);
    Xoshiro256ss draw = Xoshiro256ss::for_stream(seed, kQuadrupleStream);
    for (std::uint64_t i = 0; i < n_pairs; ++i) {
        const auto x = static_cast<std::int8_t>(draw.next_sign());
        const auto y = static_cast<std::int8_t>(draw.next_sign());
        const auto z = static_cast<std::int8_t>(draw.next_sign());
        const auto w = static_cast<std::int8_t>(draw.next_sign());
        data.set(Setting::AC).pairs.push_back({x, z});
        data.set(Setting::AD).pairs.push_back({x, w});
        data.set(Setting::BC).pairs.push_back({y, z});
        data.set(Setting::BD).pairs.push_back({y, w});
    }
    for (int s = 0; s < 4; ++s) {
        Xoshiro256ss shuffler = Xoshiro256ss::for_stream(seed, kShuffleStream0 + s);
        shuffle_pairs(data.sets[s].pairs, shuffler);
    }
    return validate_experiment(std::move(data));
}

ExperimentData generate_independent_random(std::uint64_t n_pairs, std::uint64_t seed) {
    ExperimentData data = empty_sets(n_pairs);
    for (int s = 0; s < 4; ++s) {
        Xoshiro256ss rng = Xoshiro256ss::for_stream(seed, kSettingStream0 + s);
        for (std::uint64_t i = 0; i < n_pairs; ++i) {
            const auto a = static_cast<std::int8_t>(rng.next_sign());
            const auto b = static_cast<std::int8_t>(rng.next_sign());
            data.sets[s].pairs.push_back({a, b});
        }
    }
    return validate_experiment(std::move(data));
}

ExperimentData generate_correlated_pairs(std::uint64_t n_pairs, std::uint64_t seed,
                                         const std::array<double, 4>& coeff) {
    for (int s = 0; s < 4; ++s) {
        if (!(std::abs(coeff[s]) <= 1.0))
            throw CoefficientOutOfRange("coefficient c" + std::to_string(s + 1) + " = " +
                                        std::to_string(coeff[s]) + " outside [-1, 1]");
    }
    ExperimentData data = empty_sets(n_pairs);
    for (int s = 0; s < 4; ++s) {
        // Inverse CDF over the fixed cell order (+,+), (+,-), (-,+), (-,-)
        // with P(a,b) = (1 - c*a*b)/4.
        const double c = coeff[s];
        const double p_same = (1.0 - c) / 4.0;      // (+,+) and (-,-)
        const double p_diff = (1.0 + c) / 4.0;      // (+,-) and (-,+)
        const double edge1 = p_same;
        const double edge2 = p_same + p_diff;
        const double edge3 = p_same + 2.0 * p_diff;
        Xoshiro256ss rng = Xoshiro256ss::for_stream(seed, kSettingStream0 + s);
        for (std::uint64_t i = 0; i < n_pairs; ++i) {
            const double u = rng.next_unit();
            OutcomePair p{};
            if (u < edge1) {
                p = {+1, +1};
            } else if (u < edge2) {
                p = {+1, -1};
            } else if (u < edge3) {
                p = {-1, +1};
            } else {
                p = {-1, -1};
            }
            data.sets[s].pairs.push_back(p);
        }
    }
    return validate_experiment(std::move(data));
}

ExperimentData generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::QuadrupleRandom:
            return generate_quadruple_random(spec.n_pairs, spec.seed);
        case GeneratorKind::IndependentRandom:
            return generate_independent_random(spec.n_pairs, spec.seed);
        case GeneratorKind::CorrelatedPairs:
            return generate_correlated_pairs(spec.n_pairs, spec.seed, spec.coeff);
    }
    throw UsageError("unknown generator kind");
}

}  // namespace eprb
