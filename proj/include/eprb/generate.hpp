#pragma once

// Seeded data generators for the four numerical experiments: hidden
// quadruples, fully independent outcomes, and per-setting correlated pairs.
// Identical (kind, n_pairs, seed, coefficients) always produce bit-identical
// data.

#include <array>
#include <cstdint>
#include <string>

#include "eprb/types.hpp"

namespace eprb {

enum class GeneratorKind { QuadrupleRandom, IndependentRandom, CorrelatedPairs };

const char* generator_kind_name(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);  // UsageError on unknown

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::IndependentRandom;
    std::uint64_t n_pairs = 0;
    std::uint64_t seed = 0;
    std::array<double, 4> coeff{};  // CorrelatedPairs only; |c_s| <= 1
};

// Draws n_pairs quadruples (x, y, z, w) of independent fair +-1 values, emits
// the projected pairs (x,z), (x,w), (y,z), (y,w), then shuffles each set
// independently. The quadruple structure is hidden by the shuffle but always
// recoverable: the downstream solver returns Delta = 1 for every seed and n.
ExperimentData generate_quadruple_random(std::uint64_t n_pairs, std::uint64_t seed);

// Every A and B in every set is an independent fair +-1.
ExperimentData generate_independent_random(std::uint64_t n_pairs, std::uint64_t seed);

// Pairs of setting s drawn i.i.d. from P(A,B) = (1 - c_s*A*B) / 4 by inverse
// CDF over the cells (+,+), (+,-), (-,+), (-,-); the expected correlation is
// -c_s. Throws CoefficientOutOfRange if any |c_s| > 1.
ExperimentData generate_correlated_pairs(std::uint64_t n_pairs, std::uint64_t seed,
                                         const std::array<double, 4>& coeff);

ExperimentData generate(const GeneratorSpec& spec);

}  // namespace eprb
