#pragma once

// Experiment orchestration: configuration, presets pinning the four
// reference experiments, and the generate-or-load -> correlate -> solve ->
// verify pipeline.

#include <optional>
#include <string>
#include <vector>

#include "eprb/generate.hpp"
#include "eprb/io.hpp"

namespace eprb {

inline constexpr std::uint64_t kDefaultPairs = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig {
    std::optional<GeneratorSpec> generator;
    std::optional<std::string> input_file;
    std::string source_label;  // free-form tag stored in each record
    int trials = 1;            // trial t runs with seed + t
    std::optional<std::string> records_out;
    std::optional<std::string> data_out;  // dump trial 0's pairs to this file
    bool emit_counts = false;
};

// Named parameter sets for the four reference experiments: "quadruple",
// "iid", "singlet", "bell-malus". Throws UsageError on an unknown name.
GeneratorSpec preset_spec(const std::string& name);
const std::vector<std::string>& preset_names();

// Runs the full pipeline once per trial and returns the reports in trial
// order. Writes the records file and the data dump when configured.
std::vector<TrialReport> run_experiment(const RunConfig& config);

}  // namespace eprb
