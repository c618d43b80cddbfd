#pragma once

// File formats.
//
// Pairs file (input and --data-out): comma-separated text, one pair per
// line, columns setting(1-4), A(+-1), B(+-1). An optional single header line
// is allowed. Order within a setting is preserved.
//
// Records file (--out): line-delimited key=value records, one `record` line
// per trial, `counts` lines when requested, and `# timing` comment lines
// carrying wall-clock durations. Everything outside comments is a pure
// function of the run configuration, so two runs with the same seed produce
// byte-identical non-comment content. Doubles are printed with 17 significant
// digits and re-parse to the exact same value.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eprb/types.hpp"

namespace eprb {

// Everything recorded about one analyzed trial.
struct TrialReport {
    int trial = 0;
    std::string run_id;
    std::string source;    // preset:<name> | generator:<kind> | file:<path>
    std::string rng_name;  // pinned generator name, or "none" for file input
    std::string kind;      // generator kind name, or "file"
    std::uint64_t seed = 0;      // effective seed for this trial
    std::uint64_t n_pairs = 0;   // requested pairs per set (0 for file input)
    std::array<double, 4> coeff{};
    std::uint64_t n_common = 0;
    std::array<double, 4> correlation{};
    double c_plus = 0.0;
    double c_minus = 0.0;
    double s_chsh = 0.0;
    int negated_slot = 0;
    std::uint64_t k_max = 0;
    double delta = 0.0;
    double bound = 0.0;
    double lp_value = 0.0;
    std::string method;
    bool ok_c_plus = false;
    bool ok_c_minus = false;
    bool ok_s_chsh = false;
    bool chsh2_applicable = false;
    bool ok_chsh2 = false;
    double wall_ms = 0.0;                // excluded from the deterministic record
    std::optional<PairCounts> counts;    // present when --emit-counts is on
};

// Throws IoError if unreadable, ParseError with a 1-based line number on
// malformed lines, BadOutcome on values outside {+1,-1}, EmptyDataSet if a
// setting never appears.
ExperimentData load_experiment_file(const std::string& path);

void save_experiment_file(const ExperimentData& data, const std::string& path);

void write_records(const std::vector<TrialReport>& reports, std::ostream& os);
void write_records_file(const std::vector<TrialReport>& reports, const std::string& path);

// Reads back what write_records wrote; numeric fields round-trip exactly.
std::vector<TrialReport> read_records_file(const std::string& path);

// Recomputes every derived number and flag from the four correlations, k_max
// and N stored in the record, and checks they match the stored ones. A record
// that passes is self-consistent: the flags can be trusted from the file
// alone.
bool record_self_consistent(const TrialReport& report);

// Human-readable summary table, one row per trial.
std::string format_table(const std::vector<TrialReport>& reports);

std::string format_counts(const PairCounts& counts);

}  // namespace eprb
