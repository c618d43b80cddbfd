// eprb: generate or ingest four-setting EPRB data, compute CHSH-type
// statistics and the maximum quadruple fraction, and check the bound
// against 4 - 2*Delta.
//
//   eprb reproduce singlet
//   eprb generate --kind correlated --c1 0.7 --c2 -0.7 --c3 0.7 --c4 0.7
//   eprb analyze pairs.csv --out report.txt
//
// Exit codes: 0 success, 1 usage/parse/I-O, 2 validation, 3 solver failure.

#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "eprb/harness.hpp"
#include "eprb/quad_solver.hpp"

namespace {

struct CliOptions {
    std::string kind = "iid";
    std::string preset;
    std::string input_file;
    std::uint64_t n_pairs = eprb::kDefaultPairs;
    std::uint64_t seed = eprb::kDefaultSeed;
    int trials = 1;
    std::array<double, 4> coeff{};
    std::string out;
    std::string data_out;
    bool emit_counts = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--trials", opt.trials, "Number of repetitions; trial t uses seed + t");
    cmd->add_option("--out", opt.out, "Write machine-readable records to this file");
    cmd->add_flag("--emit-counts", opt.emit_counts, "Print the per-setting pair tallies");
}

int run(const eprb::RunConfig& config) {
    const std::vector<eprb::TrialReport> reports = eprb::run_experiment(config);
    std::cout << eprb::format_table(reports);
    if (config.emit_counts) {
        for (const eprb::TrialReport& r : reports) {
            if (!r.counts) continue;
            std::printf("\npair counts, trial %d:\n%s", r.trial,
                        eprb::format_counts(*r.counts).c_str());
        }
    }
    bool all_ok = true;
    for (const auto& r : reports)
        all_ok = all_ok && r.ok_c_plus && r.ok_c_minus && r.ok_s_chsh && r.ok_chsh2;
    if (!all_ok) std::fprintf(stderr, "warning: an inequality flag is false; see table\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EPRB data analysis: correlations, CHSH statistics, and the "
                 "maximum quadruple fraction"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* generate = app.add_subcommand("generate", "Generate data and analyze it");
    generate->add_option("--kind", opt.kind,
                         "Generator: quadruple | iid | correlated");
    generate->add_option("--n", opt.n_pairs, "Pairs per data set");
    generate->add_option("--seed", opt.seed, "Base seed");
    generate->add_option("--c1", opt.coeff[0], "Coefficient for setting ac (correlated only)");
    generate->add_option("--c2", opt.coeff[1], "Coefficient for setting ad");
    generate->add_option("--c3", opt.coeff[2], "Coefficient for setting bc");
    generate->add_option("--c4", opt.coeff[3], "Coefficient for setting bd");
    generate->add_option("--data-out", opt.data_out, "Also write the generated pairs (trial 0)");
    add_common_flags(generate, opt);

    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a pairs file");
    analyze->add_option("file", opt.input_file, "Pairs file: setting,A,B per line")->required();
    add_common_flags(analyze, opt);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Run a named preset: quadruple | iid | singlet | bell-malus");
    reproduce->add_option("preset", opt.preset, "Preset name")->required();
    reproduce->add_option("--n", opt.n_pairs, "Override pairs per data set");
    reproduce->add_option("--seed", opt.seed, "Override base seed");
    reproduce->add_option("--data-out", opt.data_out, "Also write the generated pairs (trial 0)");
    add_common_flags(reproduce, opt);

    try {
        app.parse(argc, argv);

        eprb::RunConfig config;
        config.trials = opt.trials;
        config.emit_counts = opt.emit_counts;
        if (!opt.out.empty()) config.records_out = opt.out;
        if (!opt.data_out.empty()) config.data_out = opt.data_out;

        if (generate->parsed()) {
            eprb::GeneratorSpec spec;
            spec.kind = eprb::parse_generator_kind(opt.kind);
            spec.n_pairs = opt.n_pairs;
            spec.seed = opt.seed;
            spec.coeff = opt.coeff;
            config.generator = spec;
        } else if (analyze->parsed()) {
            config.input_file = opt.input_file;
        } else {
            eprb::GeneratorSpec spec = eprb::preset_spec(opt.preset);
            if (reproduce->count("--n") > 0) spec.n_pairs = opt.n_pairs;
            if (reproduce->count("--seed") > 0) spec.seed = opt.seed;
            config.generator = spec;
            config.source_label = "preset:" + opt.preset;
        }
        return run(config);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const eprb::SolverStall& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const eprb::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const eprb::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const eprb::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const eprb::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
