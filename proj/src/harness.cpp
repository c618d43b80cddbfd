#include "eprb/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "eprb/quad_solver.hpp"
#include "eprb/rng.hpp"
#include "eprb/statistics.hpp"

namespace eprb {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::string run_id_for(const std::string& source, const GeneratorSpec* spec, int trial) {
    std::string canon = "source=" + source + ";trial=" + std::to_string(trial);
    if (spec) {
        char buf[160];
        std::snprintf(buf, sizeof buf, ";kind=%s;n=%llu;seed=%llu;c=%.17g,%.17g,%.17g,%.17g",
                      generator_kind_name(spec->kind),
                      static_cast<unsigned long long>(spec->n_pairs),
                      static_cast<unsigned long long>(spec->seed), spec->coeff[0],
                      spec->coeff[1], spec->coeff[2], spec->coeff[3]);
        canon += buf;
    }
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char ch : canon) {
        h ^= static_cast<std::uint8_t>(ch);
        h *= 0x100000001B3ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

}  // namespace

GeneratorSpec preset_spec(const std::string& name) {
    GeneratorSpec spec;
    spec.n_pairs = kDefaultPairs;
    spec.seed = kDefaultSeed;
    if (name == "quadruple") {
        spec.kind = GeneratorKind::QuadrupleRandom;
    } else if (name == "iid") {
        spec.kind = GeneratorKind::IndependentRandom;
    } else if (name == "singlet") {
        spec.kind = GeneratorKind::CorrelatedPairs;
        spec.coeff = {kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2};
    } else if (name == "bell-malus") {
        spec.kind = GeneratorKind::CorrelatedPairs;
        spec.coeff = {0.5 * kInvSqrt2, -0.5 * kInvSqrt2, 0.5 * kInvSqrt2, 0.5 * kInvSqrt2};
    } else {
        throw UsageError("unknown preset '" + name +
                         "' (expected quadruple, iid, singlet, or bell-malus)");
    }
    return spec;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"quadruple", "iid", "singlet", "bell-malus"};
    return names;
}

std::vector<TrialReport> run_experiment(const RunConfig& config) {
    if (config.generator.has_value() == config.input_file.has_value())
        throw UsageError("exactly one data source (generator or input file) must be set");
    if (config.trials < 1) throw UsageError("trials must be >= 1");

    std::string source = config.source_label;
    if (source.empty())
        source = config.generator
                     ? std::string("generator:") + generator_kind_name(config.generator->kind)
                     : "file:" + *config.input_file;

    std::vector<TrialReport> reports;
    reports.reserve(config.trials);
    for (int t = 0; t < config.trials; ++t) {
        const auto t0 = std::chrono::steady_clock::now();

        GeneratorSpec trial_spec;
        ExperimentData data;
        if (config.generator) {
            trial_spec = *config.generator;
            trial_spec.seed += static_cast<std::uint64_t>(t);
            data = generate(trial_spec);
        } else {
            data = load_experiment_file(*config.input_file);
        }

        const CorrelationSet corr = correlations(data);
        const ChshStatistics chsh = s_chsh(corr);
        const PairCounts counts = aggregate_counts(data);
        const QuadResult quad = solve_quadruples(counts);
        const InequalityCheck check = verify_inequality(corr, quad);

        const auto t1 = std::chrono::steady_clock::now();

        TrialReport r;
        r.trial = t;
        r.run_id = run_id_for(source, config.generator ? &trial_spec : nullptr, t);
        r.source = source;
        r.rng_name = config.generator ? kRngName : "none";
        r.kind = config.generator ? generator_kind_name(trial_spec.kind) : "file";
        r.seed = config.generator ? trial_spec.seed : 0;
        r.n_pairs = config.generator ? trial_spec.n_pairs : 0;
        r.coeff = config.generator ? trial_spec.coeff : std::array<double, 4>{};
        r.n_common = corr.n;
        r.correlation = corr.value;
        r.c_plus = check.c_plus;
        r.c_minus = check.c_minus;
        r.s_chsh = check.s_chsh;
        r.negated_slot = chsh.negated_slot;
        r.k_max = quad.k_max;
        r.delta = quad.delta;
        r.bound = check.bound;
        r.lp_value = quad.lp_value;
        r.method = solve_method_name(quad.method);
        r.ok_c_plus = check.c_plus_ok;
        r.ok_c_minus = check.c_minus_ok;
        r.ok_s_chsh = check.s_chsh_ok;
        r.chsh2_applicable = check.chsh2_applicable;
        r.ok_chsh2 = check.chsh2_ok;
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (config.emit_counts) r.counts = counts;
        reports.push_back(std::move(r));

        if (config.data_out && t == 0) save_experiment_file(data, *config.data_out);
    }

    if (config.records_out) write_records_file(reports, *config.records_out);
    return reports;
}

}  // namespace eprb
