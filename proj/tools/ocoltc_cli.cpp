// Benchmark-harness CLI: run experiments, fit growth exponents, run the
// certification suites.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oco/certify.hpp"
#include "oco/config.hpp"
#include "oco/emit.hpp"
#include "oco/metrics.hpp"
#include "oco/runner.hpp"

namespace {

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::size_t> reps, std::optional<std::string> out_dir, const std::string& format,
            std::size_t threads) {
    oco::ExperimentConfig config = oco::parse_config_file(config_path);
    if (seed) config.seed = *seed;
    if (reps) config.repetitions = *reps;
    if (out_dir) config.out_dir = *out_dir;

    const oco::ResultTable results = oco::run_experiment(config, threads);
    for (const oco::AlgorithmResult& algo : results.algorithms) {
        if (algo.diagnostics.gamma0_exceeds_theory)
            std::cerr << "warning: " << algo.name
                      << ": gamma0 exceeds the theoretical bound 1/(sqrt(2) G) (reproduction-mode schedule)\n";
    }

    const oco::EmitFormat emit_format =
        format == "svg" ? oco::EmitFormat::SvgLines : oco::EmitFormat::Csv;
    const auto written = oco::emit(results, config.out_dir, emit_format);
    for (const auto& path : written) std::cout << path.string() << "\n";
    return 0;
}

int cmd_exponent(const std::string& csv_path, const std::string& metric) {
    static const std::map<std::string, double oco::CsvRow::*> kMetrics = {
        {"cum_loss_mean", &oco::CsvRow::cum_loss_mean},
        {"ccv_mean", &oco::CsvRow::ccv_mean},
        {"plain_violation_mean", &oco::CsvRow::plain_violation_mean},
        {"regret_static_mean", &oco::CsvRow::regret_static_mean},
    };
    const auto it = kMetrics.find(metric);
    if (it == kMetrics.end()) {
        std::cerr << "error: unknown metric '" << metric << "'\n";
        return 2;
    }

    const std::vector<oco::CsvRow> rows = oco::read_results_csv(csv_path);
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::vector<std::string> order;
    for (const oco::CsvRow& row : rows) {
        if (!series.count(row.algorithm)) order.push_back(row.algorithm);
        series[row.algorithm].emplace_back(static_cast<double>(row.T), row.*(it->second));
    }

    std::cout << "algorithm,metric,exponent,points_used,points_floored\n";
    for (const std::string& name : order) {
        try {
            const oco::GrowthFit fit = oco::growth_exponent(series[name]);
            std::cout << name << ',' << metric << ',' << oco::format_double(fit.exponent) << ',' << fit.used
                      << ',' << fit.floored << "\n";
        } catch (const std::exception& e) {
            std::cout << name << ',' << metric << ",nan,0,0\n";
            std::cerr << "warning: " << name << ": " << e.what() << "\n";
        }
    }
    return 0;
}

int cmd_certify(std::uint64_t seed) {
    const std::vector<oco::CheckLine> lines = oco::run_certification_suite(seed);
    bool all_pass = true;
    for (const oco::CheckLine& line : lines) {
        std::cout << (line.pass ? "PASS " : "FAIL ") << line.name << "  " << line.detail << "\n";
        all_pass = all_pass && line.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Online convex optimization with long-term constraints: clipped primal-dual and expert-tracking "
        "algorithms, violation metrics, and the simulation-study harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::size_t> reps_override;
    std::optional<std::string> out_override;
    std::string format = "csv";
    std::size_t threads = 0;

    CLI::App* run = app.add_subcommand("run", "Execute an experiment config and emit results");
    run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed_override, "Override the config seed");
    run->add_option("--reps", reps_override, "Override the repetition count");
    run->add_option("--out", out_override, "Override the output directory");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
    run->add_option("--threads", threads, "Worker threads (0 = hardware)");

    std::string csv_path;
    std::string metric = "ccv_mean";
    CLI::App* exponent = app.add_subcommand("exponent", "Fit growth exponents from a results CSV");
    exponent->add_option("csv", csv_path, "results.csv produced by run")->required()->check(CLI::ExistingFile);
    exponent->add_option("--metric", metric, "Column to fit (default ccv_mean)");

    std::uint64_t certify_seed = 42;
    CLI::App* certify = app.add_subcommand("certify", "Run the lemma/oracle property suites");
    certify->add_option("--seed", certify_seed, "Suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, seed_override, reps_override, out_override, format, threads);
        if (exponent->parsed()) return cmd_exponent(csv_path, metric);
        if (certify->parsed()) return cmd_certify(certify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
