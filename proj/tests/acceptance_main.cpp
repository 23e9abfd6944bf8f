// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oco/certify.hpp"
#include "oco/config.hpp"
#include "oco/emit.hpp"
#include "oco/metrics.hpp"
#include "oco/runner.hpp"

namespace fs = std::filesystem;

namespace {

int g_lines = 0;
int g_failures = 0;

void report(const char* label, bool pass, const std::string& name, const std::string& detail) {
    ++g_lines;
    std::printf("[%3s] %s  %s  (%s)\n", label, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The online-LP reproduction command: Table 2 parameters, c = 0.5, T = 5000,
// 50 repetitions, seed 42.
const char* kLpConfig =
    "kind        = online_lp\n"
    "p           = 2\n"
    "m           = 3\n"
    "T           = 5000\n"
    "repetitions = 50\n"
    "seed        = 42\n"
    "checkpoints = 625, 1250, 2500, 5000\n"
    "algorithms  = table2_basic table2_expert zero_penalty_ogd\n"
    "out_dir     = acceptance_scratch/lp_a\n";

struct LpArtifacts {
    std::vector<oco::CsvRow> rows;
    bool byte_identical = false;
    bool via_cli = false;
};

std::optional<LpArtifacts> run_lp_via_cli(const fs::path& scratch) {
    const char* cli = std::getenv("OCOLTC_CLI");
    if (!cli || !fs::exists(cli)) return std::nullopt;

    const fs::path config_path = scratch / "online_lp_table2.cfg";
    std::ofstream(config_path) << kLpConfig;

    const fs::path out_a = scratch / "lp_a";
    const fs::path out_b = scratch / "lp_b";
    const std::string base = std::string(cli) + " run --config " + config_path.string();
    if (std::system((base + " --out " + out_a.string() + " > /dev/null 2>&1").c_str()) != 0) return std::nullopt;
    if (std::system((base + " --out " + out_b.string() + " > /dev/null 2>&1").c_str()) != 0) return std::nullopt;

    LpArtifacts artifacts;
    artifacts.via_cli = true;
    const std::string csv_a = read_file(out_a / "results.csv");
    artifacts.byte_identical = !csv_a.empty() && csv_a == read_file(out_b / "results.csv");
    artifacts.rows = oco::read_results_csv(out_a / "results.csv");
    return artifacts;
}

LpArtifacts run_lp_in_process(const fs::path& scratch) {
    oco::ExperimentConfig config = oco::parse_config_text(kLpConfig);
    const oco::ResultTable results = oco::run_experiment(config);
    const std::string csv = oco::results_csv(results);
    const fs::path path = scratch / "lp_inprocess.csv";
    std::ofstream(path, std::ios::binary) << csv;
    LpArtifacts artifacts;
    artifacts.byte_identical = csv == oco::results_csv(oco::run_experiment(config));
    artifacts.rows = oco::read_results_csv(path);
    return artifacts;
}

std::vector<std::pair<double, double>> series(const std::vector<oco::CsvRow>& rows, const std::string& algo) {
    std::vector<std::pair<double, double>> out;
    for (const oco::CsvRow& row : rows)
        if (row.algorithm == algo) out.emplace_back(static_cast<double>(row.T), row.ccv_mean);
    return out;
}

const oco::CsvRow* find_row(const std::vector<oco::CsvRow>& rows, const std::string& algo, std::size_t T) {
    for (const oco::CsvRow& row : rows)
        if (row.algorithm == algo && row.T == T) return &row;
    return nullptr;
}

}  // namespace

int main() {
    const std::uint64_t seed = 42;
    const fs::path scratch = "acceptance_scratch";
    fs::create_directories(scratch);

    // 1. Prox oracle equivalence.
    {
        const oco::ProxEquivalenceResult r = oco::certify_prox_oracle_equivalence(200, seed);
        report(r.failures == 0 && r.elapsed_seconds < 60.0, "prox oracle equivalence (200 instances, +1e-3)",
               "max_excess=" + fmt(r.max_excess) + ", elapsed=" + fmt(r.elapsed_seconds) + "s");
    }

    // 2. Lemma A.1 variational-inequality certificate.
    {
        const oco::ViCertificateResult r = oco::certify_prox_variational_inequality(50, 100, seed);
        report(r.max_violation <= r.slack, "prox variational inequality (50x100, slack 10*tol)",
               "max_violation=" + fmt(r.max_violation) + " vs slack=" + fmt(r.slack));
    }

    // 3. Dual-state invariants on a T = 2000 online-LP run.
    oco::DualInvariantsResult dual;
    {
        dual = oco::certify_dual_invariants(2000, seed);
        report(dual.q_nonnegative && dual.q_nondecreasing && dual.telescoping_rel_err <= 1e-9,
               "dual-state invariants (T=2000): q >= 0 nondecreasing, telescoping 1e-9",
               "telescoping_rel_err=" + fmt(dual.telescoping_rel_err));
    }

    // 4. Hedge invariants on 50 synthetic runs.
    oco::HedgeInvariantsResult hedge;
    {
        hedge = oco::certify_hedge_invariants(50, 200, seed);
        report(hedge.max_simplex_error <= 1e-12 && hedge.max_closed_form_rel_err <= 1e-9 &&
                   hedge.max_bound_violation <= 0.0,
               "hedge invariants (50 runs, T=200): simplex 1e-12, closed form 1e-9, tracking bound",
               "simplex=" + fmt(hedge.max_simplex_error) + ", closed_form=" + fmt(hedge.max_closed_form_rel_err) +
                   ", bound_violation=" + fmt(hedge.max_bound_violation));
    }

    // 5. Lemma 1 aggregate inequality on a T = 500 online-LP run.
    {
        const oco::Lemma1AggregateResult r = oco::certify_lemma1_aggregate(500, seed);
        report(r.lhs <= r.rhs + r.slack_budget, "lemma 1 aggregate inequality (T=500, feasible comparator)",
               "lhs=" + fmt(r.lhs) + " <= rhs=" + fmt(r.rhs) + " + " + fmt(r.slack_budget));
    }

    // 6. Online LP reproduction (Table 2 parameters, seed 42, 50 repetitions).
    std::optional<LpArtifacts> lp = run_lp_via_cli(scratch);
    if (!lp) lp = run_lp_in_process(scratch);
    const oco::CsvRow* alg1_first = find_row(lp->rows, "alg1_table2", 625);
    const oco::CsvRow* alg1_last = find_row(lp->rows, "alg1_table2", 5000);
    const oco::CsvRow* alg2_last = find_row(lp->rows, "alg2_table2", 5000);
    {
        const bool have = alg1_first && alg1_last && alg2_last;
        const bool ordering = have && alg2_last->cum_loss_mean <= alg1_last->cum_loss_mean;
        report(ordering, "online LP: meta-algorithm cumulative loss <= basic at T=5000",
               have ? "alg2=" + fmt(alg2_last->cum_loss_mean) + ", alg1=" + fmt(alg1_last->cum_loss_mean)
                    : "missing rows");

        double exponent = 1e9;
        bool fit_ok = false;
        try {
            exponent = oco::growth_exponent(series(lp->rows, "alg1_table2")).exponent;
            fit_ok = true;
        } catch (const std::exception&) {
        }
        report(fit_ok && exponent <= 0.6, "online LP: basic algorithm ccv growth exponent <= 0.6",
               "exponent=" + fmt(exponent));

        const bool sublinear =
            have && alg1_last->regret_static_mean / 5000.0 < alg1_first->regret_static_mean / 625.0;
        report(sublinear, "online LP: static regret per round shrinks from T=625 to T=5000",
               have ? "regret/T: " + fmt(alg1_first->regret_static_mean / 625.0) + " -> " +
                          fmt(alg1_last->regret_static_mean / 5000.0)
                    : "missing rows");
    }

    // 7. Online QP reproduction (Table 3 parameters).
    oco::ResultTable qp;
    {
        oco::ExperimentConfig config;
        config.kind = oco::ExperimentKind::OnlineQP;
        config.T = 5000;
        config.repetitions = 50;
        config.seed = seed;
        config.checkpoints = {625, 1250, 2500, 5000};
        config.algorithms = {oco::AlgorithmSpec::table3_basic()};
        qp = oco::run_experiment(config);
        std::vector<std::pair<double, double>> pts;
        for (const oco::CheckpointRow& row : qp.algorithms[0].rows)
            pts.emplace_back(static_cast<double>(row.T), row.ccv_mean);
        double exponent = 1e9;
        bool fit_ok = false;
        try {
            exponent = oco::growth_exponent(pts).exponent;
            fit_ok = true;
        } catch (const std::exception&) {
        }
        report(fit_ok && exponent <= 0.35, "online QP: ccv growth exponent <= 0.35 (log-growth regime)",
               "exponent=" + fmt(exponent));
    }

    // 8. Metric sandwich on every acceptance run's records.
    {
        double worst = dual.sandwich_max_violation;
        for (const oco::AlgorithmResult& algo : qp.algorithms)
            worst = std::max(worst, algo.diagnostics.max_sandwich_violation);
        // LP runs: re-derive diagnostics in-process (CLI emits only the CSV).
        oco::ExperimentConfig config = oco::parse_config_text(kLpConfig);
        config.repetitions = 50;
        const oco::ResultTable lp_table = oco::run_experiment(config);
        double max_self_loss = 0.0;
        for (const oco::AlgorithmResult& algo : lp_table.algorithms) {
            worst = std::max(worst, algo.diagnostics.max_sandwich_violation);
            max_self_loss = std::max(max_self_loss, algo.diagnostics.max_self_loss);
        }
        report(worst <= 1e-9, "metric sandwich plain <= ||sum clip|| <= ccv <= sqrt(m)||sum clip||",
               "max_violation=" + fmt(worst));

        // 9. Determinism: rerunning criterion 6's command is byte-identical.
        report(lp->byte_identical,
               lp->via_cli ? "byte-identical CSV across two CLI runs of the LP command"
                           : "byte-identical CSV across two in-process LP runs (CLI unavailable)",
               lp->via_cli ? "cli" : "in-process");

        // 10. Surrogate self-loss at the combined point.
        max_self_loss = std::max(max_self_loss, hedge.max_self_loss);
        report(max_self_loss <= 1e-12, "surrogate self-loss zero (1e-12) on every meta-algorithm run",
               "max=" + fmt(max_self_loss));
    }

    std::printf("%d/%d acceptance criteria passed\n", g_criterion - g_failures, g_criterion);
    return g_failures == 0 ? 0 : 1;
}
