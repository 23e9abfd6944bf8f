// Multi-seed experiment runner: generates instances, drives the algorithms
// round by round, and aggregates checkpoint statistics across repetitions.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oco/expert_pool.hpp"
#include "oco/instance.hpp"
#include "oco/primal_dual.hpp"
#include "oco/schedule.hpp"

namespace oco {

struct AlgorithmSpec {
    enum class Family {
        Basic,           // the clipped primal-dual algorithm
        Expert,          // the hedge meta-algorithm over N instances
        ZeroPenaltyOgd,  // ablation: penalty forced to zero (projected OGD)
    };

    std::string name;
    Family family = Family::Basic;
    std::optional<Schedule> schedule;  // Basic / ZeroPenaltyOgd
    std::optional<MetaParams> meta;    // Expert

    static AlgorithmSpec basic(std::string name, Schedule schedule);
    static AlgorithmSpec expert(std::string name, MetaParams meta);
    static AlgorithmSpec zero_penalty_ogd(std::string name, Schedule schedule);

    /// Reproduction presets, parameters exactly as in the paper's simulation
    /// tables (resolved against the configured horizon).
    static AlgorithmSpec table2_basic(std::size_t T);
    static AlgorithmSpec table2_expert(std::size_t T);
    static AlgorithmSpec table3_basic();
    static AlgorithmSpec table2_zero_penalty(std::size_t T);
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::OnlineLP;
    std::size_t p = 2;
    std::size_t m = 3;
    std::size_t T = 5000;
    std::size_t repetitions = 50;
    std::uint64_t seed = 42;
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::size_t> checkpoints{625, 1250, 2500, 5000};
    std::string out_dir = "out";

    void validate() const;
};

struct CheckpointRow {
    std::size_t T = 0;
    double cum_loss_mean = 0.0;
    double cum_loss_sd = 0.0;
    double ccv_mean = 0.0;
    double ccv_sd = 0.0;
    double plain_violation_mean = 0.0;
    double regret_static_mean = 0.0;
};

struct AlgorithmDiagnostics {
    // Largest |surrogate self-loss| seen across all rounds and repetitions
    // (expert algorithms only; identically zero in exact arithmetic).
    double max_self_loss = 0.0;
    // Largest violation of the metric sandwich
    // plain <= ||sum clipped|| <= ccv <= sqrt(m) ||sum clipped|| over all
    // repetitions and checkpoints (nonnegative; ~1e-16 scale is rounding).
    double max_sandwich_violation = 0.0;
    // Set when gamma0 exceeds the theoretical 1/(sqrt(2) G) for the
    // instance-derived G (expected for the verbatim reproduction schedules).
    bool gamma0_exceeds_theory = false;
};

struct AlgorithmResult {
    std::string name;
    std::vector<CheckpointRow> rows;  // one per checkpoint, ascending T
    AlgorithmDiagnostics diagnostics;
};

struct ResultTable {
    ExperimentKind kind = ExperimentKind::OnlineLP;
    std::size_t T = 0;
    std::size_t repetitions = 0;
    std::uint64_t seed = 0;
    std::vector<AlgorithmResult> algorithms;
};

/// Run the experiment. Repetitions are independent and executed on `threads`
/// workers (0 = hardware concurrency); aggregation order is fixed by
/// repetition index, so results do not depend on the degree of parallelism.
ResultTable run_experiment(const ExperimentConfig& config, std::size_t threads = 0);

}  // namespace oco
