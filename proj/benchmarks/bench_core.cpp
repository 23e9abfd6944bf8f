// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <benchmark/benchmark.h>

#include "oco/expert_pool.hpp"
#include "oco/instance.hpp"
#include "oco/prox.hpp"
#include "oco/primal_dual.hpp"

using namespace oco;

namespace {

ProblemInstance bench_instance() { return generate_instance(2, 3, 5000, 42, 0); }

void BM_ProxZeroPenalty(benchmark::State& state) {
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle g = ConstraintOracle::affine(Mat(3, 2, {1.0, 0.2, 0.4, 1.0, 0.9, 0.9}), {0.5, 0.5, 0.5});
    ProxProblem problem{box, g, {0.1, -0.2}, {1.0, -2.0}, 0.05, {0.0, 0.0, 0.0}};
    for (auto _ : state) benchmark::DoNotOptimize(solve_prox(problem).point);
}
BENCHMARK(BM_ProxZeroPenalty);

void BM_ProxAffineDual(benchmark::State& state) {
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle g = ConstraintOracle::affine(Mat(3, 2, {1.0, 0.2, 0.4, 1.0, 0.9, 0.9}), {0.1, 0.2, 0.3});
    ProxProblem problem{box, g, {0.8, 0.7}, {1.0, -2.0}, 0.05, {2.0, 1.0, 3.0}};
    for (auto _ : state) benchmark::DoNotOptimize(solve_prox(problem).point);
}
BENCHMARK(BM_ProxAffineDual);

void BM_BruteForceProx(benchmark::State& state) {
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle g = ConstraintOracle::affine(Mat(3, 2, {1.0, 0.2, 0.4, 1.0, 0.9, 0.9}), {0.1, 0.2, 0.3});
    ProxProblem problem{box, g, {0.8, 0.7}, {1.0, -2.0}, 0.05, {2.0, 1.0, 3.0}};
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_prox(problem, 5e-3).point);
}
BENCHMARK(BM_BruteForceProx);

void BM_BasicStep(benchmark::State& state) {
    const ProblemInstance inst = bench_instance();
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle g = ConstraintOracle::affine(inst.A, inst.b);
    ClippedPrimalDual::Options options;
    options.keep_trace = false;
    ClippedPrimalDual algo(box, g, Schedule::fixed_horizon_convex(2.0, 0.5, 5000, std::sqrt(2.0)), Vec{0.0, 0.0},
                           options);
    std::size_t t = 1;
    for (auto _ : state) {
        algo.step(losses.subgradient(1 + (t++ % 4999), algo.decision()));
        benchmark::DoNotOptimize(algo.decision());
    }
}
BENCHMARK(BM_BasicStep);

void BM_ExpertPoolStep(benchmark::State& state) {
    const ProblemInstance inst = bench_instance();
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle g = ConstraintOracle::affine(inst.A, inst.b);
    ClippedPrimalDual::Options options;
    options.keep_trace = false;
    ExpertPool pool(box, g, MetaParams::from_theorem3(5000, 0.5, 0.5, 2.0, 3.0, 0.1), Vec{0.0, 0.0}, options);
    std::size_t t = 1;
    for (auto _ : state) {
        pool.step(losses.subgradient(1 + (t++ % 4999), pool.decision()));
        benchmark::DoNotOptimize(pool.decision());
    }
}
BENCHMARK(BM_ExpertPoolStep);

}  // namespace

BENCHMARK_MAIN();
