// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "oco/expert_pool.hpp"
#include "oco/instance.hpp"
#include "oco/rng.hpp"

using namespace oco;

namespace {

struct Setup {
    ProblemInstance inst;
    FeasibleSet set;
    ConstraintOracle constraints;
};

Setup make_setup(std::size_t T, std::uint64_t seed) {
    ProblemInstance inst = generate_instance(2, 3, T, seed, 0);
    FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
    ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
    return {std::move(inst), std::move(set), std::move(constraints)};
}

}  // namespace

TEST_CASE("expert count from the meta recipe") {
    const MetaParams p = MetaParams::from_theorem3(5000, 0.5, 0.5, 2.0, 3.0, 0.1);
    CHECK(p.expert_count == 8);  // ceil(0.5 log2(5001)) + 1
    CHECK(p.beta == doctest::Approx(3.0 / std::sqrt(5000.0)));
    CHECK(p.expert_schedules.size() == 8);
    // stepsizes double: alpha_{i,1} = alpha0 2^{i-1}
    CHECK(p.expert_schedules[1].alpha(1) == doctest::Approx(2.0 * p.expert_schedules[0].alpha(1)));
    CHECK(p.expert_schedules[7].alpha(3) == doctest::Approx(128.0 * p.expert_schedules[0].alpha(3)));

    CHECK(MetaParams::from_theorem3(5000, 0.0, 0.5, 2.0, 3.0, 0.1).expert_count == 1);
    CHECK_THROWS_AS(MetaParams::from_theorem3(5000, 0.6, 0.5, 2.0, 3.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(MetaParams::from_theorem3(5000, 0.5, 1.0, 2.0, 3.0, 0.1), std::invalid_argument);
}

TEST_CASE("fixed-horizon expert family divides by T^c instead of t^c") {
    const MetaParams p =
        MetaParams::from_theorem3(100, 0.5, 0.5, 1.0, 1.0, 0.1, ExpertStepFamily::FixedHorizonT);
    CHECK(p.expert_schedules[0].alpha(1) == p.expert_schedules[0].alpha(100));
    const MetaParams q = MetaParams::from_theorem3(100, 0.5, 0.5, 1.0, 1.0, 0.1, ExpertStepFamily::PerRoundT);
    CHECK(q.expert_schedules[0].alpha(100) < q.expert_schedules[0].alpha(1));
}

TEST_CASE("initial weights telescope to one") {
    const std::vector<double> w3 = initial_expert_weights(3);
    CHECK(w3[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(w3[1] == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(w3[2] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(w3[0] + w3[1] + w3[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(initial_expert_weights(1) == std::vector<double>{1.0});
    for (std::size_t n : {2, 5, 13, 40}) {
        double total = 0.0;
        for (double w : initial_expert_weights(n)) total += w;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("pool starts with the combined point equal to x1") {
    const Setup s = make_setup(10, 1);
    const MetaParams p = MetaParams::from_theorem3(10, 0.5, 0.5, 2.0, 3.0, 0.3);
    ExpertPool pool(s.set, s.constraints, p, Vec{0.25, -0.5});
    CHECK(pool.decision() == Vec{0.25, -0.5});
    CHECK(pool.expert_count() == p.expert_count);
}

TEST_CASE("multiplicative weight update matches hand computation") {
    // Two experts with equal current weights. Equal losses leave the weights
    // unchanged; l = (0, ln 2) with beta = 1 gives (2/3, 1/3).
    auto hedge = [](std::vector<double> w, const std::vector<double>& losses, double beta) {
        double total = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] *= std::exp(-beta * losses[i]);
            total += w[i];
        }
        for (double& wi : w) wi /= total;
        return w;
    };
    const auto unchanged = hedge({0.5, 0.5}, {0.0, 0.0}, 3.7);
    CHECK(unchanged[0] == doctest::Approx(0.5).epsilon(1e-15));
    const auto updated = hedge({0.5, 0.5}, {0.0, std::log(2.0)}, 1.0);
    CHECK(updated[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(updated[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("pool weights stay on the simplex and match the closed form") {
    const std::size_t T = 150;
    const Setup s = make_setup(T, 3);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, s.inst);
    const MetaParams p = MetaParams::from_theorem3(T, 0.5, 0.5, 2.0, 3.0, 0.1);
    ExpertPool pool(s.set, s.constraints, p, Vec{0.0, 0.0});
    for (std::size_t t = 1; t < T; ++t) pool.step(losses.subgradient(t, pool.decision()));

    const HedgeTrace& trace = pool.trace();
    const std::vector<double> w1 = initial_expert_weights(p.expert_count);
    std::vector<double> cum(p.expert_count, 0.0);
    for (std::size_t step = 0; step < trace.surrogate_losses.size(); ++step) {
        const std::vector<double>& w = trace.weights[step + 1];
        double total = 0.0;
        for (double wi : w) {
            CHECK(wi > 0.0);
            total += wi;
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);

        for (std::size_t i = 0; i < cum.size(); ++i) cum[i] += trace.surrogate_losses[step][i];
        double z = 0.0;
        std::vector<double> closed(p.expert_count);
        for (std::size_t i = 0; i < cum.size(); ++i) {
            closed[i] = w1[i] * std::exp(-pool.beta() * cum[i]);
            z += closed[i];
        }
        for (std::size_t i = 0; i < cum.size(); ++i)
            CHECK(std::abs(w[i] - closed[i] / z) / (closed[i] / z) <= 1e-9);
    }
}

TEST_CASE("surrogate self-loss is zero and the combined point stays feasible") {
    const std::size_t T = 120;
    const Setup s = make_setup(T, 4);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineQP, s.inst);
    const MetaParams p = MetaParams::from_theorem3(T, 0.4, 0.5, 1.0, 2.0, 0.05);
    ExpertPool pool(s.set, s.constraints, p, Vec{0.0, 0.0});
    for (std::size_t t = 1; t < T; ++t) {
        pool.step(losses.subgradient(t, pool.decision()));
        CHECK(s.set.contains(pool.decision(), 1e-12));
    }
    CHECK(pool.max_abs_self_loss() <= 1e-12);
    for (double v : pool.trace().self_losses) CHECK(v == 0.0);
}

TEST_CASE("N = 1 pool reproduces the basic algorithm bit for bit") {
    const std::size_t T = 80;
    const Setup s = make_setup(T, 5);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, s.inst);
    const Schedule schedule = Schedule::anytime_dynamic(2.0, 0.5, std::sqrt(2.0));

    ExpertPool pool(s.set, s.constraints, MetaParams::uniform(1, 0.5, schedule), Vec{0.0, 0.0});
    ClippedPrimalDual basic(s.set, s.constraints, schedule, Vec{0.0, 0.0});
    for (std::size_t t = 1; t < T; ++t) {
        const Vec g = losses.subgradient(t, basic.decision());
        pool.step(g);
        basic.step(g);
        CHECK(pool.decision() == basic.decision());
    }
}

TEST_CASE("uniform expert schedules collapse to the basic algorithm even for QP losses") {
    // All experts share one schedule (the simulation-table parameterization),
    // so the pool's combined decision must equal the single-instance run
    // exactly, including when the gradient depends on the query point.
    const std::size_t T = 100;
    const Setup s = make_setup(T, 6);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineQP, s.inst);
    const Schedule schedule = Schedule::strongly_convex(1.0 / 6.0, std::sqrt(6.0));

    ExpertPool pool(s.set, s.constraints, MetaParams::uniform(8, 3.0 / std::sqrt(100.0), schedule),
                    Vec{0.0, 0.0});
    ClippedPrimalDual basic(s.set, s.constraints, schedule, Vec{0.0, 0.0});
    for (std::size_t t = 1; t < T; ++t) {
        pool.step(losses.subgradient(t, pool.decision()));
        basic.step(losses.subgradient(t, basic.decision()));
        CHECK(pool.decision() == basic.decision());
    }
}

TEST_CASE("surrogate regret dominates true regret per round for convex losses") {
    const std::size_t T = 60;
    const Setup s = make_setup(T, 7);
    for (ExperimentKind kind : {ExperimentKind::OnlineLP, ExperimentKind::OnlineQP}) {
        const LossOracle losses = instance_losses(kind, s.inst);
        SplitMix64 rng(7, 0, "surrogate_domination");
        for (std::size_t t = 1; t <= T; ++t) {
            const Vec x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const Vec y{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const double surrogate_gap = dot(losses.subgradient(t, x), sub(x, y));
            CHECK(surrogate_gap >= losses.value(t, x) - losses.value(t, y) - 1e-10);
        }
    }
}
