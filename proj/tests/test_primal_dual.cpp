// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "oco/instance.hpp"
#include "oco/metrics.hpp"
#include "oco/primal_dual.hpp"

using namespace oco;

namespace {

struct LpSetup {
    ProblemInstance inst;
    FeasibleSet set;
    ConstraintOracle constraints;
    LossOracle losses;
};

LpSetup lp_setup(std::size_t T, std::uint64_t seed) {
    ProblemInstance inst = generate_instance(2, 3, T, seed, 0);
    FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
    ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
    LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
    return {std::move(inst), std::move(set), std::move(constraints), std::move(losses)};
}

void drive(ClippedPrimalDual& algo, const LossOracle& losses, std::size_t steps) {
    for (std::size_t t = 1; t <= steps; ++t) algo.step(losses.subgradient(t, algo.decision()));
}

}  // namespace

TEST_CASE("dual recurrence") {
    DualState dual{{1.0, 0.0, 2.0}, {1.0, 0.0, 2.0}};
    advance_dual(dual, 2.0, {0.5, 0.0, 1.0});
    CHECK(dual.q == Vec{2.0, 0.0, 4.0});
    CHECK(dual.q_hat == Vec{3.0, 0.0, 6.0});
}

TEST_CASE("initialization: q = 0, round 1, dimensions propagate") {
    const LpSetup s = lp_setup(10, 3);
    ClippedPrimalDual algo(s.set, s.constraints, Schedule::anytime_dynamic(1.0, 0.5, 1.0), Vec{0.0, 0.0});
    CHECK(algo.round() == 1);
    CHECK(algo.dual().q == Vec(3, 0.0));
    CHECK(algo.dual().q_hat == Vec(3, 0.0));
    CHECK(algo.decision() == Vec{0.0, 0.0});

    CHECK_THROWS_AS(
        ClippedPrimalDual(s.set, s.constraints, Schedule::anytime_dynamic(1.0, 0.5, 1.0), Vec{2.0, 0.0}),
        std::invalid_argument);
}

TEST_CASE("never-active constraints reduce to projected online gradient descent") {
    // b >> 0 keeps every decision strictly feasible, so q stays 0 and each
    // step is the exact zero-penalty closed form.
    const FeasibleSet box = FeasibleSet::symmetric_box(2, 1.0);
    const ConstraintOracle constraints =
        ConstraintOracle::affine(Mat(3, 2, {1.0, 0.0, 0.0, 1.0, 1.0, 1.0}), {100.0, 100.0, 100.0});
    const Schedule schedule = Schedule::anytime_dynamic(2.0, 0.5, 1.0);
    ClippedPrimalDual algo(box, constraints, schedule, Vec{0.1, -0.2});

    Vec x{0.1, -0.2};
    const Vec grads[] = {{1.0, 0.5}, {-0.3, 2.0}, {0.7, -0.7}};
    for (std::size_t t = 1; t <= 3; ++t) {
        algo.step(grads[t - 1]);
        const double a = schedule.alpha(t);
        x = box.project({x[0] - 0.5 * a * grads[t - 1][0], x[1] - 0.5 * a * grads[t - 1][1]});
        CHECK(algo.decision() == x);
        CHECK(algo.dual().q == Vec(3, 0.0));
    }
}

TEST_CASE("q is nonnegative and componentwise nondecreasing") {
    const LpSetup s = lp_setup(300, 11);
    ClippedPrimalDual algo(s.set, s.constraints, Schedule::anytime_dynamic(2.0, 0.5, std::sqrt(2.0)),
                           Vec{0.0, 0.0});
    drive(algo, s.losses, 300);
    const PrimalDualTrace& trace = algo.trace();
    for (std::size_t t = 0; t < trace.duals.size(); ++t) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(trace.duals[t][j] >= 0.0);
            if (t > 0) CHECK(trace.duals[t][j] >= trace.duals[t - 1][j]);
        }
    }
}

TEST_CASE("l1 telescoping identity is exact and the norm bound holds") {
    const LpSetup s = lp_setup(400, 5);
    ClippedPrimalDual algo(s.set, s.constraints, Schedule::anytime_dynamic(2.0, 0.5, std::sqrt(2.0)),
                           Vec{0.0, 0.0});
    drive(algo, s.losses, 400);
    const CertificateSides tele = dual_telescoping_sides(algo.trace());
    CHECK(std::abs(tele.lhs - tele.rhs) <= 1e-9 * std::max({1.0, std::abs(tele.lhs), std::abs(tele.rhs)}));
    const CertificateSides bound = dual_norm_bound_sides(algo.trace(), 3);
    CHECK(bound.lhs <= bound.rhs + 1e-9);
}

TEST_CASE("identical inputs give identical decision sequences") {
    const LpSetup s = lp_setup(120, 21);
    const Schedule schedule = Schedule::fixed_horizon_convex(2.0, 0.5, 120, std::sqrt(2.0));
    ClippedPrimalDual a(s.set, s.constraints, schedule, Vec{0.0, 0.0});
    ClippedPrimalDual b(s.set, s.constraints, schedule, Vec{0.0, 0.0});
    drive(a, s.losses, 120);
    drive(b, s.losses, 120);
    REQUIRE(a.trace().decisions.size() == b.trace().decisions.size());
    for (std::size_t i = 0; i < a.trace().decisions.size(); ++i)
        CHECK(a.trace().decisions[i] == b.trace().decisions[i]);
}

TEST_CASE("lemma 1 certificate: regret against self is zero") {
    const LpSetup s = lp_setup(50, 31);
    // Constraints never active here, so realized decisions are feasible
    // comparators.
    const ConstraintOracle inactive =
        ConstraintOracle::affine(Mat(3, 2, {1.0, 0.0, 0.0, 1.0, 1.0, 1.0}), {100.0, 100.0, 100.0});
    ClippedPrimalDual algo(s.set, inactive, Schedule::fixed_horizon_convex(2.0, 0.5, 50, 0.1), Vec{0.0, 0.0});
    drive(algo, s.losses, 50);

    std::vector<Vec> self(algo.trace().decisions.begin(), algo.trace().decisions.begin() + 49);
    const CertificateSides sides = lemma1_certificate(algo.trace(), self, s.losses, inactive, s.set, 10.0);
    CHECK(sides.lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sides.rhs >= 0.0);
}

TEST_CASE("lemma 1 certificate: single-round expansion") {
    const LpSetup s = lp_setup(5, 41);
    const ConstraintOracle inactive =
        ConstraintOracle::affine(Mat(3, 2, {1.0, 0.0, 0.0, 1.0, 1.0, 1.0}), {100.0, 100.0, 100.0});
    const Schedule schedule = Schedule::fixed_horizon_convex(1.0, 0.5, 5, 0.1);
    ClippedPrimalDual algo(s.set, inactive, schedule, Vec{0.0, 0.0});
    drive(algo, s.losses, 1);

    const Vec y{0.25, -0.5};
    const double G = 10.0;
    const CertificateSides sides = lemma1_certificate(algo.trace(), {y}, s.losses, inactive, s.set, G);
    const Vec& x1 = algo.trace().decisions[0];
    const Vec& x2 = algo.trace().decisions[1];
    const double alpha1 = schedule.alpha(1);
    const double delta1 = (squared_distance(y, x1) - squared_distance(y, x2)) / alpha1;
    CHECK(sides.rhs == doctest::Approx(delta1 + 0.5 * G * G * alpha1).epsilon(1e-12));
    CHECK(sides.lhs == doctest::Approx(s.losses.value(1, x1) - s.losses.value(1, y)).epsilon(1e-12));
}

TEST_CASE("lemma 1 aggregate inequality on a short run with a feasible comparator") {
    const std::size_t T = 150;
    const LpSetup s = lp_setup(T, 51);
    ClippedPrimalDual algo(s.set, s.constraints, Schedule::fixed_horizon_convex(2.0, 0.5, T, std::sqrt(2.0)),
                           Vec{0.0, 0.0});
    drive(algo, s.losses, T);

    const ProblemBounds bounds = conservative_bounds(ExperimentKind::OnlineLP, s.inst, 1.0);
    const Vec y = hindsight_static_optimum(s.losses, T, s.constraints, s.set);
    const std::vector<Vec> comparator(T, y);
    const CertificateSides sides =
        lemma1_certificate(algo.trace(), comparator, s.losses, s.constraints, s.set, bounds.G);
    CHECK(sides.lhs <= sides.rhs + static_cast<double>(T) * 1e-7);
}

TEST_CASE("lemma 1 certificate rejects infeasible comparators") {
    const LpSetup s = lp_setup(10, 61);
    ClippedPrimalDual algo(s.set, s.constraints, Schedule::anytime_dynamic(1.0, 0.5, 1.0), Vec{0.0, 0.0});
    drive(algo, s.losses, 5);
    const std::vector<Vec> outside(4, Vec{3.0, 3.0});
    CHECK_THROWS_AS(lemma1_certificate(algo.trace(), outside, s.losses, s.constraints, s.set, 1.0),
                    std::invalid_argument);
}

TEST_CASE("zero-penalty option tracks q but never applies the penalty") {
    const LpSetup s = lp_setup(60, 71);
    ClippedPrimalDual::Options options;
    options.apply_penalty = false;
    ClippedPrimalDual ogd(s.set, s.constraints, Schedule::fixed_horizon_convex(2.0, 0.5, 60, std::sqrt(2.0)),
                          Vec{0.0, 0.0}, options);
    Vec x{0.0, 0.0};
    const Schedule schedule = Schedule::fixed_horizon_convex(2.0, 0.5, 60, std::sqrt(2.0));
    for (std::size_t t = 1; t <= 60; ++t) {
        const Vec g = s.losses.subgradient(t, x);
        ogd.step(g);
        const double a = schedule.alpha(t);
        x = s.set.project({x[0] - 0.5 * a * g[0], x[1] - 0.5 * a * g[1]});
        CHECK(ogd.decision() == x);
    }
}
