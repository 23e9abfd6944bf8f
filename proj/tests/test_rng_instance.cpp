// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "oco/emit.hpp"
#include "oco/instance.hpp"
#include "oco/rng.hpp"

using namespace oco;

TEST_CASE("streams are reproducible and separated") {
    SplitMix64 a(42, 0, "theta1");
    SplitMix64 b(42, 0, "theta1");
    SplitMix64 c(42, 1, "theta1");
    SplitMix64 d(42, 0, "theta2");
    bool all_equal_rep = true, all_equal_tag = true;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) all_equal_rep = false;
        if (va != d.next()) all_equal_tag = false;
    }
    CHECK_FALSE(all_equal_rep);
    CHECK_FALSE(all_equal_tag);
}

TEST_CASE("uniform draws respect their ranges") {
    SplitMix64 rng(1, 0, "ranges");
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform(-3.0, 5.0);
        CHECK(v >= -3.0);
        CHECK(v <= 5.0);
        CHECK(rng.next_below(7) < 7);
    }
}

TEST_CASE("theta2 regime intervals, closed exactly as printed") {
    CHECK(theta2_low_regime(1));
    CHECK(theta2_low_regime(1500));
    CHECK_FALSE(theta2_low_regime(1501));
    CHECK_FALSE(theta2_low_regime(1999));
    CHECK(theta2_low_regime(2000));
    CHECK(theta2_low_regime(3500));
    CHECK_FALSE(theta2_low_regime(3501));
    CHECK_FALSE(theta2_low_regime(3999));
    CHECK(theta2_low_regime(4000));
    CHECK(theta2_low_regime(5000));
    CHECK_FALSE(theta2_low_regime(5001));
}

TEST_CASE("generated instances satisfy the documented ranges and structure") {
    const std::size_t T = 600;
    const ProblemInstance inst = generate_instance(2, 3, T, 123, 4);

    for (double v : inst.A.data) {
        CHECK(v >= 0.0);
        CHECK(v <= 2.0);
    }
    for (double v : inst.b) {
        CHECK(v >= 0.0);
        CHECK(v <= 5.0);
    }
    REQUIRE(inst.thetas.size() == T);

    // Reconstruct theta1 and theta2 from their documented streams; the
    // remainder must be the permutation-driven component: both coordinates
    // equal and exactly +-1.
    SplitMix64 s1(123, 4, "theta1");
    SplitMix64 s2(123, 4, "theta2");
    int plus = 0;
    for (std::size_t t = 1; t <= T; ++t) {
        const double amp = std::pow(static_cast<double>(t), 0.1);
        const Vec theta1{s1.uniform(-amp, amp), s1.uniform(-amp, amp)};
        const bool low = theta2_low_regime(t);
        const Vec theta2{low ? s2.uniform(-1.0, 0.0) : s2.uniform(0.0, 1.0),
                         low ? s2.uniform(-1.0, 0.0) : s2.uniform(0.0, 1.0)};
        // theta = (theta1 + theta2) + s rounds, so s is recovered only up to
        // a few ulps of the partial sums.
        const double r0 = inst.thetas[t - 1][0] - theta1[0] - theta2[0];
        const double r1 = inst.thetas[t - 1][1] - theta1[1] - theta2[1];
        CHECK(std::abs(r0 - r1) <= 1e-12);
        CHECK(std::abs(std::abs(r0) - 1.0) <= 1e-12);
        if (r0 > 0.0) ++plus;
    }
    // (-1)^{mu(t)} over a permutation of 1..T: exactly T/2 even values.
    CHECK(plus == static_cast<int>(T / 2));
}

TEST_CASE("instances are deterministic in (seed, repetition)") {
    const ProblemInstance a = generate_instance(2, 3, 50, 9, 2);
    const ProblemInstance b = generate_instance(2, 3, 50, 9, 2);
    const ProblemInstance c = generate_instance(2, 3, 50, 9, 3);
    CHECK(a.A.data == b.A.data);
    CHECK(a.b == b.b);
    CHECK(a.thetas == b.thetas);
    CHECK(a.A.data != c.A.data);
}

TEST_CASE("golden first draws, seed 42 repetition 0") {
    const ProblemInstance inst = generate_instance(2, 3, 5000, 42, 0);
    std::string out;
    auto emitv = [&](const std::string& name, const Vec& v) {
        out += name;
        for (double x : v) {
            out += ' ';
            out += format_double(x);
        }
        out += '\n';
    };
    for (std::size_t i = 0; i < 3; ++i) emitv("A_row" + std::to_string(i), inst.A.row(i));
    emitv("b", inst.b);
    for (std::size_t t = 1; t <= 6; ++t) emitv("theta_" + std::to_string(t), inst.thetas[t - 1]);
    emitv("theta_5000", inst.thetas[4999]);

    std::ifstream golden(std::string(OCOLTC_TEST_DATA_DIR) + "/lp_seed42_rep0_golden.txt");
    REQUIRE(golden.good());
    std::string expected, line;
    while (std::getline(golden, line)) {
        if (!line.empty() && line[0] == '#') continue;
        expected += line;
        expected += '\n';
    }
    CHECK(out == expected);
}

TEST_CASE("quadratic instance losses satisfy strong convexity with mu = 1") {
    const ProblemInstance inst = generate_instance(2, 3, 20, 31, 0);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineQP, inst);
    SplitMix64 rng(31, 0, "qp_mu_check");
    for (std::size_t t = 1; t <= 20; ++t) {
        const Vec x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const Vec y{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const double gap = losses.value(t, x) - losses.value(t, y) - dot(sub(x, y), losses.subgradient(t, y));
        CHECK(gap >= squared_distance(x, y) - 1e-10);
    }
}

TEST_CASE("conservative bounds dominate the realized quantities") {
    const ProblemInstance inst = generate_instance(2, 3, 200, 13, 1);
    const ProblemBounds bounds = conservative_bounds(ExperimentKind::OnlineLP, inst, 1.0);
    for (const Vec& th : inst.thetas) CHECK(norm2(th) <= bounds.G + 1e-12);
    CHECK(inst.A.frobenius_norm() <= bounds.G + 1e-12);
    CHECK(bounds.diameter == doctest::Approx(2.0 * std::sqrt(2.0)));
}
