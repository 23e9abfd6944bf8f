// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oco/rng.hpp"

namespace oco {

bool theta2_low_regime(std::size_t t) {
    return t <= 1500 || (t >= 2000 && t <= 3500) || (t >= 4000 && t <= 5000);
}

ProblemInstance generate_instance(std::size_t p, std::size_t m, std::size_t T, std::uint64_t seed,
                                  std::uint64_t repetition) {
    if (p == 0 || m == 0 || T == 0) throw std::invalid_argument("generate_instance: zero dimensions");

    ProblemInstance inst;
    inst.A = Mat(m, p);
    {
        SplitMix64 rng(seed, repetition, "A");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < p; ++j) inst.A(i, j) = rng.uniform(0.0, 2.0);
    }
    {
        SplitMix64 rng(seed, repetition, "b");
        inst.b.resize(m);
        for (std::size_t i = 0; i < m; ++i) inst.b[i] = rng.uniform(0.0, 5.0);
    }

    std::vector<Vec> theta1(T, Vec(p)), theta2(T, Vec(p));
    {
        SplitMix64 rng(seed, repetition, "theta1");
        for (std::size_t t = 1; t <= T; ++t) {
            const double amp = std::pow(static_cast<double>(t), 0.1);
            for (std::size_t j = 0; j < p; ++j) theta1[t - 1][j] = rng.uniform(-amp, amp);
        }
    }
    {
        SplitMix64 rng(seed, repetition, "theta2");
        for (std::size_t t = 1; t <= T; ++t) {
            const bool low = theta2_low_regime(t);
            for (std::size_t j = 0; j < p; ++j)
                theta2[t - 1][j] = low ? rng.uniform(-1.0, 0.0) : rng.uniform(0.0, 1.0);
        }
    }

    std::vector<std::size_t> perm(T);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    {
        SplitMix64 rng(seed, repetition, "perm");
        for (std::size_t i = T; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }

    inst.thetas.assign(T, Vec(p));
    for (std::size_t t = 0; t < T; ++t) {
        const double sign = perm[t] % 2 == 0 ? 1.0 : -1.0;  // (-1)^{mu(t)}
        for (std::size_t j = 0; j < p; ++j) inst.thetas[t][j] = theta1[t][j] + theta2[t][j] + sign;
    }
    return inst;
}

LossOracle instance_losses(ExperimentKind kind, const ProblemInstance& instance) {
    if (kind == ExperimentKind::OnlineLP) return LossOracle::linear(instance.thetas);
    return LossOracle::quadratic(instance.thetas, kQpLinearScale);
}

ProblemBounds conservative_bounds(ExperimentKind kind, const ProblemInstance& instance, double box_half_width) {
    const std::size_t p = instance.A.cols;
    const double diam = 2.0 * box_half_width * std::sqrt(static_cast<double>(p));
    const double radius = box_half_width * std::sqrt(static_cast<double>(p));  // max ||x|| over the box

    double theta_max = 0.0;
    for (const Vec& th : instance.thetas) theta_max = std::max(theta_max, norm2(th));

    // ||grad f_t|| over the box: theta_max for the LP losses,
    // ||2x + (s-2) theta|| <= 2 radius + |s-2| theta_max for the QP losses.
    double grad_bound = theta_max;
    if (kind == ExperimentKind::OnlineQP)
        grad_bound = 2.0 * radius + std::abs(kQpLinearScale - 2.0) * theta_max;
    const double G = std::max(grad_bound, instance.A.frobenius_norm());

    const double loss_range = grad_bound * diam;  // |f(x)-f(y)| <= sup||grad|| * diam
    const double g_norm = instance.A.frobenius_norm() * radius + norm2(instance.b);
    const double F = std::max(loss_range, g_norm);
    return ProblemBounds(F, G, diam);
}

}  // namespace oco
