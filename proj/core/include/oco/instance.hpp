// Random experiment instances for the online LP / online QP studies.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "oco/oracles.hpp"
#include "oco/vec.hpp"

namespace oco {

enum class ExperimentKind { OnlineLP, OnlineQP };

/// One generated problem: fixed affine constraints A x <= b over [-1,1]^p and
/// the per-round loss coefficients theta_t. The LP study uses losses
/// <theta_t, x>; the QP study reuses the same A, b, theta machinery with
/// losses ||x - theta_t||^2 + 20 <theta_t, x>.
struct ProblemInstance {
    Mat A;                    // entries uniform in [0, 2]
    Vec b;                    // entries uniform in [0, 5]
    std::vector<Vec> thetas;  // theta_t = theta1_t + theta2_t + theta3_t
};

/// Linear-coefficient scale of the QP loss.
inline constexpr double kQpLinearScale = 20.0;

/// Rounds whose theta_2 components are drawn from [-1, 0]; all other rounds
/// draw from [0, 1]. Closed intervals, absolute round indices.
bool theta2_low_regime(std::size_t t);

/// Deterministic function of (seed, repetition). Streams and draw order:
///   "A"      row-major entries of A, uniform [0,2]
///   "b"      entries of b, uniform [0,5]
///   "theta1" for t = 1..T, components 1..p: uniform [-t^{1/10}, t^{1/10}]
///   "theta2" for t = 1..T, components 1..p: uniform [-1,0] in the low
///            regime, [0,1] otherwise
///   "perm"   Fisher-Yates shuffle of (1..T); theta3_t has all components
///            equal to (-1)^{mu(t)}
ProblemInstance generate_instance(std::size_t p, std::size_t m, std::size_t T, std::uint64_t seed,
                                  std::uint64_t repetition);

/// Loss oracle for the instance under the given experiment kind.
LossOracle instance_losses(ExperimentKind kind, const ProblemInstance& instance);

/// Conservative per-instance uniform bounds: G from max_t ||theta-side
/// subgradient|| and ||A||_F, F from the loss range and ||g|| over the box,
/// diameter from the set.
ProblemBounds conservative_bounds(ExperimentKind kind, const ProblemInstance& instance, double box_half_width);

}  // namespace oco
