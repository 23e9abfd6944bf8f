// Solver for the per-round composite subproblem
//   minimize  a*<d, x> + <c, [g(x)]_+> + ||x - z||^2   over a feasible set,
// plus a brute-force grid oracle used by the test and certification suites.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <limits>

#include "oco/feasible_set.hpp"
#include "oco/oracles.hpp"
#include "oco/vec.hpp"

namespace oco {

struct ProxProblem {
    const FeasibleSet& set;
    const ConstraintOracle& constraints;
    Vec anchor;     // z, normally the previous decision (inside the set)
    Vec loss_grad;  // d, the observed loss subgradient
    double stepsize = 1.0;  // a > 0
    Vec penalty;    // c >= 0 componentwise, one entry per constraint
};

struct ProxSolverParams {
    int max_iters = 300;
    double step_scale = 1.0;
    // Stop once the certified optimality gap (affine path) or the best
    // objective improvement over 25 consecutive iterations falls below tol.
    double tol = 1e-8;
};

struct ProxSolution {
    Vec point;
    double objective = std::numeric_limits<double>::quiet_NaN();
    // Multiplier lambda in [0, c] certifying the solution: the returned point
    // is the exact projection P(z - (a*d + dg(x)^T lambda)/2). Together with
    // s = a*d + dg(x)^T lambda it satisfies the prox variational inequality
    //   <point - x, s> <= ||x-z||^2 - ||x-point||^2 - ||point-z||^2
    // for every x in the set, up to floating-point rounding. Empty when the
    // solver path provides no certificate (general-oracle subgradient path).
    Vec multiplier;
    // Certified duality gap at the returned point; NaN without a certificate.
    double gap = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;

    bool has_certificate() const { return !multiplier.empty(); }
};

/// Composite objective value at x.
double prox_objective(const ProxProblem& problem, const Vec& x);

/// Solve the subproblem.
///
/// Dispatch:
///  - penalty identically zero: exact closed form project(z - (a/2) d)
///    (the quadratic term is ||.||^2, not (1/2)||.||^2, hence a/2);
///  - affine constraints: accelerated projected gradient ascent on the exact
///    box dual (c_j [g_j]_+ = max_{0<=lambda_j<=c_j} lambda_j g_j), with
///    closed-form primal recovery and a duality-gap certificate;
///  - general constraint callbacks: projected subgradient on the composite
///    objective, best iterate kept, steps min(step_scale*R/(L*sqrt(k)),
///    1/(k+1)); no certificate.
///
/// The returned objective never exceeds the objective at project(z).
ProxSolution solve_prox(const ProxProblem& problem, const ProxSolverParams& params = {});

/// Exhaustive grid minimization over a box (p <= 2 only), followed by one
/// local refinement pass at one tenth of the step. Test oracle; deliberately
/// simple and slow.
struct BruteForceResult {
    Vec point;
    double objective;
};
BruteForceResult brute_force_prox(const ProxProblem& problem, double grid_step);

}  // namespace oco
