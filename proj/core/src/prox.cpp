// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oco/errors.hpp"

namespace oco {

namespace {

void validate(const ProxProblem& p) {
    const std::size_t dim = p.set.dimension();
    if (p.constraints.dimension() != dim) throw std::invalid_argument("solve_prox: oracle/set dimension mismatch");
    if (p.anchor.size() != dim || p.loss_grad.size() != dim)
        throw std::invalid_argument("solve_prox: anchor/gradient dimension mismatch");
    if (p.penalty.size() != p.constraints.count())
        throw std::invalid_argument("solve_prox: penalty size must match constraint count");
    if (!all_finite(p.anchor) || !all_finite(p.loss_grad) || !all_finite(p.penalty) || !std::isfinite(p.stepsize))
        throw std::invalid_argument("solve_prox: non-finite input");
    if (!(p.stepsize > 0.0)) throw std::invalid_argument("solve_prox: stepsize must be positive");
    for (double cj : p.penalty)
        if (cj < 0.0) throw std::invalid_argument("solve_prox: negative penalty entry");
}

bool penalty_is_zero(const Vec& c) {
    for (double v : c)
        if (v != 0.0) return false;
    return true;
}

/// argmin_{x in set} <w, x> + ||x - z||^2  =  project(z - w/2)
Vec inner_minimizer(const FeasibleSet& set, const Vec& z, const Vec& w) {
    Vec target(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) target[i] = z[i] - 0.5 * w[i];
    return set.project(target);
}

ProxSolution solve_zero_penalty(const ProxProblem& p) {
    ProxSolution sol;
    sol.point = inner_minimizer(p.set, p.anchor, scaled(p.stepsize, p.loss_grad));
    sol.objective = prox_objective(p, sol.point);
    sol.multiplier.assign(p.constraints.count(), 0.0);
    sol.gap = 0.0;
    sol.iterations = 0;
    return sol;
}

// Dual of the affine-penalty problem. With g(x) = A x - b and c >= 0,
//   F(x) = a<d,x> + sum_j max_{0<=lambda_j<=c_j} lambda_j g_j(x) + ||x-z||^2,
// so min_x F = max_{lambda in [0,c]} d(lambda) with
//   d(lambda) = min_{x in set} a<d,x> + <lambda, Ax-b> + ||x-z||^2,
// whose inner minimizer is x(lambda) = project(z - (a d + A^T lambda)/2) and
// whose gradient is A x(lambda) - b. FISTA with gradient restart plus the
// primal-dual gap as stopping certificate.
ProxSolution solve_affine_dual(const ProxProblem& p, const ProxSolverParams& params) {
    const Mat& A = p.constraints.matrix();
    const Vec& b = p.constraints.offset();
    const std::size_t m = A.rows;

    const double fro = A.frobenius_norm();
    const Vec ad = scaled(p.stepsize, p.loss_grad);

    auto primal_at = [&](const Vec& lambda) {
        Vec w = ad;
        axpy(1.0, A.apply_transpose(lambda), w);
        return inner_minimizer(p.set, p.anchor, w);
    };
    auto dual_value = [&](const Vec& lambda, const Vec& x) {
        Vec g = A.apply(x);
        for (std::size_t j = 0; j < m; ++j) g[j] -= b[j];
        return dot(ad, x) + dot(lambda, g) + squared_distance(x, p.anchor);
    };

    ProxSolution sol;
    // lambda = 0 candidate doubles as initialization.
    Vec lambda(m, 0.0);
    sol.point = primal_at(lambda);
    sol.objective = prox_objective(p, sol.point);
    sol.multiplier = lambda;
    double dual_best = dual_value(lambda, sol.point);
    sol.gap = sol.objective - dual_best;

    if (fro == 0.0 || penalty_is_zero(p.penalty)) return sol;  // constant penalty term

    const double step = 2.0 / (fro * fro);  // 1/L with L = ||A||_F^2/2 >= ||A||_2^2/2
    Vec y = lambda;
    Vec lambda_prev = lambda;
    double momentum = 1.0;
    double best_gap_seen = sol.gap;
    int stall = 0;

    for (int k = 1; k <= params.max_iters; ++k) {
        sol.iterations = k;
        const Vec xy = primal_at(y);
        Vec grad = A.apply(xy);
        for (std::size_t j = 0; j < m; ++j) grad[j] -= b[j];

        Vec lambda_next(m);
        for (std::size_t j = 0; j < m; ++j)
            lambda_next[j] = std::clamp(y[j] + step * grad[j], 0.0, p.penalty[j]);

        const Vec x_next = primal_at(lambda_next);
        const double obj = prox_objective(p, x_next);
        dual_best = std::max(dual_best, dual_value(lambda_next, x_next));

        if (obj < sol.objective) {
            sol.objective = obj;
            sol.point = x_next;
            sol.multiplier = lambda_next;
        }
        sol.gap = sol.objective - dual_best;
        if (sol.gap <= params.tol) break;

        // The primal objective along the dual path is not monotone, so the
        // stall test watches the certified gap instead.
        const bool improved = best_gap_seen - sol.gap >= params.tol;
        if (improved) best_gap_seen = sol.gap;
        stall = improved ? 0 : stall + 1;
        if (stall >= 50) break;

        // Gradient restart: drop momentum when it opposes ascent.
        double along = 0.0;
        for (std::size_t j = 0; j < m; ++j) along += grad[j] * (lambda_next[j] - lambda_prev[j]);
        if (along < 0.0) {
            momentum = 1.0;
            y = lambda_next;
        } else {
            const double momentum_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
            for (std::size_t j = 0; j < m; ++j)
                y[j] = lambda_next[j] + ((momentum - 1.0) / momentum_next) * (lambda_next[j] - lambda_prev[j]);
            // Momentum extrapolation can leave the dual box; the gradient map
            // clamps on the next iterate, but keep y finite and sane.
            momentum = momentum_next;
        }
        lambda_prev = lambda_next;
    }
    return sol;
}

ProxSolution solve_general_subgradient(const ProxProblem& p, const ProxSolverParams& params) {
    const std::size_t dim = p.set.dimension();
    const double R = p.set.diameter();

    Vec x = p.set.project(p.anchor);
    ProxSolution sol;
    sol.point = x;
    sol.objective = prox_objective(p, x);

    // Composite subgradient bound a||d|| + ||c||*G + 2R, with G estimated from
    // the oracle at the start point and grown adaptively.
    Mat sub0 = p.constraints.clipped_subgradient(x);
    double row_max = 0.0;
    for (std::size_t j = 0; j < sub0.rows; ++j) row_max = std::max(row_max, norm2(sub0.row(j)));
    double lip = p.stepsize * norm2(p.loss_grad) + norm2(p.penalty) * row_max + 2.0 * R;
    lip = std::max(lip, 1e-12);

    int stall = 0;
    for (int k = 1; k <= params.max_iters; ++k) {
        sol.iterations = k;
        Mat sub = p.constraints.clipped_subgradient(x);
        Vec s = scaled(p.stepsize, p.loss_grad);
        for (std::size_t j = 0; j < sub.rows; ++j)
            for (std::size_t i = 0; i < dim; ++i) s[i] += p.penalty[j] * sub(j, i);
        for (std::size_t i = 0; i < dim; ++i) s[i] += 2.0 * (x[i] - p.anchor[i]);

        lip = std::max(lip, norm2(s));
        // ||x-z||^2 makes the objective 2-strongly convex; 1/(k+1) is the
        // matching optimal rule and caps the generic R/(L sqrt(k)) step.
        const double eta =
            std::min(params.step_scale * R / (lip * std::sqrt(static_cast<double>(k))), 1.0 / (k + 1.0));

        for (std::size_t i = 0; i < dim; ++i) x[i] -= eta * s[i];
        x = p.set.project(x);

        const double obj = prox_objective(p, x);
        bool improved = obj < sol.objective - params.tol;
        if (obj < sol.objective) {
            sol.objective = obj;
            sol.point = x;
        }
        stall = improved ? 0 : stall + 1;
        if (stall >= 25) break;
    }
    return sol;
}

}  // namespace

double prox_objective(const ProxProblem& problem, const Vec& x) {
    const ConstraintEval eval = problem.constraints.evaluate(x);
    return problem.stepsize * dot(problem.loss_grad, x) + dot(problem.penalty, eval.clipped) +
           squared_distance(x, problem.anchor);
}

ProxSolution solve_prox(const ProxProblem& problem, const ProxSolverParams& params) {
    validate(problem);
    if (params.max_iters <= 0 || !(params.step_scale > 0.0) || !(params.tol > 0.0))
        throw std::invalid_argument("solve_prox: invalid solver parameters");

    if (penalty_is_zero(problem.penalty)) return solve_zero_penalty(problem);

    ProxSolution sol = problem.constraints.is_affine() ? solve_affine_dual(problem, params)
                                                       : solve_general_subgradient(problem, params);

    // Monotone-improvement guard: never return worse than the projected anchor.
    const Vec pz = problem.set.project(problem.anchor);
    const double obj_pz = prox_objective(problem, pz);
    if (obj_pz < sol.objective) {
        sol.point = pz;
        sol.objective = obj_pz;
        sol.multiplier.clear();
        sol.gap = std::numeric_limits<double>::quiet_NaN();
    }
    return sol;
}

BruteForceResult brute_force_prox(const ProxProblem& problem, double grid_step) {
    validate(problem);
    if (!(grid_step > 0.0)) throw std::invalid_argument("brute_force_prox: grid_step must be positive");
    if (problem.set.kind() != FeasibleSet::Kind::Box)
        throw UnsupportedOperation("brute_force_prox: only box sets are supported");
    const std::size_t dim = problem.set.dimension();
    if (dim > 2) throw UnsupportedOperation("brute_force_prox: only p <= 2 is supported");

    const Vec& lo = problem.set.lower();
    const Vec& hi = problem.set.upper();

    auto scan = [&](const Vec& from, const Vec& to, double h) {
        BruteForceResult best{Vec(dim), std::numeric_limits<double>::infinity()};
        Vec x(dim);
        auto consider = [&](const Vec& pt) {
            const double obj = prox_objective(problem, pt);
            if (obj < best.objective) {
                best.objective = obj;
                best.point = pt;
            }
        };
        const auto axis_count = [&](std::size_t i) {
            return static_cast<std::size_t>(std::floor((to[i] - from[i]) / h)) + 1;
        };
        if (dim == 1) {
            const std::size_t n = axis_count(0);
            for (std::size_t i = 0; i < n; ++i) {
                x[0] = std::min(from[0] + static_cast<double>(i) * h, to[0]);
                consider(x);
            }
            x[0] = to[0];
            consider(x);
        } else {
            const std::size_t n0 = axis_count(0), n1 = axis_count(1);
            for (std::size_t i = 0; i <= n0; ++i) {
                x[0] = i == n0 ? to[0] : std::min(from[0] + static_cast<double>(i) * h, to[0]);
                for (std::size_t j = 0; j <= n1; ++j) {
                    x[1] = j == n1 ? to[1] : std::min(from[1] + static_cast<double>(j) * h, to[1]);
                    consider(x);
                }
            }
        }
        return best;
    };

    BruteForceResult coarse = scan(lo, hi, grid_step);

    Vec from(dim), to(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        from[i] = std::max(lo[i], coarse.point[i] - grid_step);
        to[i] = std::min(hi[i], coarse.point[i] + grid_step);
    }
    BruteForceResult fine = scan(from, to, grid_step / 10.0);
    return fine.objective < coarse.objective ? fine : coarse;
}

}  // namespace oco
