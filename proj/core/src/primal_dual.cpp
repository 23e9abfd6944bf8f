// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/primal_dual.hpp"

#include <cmath>
#include <stdexcept>

namespace oco {

void advance_dual(DualState& dual, double gamma, const Vec& clipped) {
    if (dual.q.size() != clipped.size()) throw std::invalid_argument("advance_dual: dimension mismatch");
    axpy(gamma, clipped, dual.q);
    dual.q_hat = dual.q;
    axpy(gamma, clipped, dual.q_hat);
}

ClippedPrimalDual::ClippedPrimalDual(FeasibleSet set, ConstraintOracle constraints, Schedule schedule, Vec x1,
                                     Options options)
    : set_(std::move(set)),
      constraints_(std::move(constraints)),
      schedule_(std::move(schedule)),
      options_(options),
      x_(std::move(x1)) {
    if (constraints_.dimension() != set_.dimension())
        throw std::invalid_argument("ClippedPrimalDual: oracle/set dimension mismatch");
    if (x_.size() != set_.dimension()) throw std::invalid_argument("ClippedPrimalDual: x1 dimension mismatch");
    if (!set_.contains(x_)) throw std::invalid_argument("ClippedPrimalDual: x1 must lie in the feasible set");
    dual_.q.assign(constraints_.count(), 0.0);
    dual_.q_hat.assign(constraints_.count(), 0.0);
    if (options_.keep_trace) {
        trace_.emplace();
        trace_->decisions.push_back(x_);
    }
}

const Vec& ClippedPrimalDual::step(const Vec& observed_subgrad) {
    if (observed_subgrad.size() != set_.dimension())
        throw std::invalid_argument("ClippedPrimalDual::step: subgradient dimension mismatch");
    if (!all_finite(observed_subgrad))
        throw std::invalid_argument("ClippedPrimalDual::step: non-finite subgradient");

    const double alpha_prev = schedule_.alpha(t_);
    const double gamma_prev = schedule_.gamma(t_);
    const double gamma_next = schedule_.gamma(t_ + 1);

    const ConstraintEval eval = constraints_.evaluate(x_);
    advance_dual(dual_, gamma_prev, eval.clipped);

    Vec penalty(constraints_.count(), 0.0);
    if (options_.apply_penalty) {
        const double weight = alpha_prev * gamma_next;
        for (std::size_t j = 0; j < penalty.size(); ++j) penalty[j] = weight * dual_.q_hat[j];
    }

    ProxProblem subproblem{set_, constraints_, x_, observed_subgrad, alpha_prev, std::move(penalty)};
    ProxSolution sol = solve_prox(subproblem, options_.prox);

    if (trace_) {
        trace_->duals.push_back(dual_.q);
        trace_->clipped.push_back(eval.clipped);
        trace_->alphas.push_back(alpha_prev);
        trace_->gammas.push_back(gamma_prev);
        trace_->decisions.push_back(sol.point);
    }
    x_ = std::move(sol.point);
    ++t_;
    return x_;
}

const PrimalDualTrace& ClippedPrimalDual::trace() const {
    if (!trace_) throw std::invalid_argument("ClippedPrimalDual::trace: tracing is disabled");
    return *trace_;
}

CertificateSides lemma1_certificate(const PrimalDualTrace& trace, const std::vector<Vec>& comparator,
                                    const LossOracle& losses, const ConstraintOracle& constraints,
                                    const FeasibleSet& set, double G, double feasibility_tol) {
    const std::size_t T = comparator.size();
    if (T == 0) throw std::invalid_argument("lemma1_certificate: empty comparator");
    if (trace.decisions.size() < T + 1)
        throw std::invalid_argument("lemma1_certificate: trace must contain T+1 decisions");
    if (trace.alphas.size() < T) throw std::invalid_argument("lemma1_certificate: trace missing stepsizes");

    for (const Vec& y : comparator) {
        if (!set.contains(y, feasibility_tol))
            throw std::invalid_argument("lemma1_certificate: comparator point outside the set");
        const Vec values = constraints.values(y);
        for (double v : values)
            if (v > feasibility_tol)
                throw std::invalid_argument("lemma1_certificate: comparator point violates constraints");
    }

    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t t = 1; t <= T; ++t) {
        const Vec& xt = trace.decisions[t - 1];
        const Vec& xnext = trace.decisions[t];
        const Vec& yt = comparator[t - 1];
        lhs += losses.value(t, xt) - losses.value(t, yt);
        const double alpha_t = trace.alphas[t - 1];
        rhs += (squared_distance(yt, xt) - squared_distance(yt, xnext)) / alpha_t;
        rhs += 0.5 * G * G * alpha_t;
    }
    return {lhs, rhs};
}

CertificateSides dual_telescoping_sides(const PrimalDualTrace& trace) {
    const std::size_t T = trace.duals.size();
    if (T == 0) throw std::invalid_argument("dual_telescoping_sides: empty trace");
    double lhs = 0.0;
    for (std::size_t t = 0; t < T; ++t) lhs += norm1(trace.clipped[t]);
    double rhs = norm1(trace.duals[T - 1]) / trace.gammas[T - 1];
    for (std::size_t t = 0; t + 1 < T; ++t)
        rhs += (1.0 / trace.gammas[t] - 1.0 / trace.gammas[t + 1]) * norm1(trace.duals[t]);
    return {lhs, rhs};
}

CertificateSides dual_norm_bound_sides(const PrimalDualTrace& trace, std::size_t constraint_count) {
    const std::size_t T = trace.duals.size();
    if (T == 0) throw std::invalid_argument("dual_norm_bound_sides: empty trace");
    double lhs = 0.0;
    for (std::size_t t = 0; t < T; ++t) lhs += norm2(trace.clipped[t]);
    double rhs = norm2(trace.duals[T - 1]) / trace.gammas[T - 1];
    for (std::size_t t = 0; t + 1 < T; ++t)
        rhs += (1.0 / trace.gammas[t] - 1.0 / trace.gammas[t + 1]) * norm2(trace.duals[t]);
    rhs *= std::sqrt(static_cast<double>(constraint_count));
    return {lhs, rhs};
}

}  // namespace oco
