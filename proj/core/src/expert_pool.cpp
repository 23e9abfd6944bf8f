// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/expert_pool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oco {

MetaParams MetaParams::from_theorem3(std::size_t T, double kappa, double c, double alpha0, double beta0,
                                     double gamma0, ExpertStepFamily family) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("MetaParams: c must lie in (0,1)");
    if (kappa < 0.0 || kappa > c) throw std::invalid_argument("MetaParams: kappa must lie in [0, c]");
    if (T == 0) throw std::invalid_argument("MetaParams: horizon must be >= 1");
    if (!(alpha0 > 0.0) || !(beta0 > 0.0) || !(gamma0 > 0.0))
        throw std::invalid_argument("MetaParams: alpha0, beta0, gamma0 must be > 0");

    MetaParams params;
    params.expert_count =
        static_cast<std::size_t>(std::ceil(kappa * std::log2(1.0 + static_cast<double>(T)))) + 1;
    params.beta = beta0 / std::pow(static_cast<double>(T), c);
    params.expert_schedules.reserve(params.expert_count);
    double scale = 1.0;  // 2^{i-1}
    for (std::size_t i = 0; i < params.expert_count; ++i, scale *= 2.0) {
        params.expert_schedules.push_back(family == ExpertStepFamily::PerRoundT
                                              ? Schedule::anytime_dynamic(alpha0 * scale, c, gamma0)
                                              : Schedule::fixed_horizon_convex(alpha0 * scale, c, T, gamma0));
    }
    return params;
}

MetaParams MetaParams::uniform(std::size_t expert_count, double beta, const Schedule& shared) {
    if (expert_count == 0) throw std::invalid_argument("MetaParams: need at least one expert");
    if (!(beta > 0.0)) throw std::invalid_argument("MetaParams: beta must be > 0");
    MetaParams params;
    params.expert_count = expert_count;
    params.beta = beta;
    params.expert_schedules.assign(expert_count, shared);
    return params;
}

std::vector<double> initial_expert_weights(std::size_t N) {
    if (N == 0) throw std::invalid_argument("initial_expert_weights: N must be >= 1");
    std::vector<double> w(N);
    const double n = static_cast<double>(N);
    for (std::size_t i = 1; i <= N; ++i)
        w[i - 1] = (n + 1.0) / (static_cast<double>(i) * static_cast<double>(i + 1) * n);
    return w;
}

ExpertPool::ExpertPool(const FeasibleSet& set, const ConstraintOracle& constraints, MetaParams params, Vec x1,
                       Options options)
    : beta_(params.beta), set_(set), keep_trace_(options.keep_trace) {
    if (params.expert_schedules.size() != params.expert_count)
        throw std::invalid_argument("ExpertPool: schedule count must equal expert count");
    if (!(beta_ > 0.0)) throw std::invalid_argument("ExpertPool: beta must be > 0");
    experts_.reserve(params.expert_count);
    for (const Schedule& schedule : params.expert_schedules)
        experts_.emplace_back(set, constraints, schedule, x1, options);
    weights_ = initial_expert_weights(params.expert_count);
    log_weights_.resize(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) log_weights_[i] = std::log(weights_[i]);
    x_ = combine();
    if (keep_trace_) {
        trace_.decisions.push_back(x_);
        trace_.weights.push_back(weights_);
    }
}

Vec ExpertPool::combine() const {
    // Affine combination relative to the first expert: exact when all expert
    // points coincide, well conditioned when they are close. The projection
    // is a no-op for in-set points and guards the convexity invariant.
    const Vec& ref = experts_.front().decision();
    Vec x = ref;
    for (std::size_t i = 0; i < experts_.size(); ++i) {
        const Vec& xi = experts_[i].decision();
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += weights_[i] * (xi[k] - ref[k]);
    }
    return set_.project(x);
}

const Vec& ExpertPool::step(const Vec& observed_subgrad) {
    if (observed_subgrad.size() != x_.size())
        throw std::invalid_argument("ExpertPool::step: subgradient dimension mismatch");

    const std::size_t N = experts_.size();

    // Surrogate losses at the previous points: l_i = <grad, x_i - x>. The
    // self-loss <grad, x - x> is identically zero and recorded as computed.
    std::vector<double> losses(N);
    for (std::size_t i = 0; i < N; ++i) losses[i] = dot(observed_subgrad, sub(experts_[i].decision(), x_));
    const double self_loss = dot(observed_subgrad, sub(x_, x_));
    max_abs_self_loss_ = std::max(max_abs_self_loss_, std::abs(self_loss));

    // Expert updates share the observed gradient (the surrogate loss has the
    // same subgradient at every point); they are independent of one another.
    for (ClippedPrimalDual& expert : experts_) expert.step(observed_subgrad);

    // Multiplicative weight update in log space with max shift.
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < N; ++i) {
        log_weights_[i] -= beta_ * losses[i];
        max_log = std::max(max_log, log_weights_[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        weights_[i] = std::exp(log_weights_[i] - max_log);
        total += weights_[i];
    }
    for (std::size_t i = 0; i < N; ++i) weights_[i] /= total;
    for (std::size_t i = 0; i < N; ++i) log_weights_[i] -= max_log;  // keep the shift bounded

    x_ = combine();
    ++t_;
    if (keep_trace_) {
        trace_.decisions.push_back(x_);
        trace_.weights.push_back(weights_);
        trace_.surrogate_losses.push_back(std::move(losses));
        trace_.self_losses.push_back(self_loss);
    }
    return x_;
}

const HedgeTrace& ExpertPool::trace() const {
    if (!keep_trace_) throw std::invalid_argument("ExpertPool::trace: tracing is disabled");
    return trace_;
}

}  // namespace oco
