// Expert-tracking meta-algorithm: N clipped primal-dual instances on
// surrogate losses, combined by multiplicative weights.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <vector>

#include "oco/primal_dual.hpp"
#include "oco/schedule.hpp"

namespace oco {

/// Which family the per-expert stepsizes come from. The analysis states the
/// per-round form alpha_{i,t} = alpha0 2^{i-1} / t^c and remarks the bounds
/// also hold with t^c replaced by T^c.
enum class ExpertStepFamily { PerRoundT, FixedHorizonT };

struct MetaParams {
    std::size_t expert_count = 1;  // N
    double beta = 1.0;             // hedge learning rate
    std::vector<Schedule> expert_schedules;  // one per expert

    /// N = ceil(kappa log2(1+T)) + 1, beta = beta0 / T^c,
    /// alpha_{i,t} = alpha0 2^{i-1} / t^c (or / T^c), gamma_{i,t} = gamma0 / sqrt(alpha_{i,t}).
    /// Requires kappa in [0, c] and c in (0, 1). kappa = 0 gives N = 1 and the
    /// meta-algorithm degenerates to the basic one.
    static MetaParams from_theorem3(std::size_t T, double kappa, double c, double alpha0, double beta0,
                                    double gamma0, ExpertStepFamily family = ExpertStepFamily::PerRoundT);

    /// Same N/beta recipe but every expert runs one shared schedule (how the
    /// paper's simulation table parameterizes the meta-algorithm).
    static MetaParams uniform(std::size_t expert_count, double beta, const Schedule& shared);
};

/// Initial weights w_{i,1} = (N+1)/(i(i+1)N); they telescope to exactly 1.
std::vector<double> initial_expert_weights(std::size_t N);

/// Per-round log of the hedge layer.
struct HedgeTrace {
    std::vector<Vec> decisions;                         // combined x_1, x_2, ...
    std::vector<std::vector<double>> weights;           // w_{.,1}, w_{.,2}, ...
    std::vector<std::vector<double>> surrogate_losses;  // l_{.,t} for t = 1, 2, ...
    std::vector<double> self_losses;                    // surrogate loss at the combined point (identically 0)
};

/// Algorithm state: N experts plus a simplex weight vector. Single-writer per
/// round; expert updates within a round are mutually independent.
class ExpertPool {
  public:
    using Options = ClippedPrimalDual::Options;

    ExpertPool(const FeasibleSet& set, const ConstraintOracle& constraints, MetaParams params, Vec x1,
               Options options);
    ExpertPool(const FeasibleSet& set, const ConstraintOracle& constraints, MetaParams params, Vec x1)
        : ExpertPool(set, constraints, std::move(params), std::move(x1), Options{}) {}

    /// One meta-round. `observed_subgrad` is the loss subgradient at the
    /// previous *combined* decision; every expert steps on it (the surrogate
    /// loss has the same gradient everywhere), then weights update
    /// multiplicatively on l_{i} = <grad, x_i - x> and the new combined point
    /// is the weighted average of the new expert points.
    const Vec& step(const Vec& observed_subgrad);

    const Vec& decision() const { return x_; }
    std::size_t round() const { return t_; }
    std::size_t expert_count() const { return experts_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    double beta() const { return beta_; }
    const ClippedPrimalDual& expert(std::size_t i) const { return experts_[i]; }
    const HedgeTrace& trace() const;

    /// Running max of |surrogate self-loss| over all rounds; identically zero
    /// in exact arithmetic, tracked even with tracing disabled.
    double max_abs_self_loss() const { return max_abs_self_loss_; }

  private:
    Vec combine() const;

    std::vector<ClippedPrimalDual> experts_;
    std::vector<double> weights_;
    std::vector<double> log_weights_;  // unnormalized, max-shifted on update
    double beta_;
    FeasibleSet set_;
    std::size_t t_ = 1;
    Vec x_;
    bool keep_trace_;
    HedgeTrace trace_;
    double max_abs_self_loss_ = 0.0;
};

}  // namespace oco
