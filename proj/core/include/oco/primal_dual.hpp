// The clipped primal-dual online algorithm with long-term constraints.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oco/feasible_set.hpp"
#include "oco/oracles.hpp"
#include "oco/prox.hpp"
#include "oco/schedule.hpp"
#include "oco/vec.hpp"

namespace oco {

/// Nonnegative dual pair driving the clipped penalty. q accumulates
/// gamma_t [g(x_t)]_+ and is componentwise nondecreasing over rounds;
/// q_hat = q + gamma_t [g(x_t)]_+ leads it by one extra increment.
struct DualState {
    Vec q;
    Vec q_hat;
};

/// One dual update: q' = q + gamma [g(x)]_+, q_hat' = q' + gamma [g(x)]_+.
void advance_dual(DualState& dual, double gamma, const Vec& clipped);

/// Algorithm-side log of a run. Decisions are x_1..x_n; the dual/clipped
/// entries for round t are produced by the step that computes x_{t+1}, so
/// they run one element behind decisions.
struct PrimalDualTrace {
    std::vector<Vec> decisions;       // x_1, x_2, ...
    std::vector<Vec> duals;           // q_1, q_2, ...
    std::vector<Vec> clipped;         // [g(x_1)]_+, [g(x_2)]_+, ...
    std::vector<double> alphas;       // alpha_1, alpha_2, ...
    std::vector<double> gammas;       // gamma_1, gamma_2, ...
};

/// One instance of the basic algorithm. Single-threaded mutable state
/// machine; distinct instances may run concurrently.
///
/// The caller observes the loss subgradient at the committed decision and
/// feeds it to step(); the algorithm itself never touches a loss oracle,
/// which makes violating the reveal-after-decision protocol impossible.
class ClippedPrimalDual {
  public:
    struct Options {
        bool keep_trace = true;
        // Ablation switch: drop the clipped penalty from the prox step, which
        // reduces the update to projected online gradient descent over the
        // base set. Dual bookkeeping still runs for diagnostics.
        bool apply_penalty = true;
        ProxSolverParams prox;
    };

    ClippedPrimalDual(FeasibleSet set, ConstraintOracle constraints, Schedule schedule, Vec x1,
                      Options options);
    ClippedPrimalDual(FeasibleSet set, ConstraintOracle constraints, Schedule schedule, Vec x1)
        : ClippedPrimalDual(std::move(set), std::move(constraints), std::move(schedule), std::move(x1),
                            Options{}) {}

    /// Execute one round: dual update with gamma_{t}, q_hat formation, then
    /// the prox step with gradient weight alpha_t and penalty weight
    /// alpha_t * gamma_{t+1} on q_hat, exactly in the printed update order.
    /// `observed_subgrad` must be the loss subgradient at decision().
    const Vec& step(const Vec& observed_subgrad);

    const Vec& decision() const { return x_; }
    std::size_t round() const { return t_; }
    const DualState& dual() const { return dual_; }
    const Schedule& schedule() const { return schedule_; }
    const FeasibleSet& set() const { return set_; }
    const ConstraintOracle& constraints() const { return constraints_; }
    const PrimalDualTrace& trace() const;

  private:
    FeasibleSet set_;
    ConstraintOracle constraints_;
    Schedule schedule_;
    Options options_;
    std::size_t t_ = 1;
    Vec x_;
    DualState dual_;
    std::optional<PrimalDualTrace> trace_;
};

/// Both sides of the aggregate regret inequality
///   Reg(x,y) <= sum_t Delta_t(y_t) + sum_t G^2 alpha_t / 2,
/// with Delta_t(y_t) = (1/alpha_t)(||y_t - x_t||^2 - ||y_t - x_{t+1}||^2),
/// evaluated over t = 1..comparator.size(). The trace must contain one more
/// decision than the comparator has points. Every comparator point must be
/// feasible: inside the set and g(y) <= tol componentwise.
struct CertificateSides {
    double lhs;
    double rhs;
};
CertificateSides lemma1_certificate(const PrimalDualTrace& trace, const std::vector<Vec>& comparator,
                                    const LossOracle& losses, const ConstraintOracle& constraints,
                                    const FeasibleSet& set, double G, double feasibility_tol = 1e-9);

/// Exact l1 telescoping identity of the dual recursion, over all recorded
/// rounds: sum_t ||[g(x_t)]_+||_1 on the left and
/// ||q_T||_1/gamma_T + sum_{t<T} (1/gamma_t - 1/gamma_{t+1}) ||q_t||_1 on the
/// right. Holds to floating-point accuracy on every run.
CertificateSides dual_telescoping_sides(const PrimalDualTrace& trace);

/// Euclidean-norm violation bound derived from the identity:
///   sum_t ||[g(x_t)]_+|| <= sqrt(m) (||q_T||/gamma_T
///                                    + sum_{t<T} (1/gamma_t - 1/gamma_{t+1}) ||q_t||).
CertificateSides dual_norm_bound_sides(const PrimalDualTrace& trace, std::size_t constraint_count);

}  // namespace oco
