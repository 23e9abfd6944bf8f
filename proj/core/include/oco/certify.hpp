// Lemma/oracle certification suites: executable forms of the identities and
// inequalities the theory guarantees, run on randomized instances.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oco {

/// Prox-vs-brute-force dominance on random 2-D box instances (m <= 3 affine
/// constraints, penalty entries in [0,5]).
struct ProxEquivalenceResult {
    int count = 0;
    int failures = 0;          // instances with excess > 1e-3
    double max_excess = 0.0;   // max over instances of solver_obj - oracle_obj
    double elapsed_seconds = 0.0;
};
ProxEquivalenceResult certify_prox_oracle_equivalence(int count, std::uint64_t seed, double grid_step = 5e-3);

/// Prox variational inequality: for the returned point y, certificate
/// subgradient s and sampled feasible x,
///   <y - x, s> <= ||x-z||^2 - ||x-y||^2 - ||y-z||^2 + slack,
/// slack = 10x solver tolerance.
struct ViCertificateResult {
    int instances = 0;
    int samples_per_instance = 0;
    double slack = 0.0;
    double max_violation = 0.0;  // max over instances/samples of lhs - rhs (before slack)
};
ViCertificateResult certify_prox_variational_inequality(int instances, int samples, std::uint64_t seed);

/// Dual-state invariants over an online-LP run: q >= 0 and componentwise
/// nondecreasing every round, the exact l1 telescoping identity, the
/// Euclidean-norm violation bound, and the metric sandwich on the records.
struct DualInvariantsResult {
    bool q_nonnegative = false;
    bool q_nondecreasing = false;
    double telescoping_rel_err = 0.0;
    double norm_bound_margin = 0.0;       // rhs - lhs (must be >= ~0)
    double sandwich_max_violation = 0.0;  // from the run's round records
};
DualInvariantsResult certify_dual_invariants(std::size_t T, std::uint64_t seed);

/// Hedge-layer invariants over randomized synthetic runs: simplex weights,
/// incremental-vs-closed-form weights, zero surrogate self-loss, combined
/// decision inside the set, and the expert-tracking regret bound
///   sum_t l_t(x_t) - min_i { sum_t l_t(x_{i,t}) + (1/beta) ln(1/w_{i,1}) }
///     <= beta F_h^2 T / 2  with  F_h = G d(X).
struct HedgeInvariantsResult {
    int runs = 0;
    double max_simplex_error = 0.0;
    double max_closed_form_rel_err = 0.0;
    double max_self_loss = 0.0;
    double max_bound_violation = 0.0;  // lhs - rhs, before any slack
    bool combined_always_in_set = false;
};
HedgeInvariantsResult certify_hedge_invariants(int runs, std::size_t T, std::uint64_t seed);

/// Aggregate regret inequality on an online-LP run against the certified
/// feasible hindsight comparator: lhs <= rhs + T * slack.
struct Lemma1AggregateResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack_budget = 0.0;  // T * 10 * solver tol
};
Lemma1AggregateResult certify_lemma1_aggregate(std::size_t T, std::uint64_t seed);

/// One named check with a pass verdict, for CLI reporting.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full certification suite at desk scale.
std::vector<CheckLine> run_certification_suite(std::uint64_t seed);

}  // namespace oco
