// Regret, constraint-violation metrics, path length, hindsight comparators
// and empirical growth-exponent fits.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oco/feasible_set.hpp"
#include "oco/oracles.hpp"
#include "oco/records.hpp"

namespace oco {

/// Feasibility tolerance used when validating comparator points.
inline constexpr double kFeasibilityTol = 1e-9;

/// sum_t f_t(x_t) - sum_t f_t(y_t). A static comparator is broadcast; a
/// dynamic one must match the record count.
double regret(const std::vector<RoundRecord>& records, const ComparatorSequence& comparator,
              const LossOracle& losses);

/// The four violation metrics over a run:
///   ccv            = sum_t ||[g(x_t)]_+||        (the paper's headline metric)
///   ccv_norm_of_sum= ||sum_t [g(x_t)]_+||
///   ccv_squared    = sum_t ||[g(x_t)]_+||^2
///   plain          = ||[sum_t g(x_t)]_+||        (permits compensation)
/// They always satisfy plain <= ccv_norm_of_sum <= ccv <= sqrt(m) * ccv_norm_of_sum.
struct ViolationMetrics {
    double ccv = 0.0;
    double ccv_norm_of_sum = 0.0;
    double ccv_squared = 0.0;
    double plain = 0.0;
};
ViolationMetrics violation_metrics(const std::vector<RoundRecord>& records);

/// P_T = sum_t ||y_{t+1} - y_t||; zero for static or constant sequences.
double path_length(const ComparatorSequence& comparator);

/// Offline minimizer of sum_{t<=T} f_t over {x in set : g(x) <= 0}.
/// For p <= 2 the optimum is located by multi-level grid search over the
/// set's bounding box (certified against an exhaustive grid in tests); for
/// p > 2 a best-effort projected-subgradient pass with a large clipped
/// penalty is used and no certificate is claimed.
/// Throws InfeasibleProblem when no feasible point is found.
Vec hindsight_static_optimum(const LossOracle& losses, std::size_t T, const ConstraintOracle& constraints,
                             const FeasibleSet& set);

/// Least-squares slope of log(value) against log(T).
struct GrowthFit {
    double exponent = 0.0;
    std::size_t used = 0;     // checkpoints entering the fit
    std::size_t floored = 0;  // zero-valued checkpoints floored or dropped
};

enum class ZeroPolicy {
    Floor,    // replace zeros by machine epsilon, keep them in the fit
    Exclude,  // drop zeros from the fit (acceptance-grade)
};

/// Checkpoints are (T, value) pairs with strictly increasing T and value >= 0.
/// Throws InsufficientData when fewer than three usable points remain.
GrowthFit growth_exponent(const std::vector<std::pair<double, double>>& checkpoints,
                          ZeroPolicy policy = ZeroPolicy::Exclude);

}  // namespace oco
