// Constraint and loss oracles plus the uniform problem bounds record.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "oco/vec.hpp"

namespace oco {

struct ConstraintEval {
    Vec values;   // g(x)
    Vec clipped;  // [g(x)]_+ componentwise
};

/// Vector constraint function g : R^p -> R^m, fixed for the whole run.
/// Affine oracles expose their matrix so solvers can exploit the structure;
/// general oracles are value-and-subgradient callbacks with declared
/// dimensions validated at construction.
///
/// Subgradient clipping convention: row j of the clipped subgradient is the
/// zero row when g_j(x) < 0 and the full subgradient row otherwise, including
/// at g_j(x) = 0.
///
/// Immutable after construction. Callbacks must be side-effect-free.
class ConstraintOracle {
  public:
    /// g(x) = A x - b.
    static ConstraintOracle affine(Mat A, Vec b);

    using GeneralFn = std::function<void(const Vec& x, Vec& values, Mat& subgradient)>;
    static ConstraintOracle general(std::size_t dimension, std::size_t count, GeneralFn eval);

    std::size_t dimension() const { return dim_; }
    std::size_t count() const { return count_; }
    bool is_affine() const { return affine_; }

    const Mat& matrix() const;  // affine only
    const Vec& offset() const;  // affine only

    ConstraintEval evaluate(const Vec& x) const;
    Vec values(const Vec& x) const { return evaluate(x).values; }

    /// Full (unclipped) subgradient matrix, one row per component.
    Mat subgradient(const Vec& x) const;

    /// Clipped subgradient per the convention above.
    Mat clipped_subgradient(const Vec& x) const;

  private:
    ConstraintOracle() = default;

    bool affine_ = false;
    std::size_t dim_ = 0;
    std::size_t count_ = 0;
    Mat A_;
    Vec b_;
    GeneralFn eval_;
};

/// Per-round loss oracle f_t. The algorithms never hold one of these: the
/// harness queries values/subgradients only after a decision is committed and
/// passes the observed subgradient in, which keeps the reveal-after-decision
/// information pattern structural.
class LossOracle {
  public:
    /// f_t(x) = <theta_t, x>
    static LossOracle linear(std::vector<Vec> thetas);

    /// f_t(x) = ||x - theta_t||^2 + linear_scale * <theta_t, x>
    /// Strongly convex with modulus 1 in the f(x) - f(y) - <x-y, df(y)> >= mu||x-y||^2 sense.
    static LossOracle quadratic(std::vector<Vec> thetas, double linear_scale);

    using ValueFn = std::function<double(std::size_t t, const Vec& x)>;
    using SubgradFn = std::function<Vec(std::size_t t, const Vec& x)>;
    static LossOracle general(std::size_t dimension, std::size_t horizon, ValueFn value, SubgradFn subgradient);

    std::size_t dimension() const { return dim_; }
    std::size_t horizon() const { return horizon_; }

    /// t is 1-based and must be within the horizon.
    double value(std::size_t t, const Vec& x) const;
    Vec subgradient(std::size_t t, const Vec& x) const;

    /// sum_{t=1..T} f_t(x). O(1) per call for the linear and quadratic
    /// variants via prefix sums computed at construction.
    double sum_values(std::size_t T, const Vec& x) const;

    /// Subgradient of x -> sum_{t=1..T} f_t(x); same prefix-sum shortcut.
    Vec sum_subgradient(std::size_t T, const Vec& x) const;

    const Vec& theta(std::size_t t) const;  // linear/quadratic only

  private:
    enum class Kind { Linear, Quadratic, General };
    LossOracle() = default;
    void build_prefix_sums();

    Kind kind_ = Kind::General;
    std::size_t dim_ = 0;
    std::size_t horizon_ = 0;
    std::vector<Vec> thetas_;
    double linear_scale_ = 0.0;
    // cum_theta_[t] = sum_{s<=t} theta_s (index 0 is the zero vector),
    // cum_theta_sq_[t] = sum_{s<=t} ||theta_s||^2.
    std::vector<Vec> cum_theta_;
    std::vector<double> cum_theta_sq_;
    ValueFn value_;
    SubgradFn subgrad_;
};

/// Uniform bounds of the standing assumptions: F bounds the per-round loss
/// range and ||g(x)||, G bounds subgradient norms of both f_t and g, and
/// diameter bounds ||x - y|| over the base set.
struct ProblemBounds {
    double F;
    double G;
    double diameter;

    ProblemBounds(double F_, double G_, double diameter_);

    /// Largest gamma_0 for which the dual-stepsize theory applies.
    double theoretical_gamma0() const;
};

}  // namespace oco
