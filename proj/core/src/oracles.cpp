// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oco {

ConstraintOracle ConstraintOracle::affine(Mat A, Vec b) {
    if (A.rows == 0 || A.cols == 0) throw std::invalid_argument("ConstraintOracle::affine: empty matrix");
    if (A.rows != b.size()) throw std::invalid_argument("ConstraintOracle::affine: row count must match offset size");
    if (!A.finite() || !all_finite(b)) throw std::invalid_argument("ConstraintOracle::affine: non-finite parameters");
    ConstraintOracle g;
    g.affine_ = true;
    g.dim_ = A.cols;
    g.count_ = A.rows;
    g.A_ = std::move(A);
    g.b_ = std::move(b);
    return g;
}

ConstraintOracle ConstraintOracle::general(std::size_t dimension, std::size_t count, GeneralFn eval) {
    if (dimension == 0 || count == 0) throw std::invalid_argument("ConstraintOracle::general: zero dimensions");
    if (!eval) throw std::invalid_argument("ConstraintOracle::general: missing callback");
    ConstraintOracle g;
    g.affine_ = false;
    g.dim_ = dimension;
    g.count_ = count;
    g.eval_ = std::move(eval);
    return g;
}

const Mat& ConstraintOracle::matrix() const {
    if (!affine_) throw std::invalid_argument("ConstraintOracle::matrix: oracle is not affine");
    return A_;
}

const Vec& ConstraintOracle::offset() const {
    if (!affine_) throw std::invalid_argument("ConstraintOracle::offset: oracle is not affine");
    return b_;
}

ConstraintEval ConstraintOracle::evaluate(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ConstraintOracle::evaluate: dimension mismatch");
    ConstraintEval out;
    if (affine_) {
        out.values = A_.apply(x);
        for (std::size_t j = 0; j < count_; ++j) out.values[j] -= b_[j];
    } else {
        Mat unused;
        out.values.assign(count_, 0.0);
        eval_(x, out.values, unused);
        if (out.values.size() != count_)
            throw std::invalid_argument("ConstraintOracle: callback returned wrong value count");
    }
    out.clipped = clipped_nonnegative(out.values);
    return out;
}

Mat ConstraintOracle::subgradient(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ConstraintOracle::subgradient: dimension mismatch");
    if (affine_) return A_;
    Vec values(count_, 0.0);
    Mat sub(count_, dim_);
    eval_(x, values, sub);
    if (sub.rows != count_ || sub.cols != dim_)
        throw std::invalid_argument("ConstraintOracle: callback returned wrong subgradient shape");
    return sub;
}

Mat ConstraintOracle::clipped_subgradient(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ConstraintOracle::clipped_subgradient: dimension mismatch");
    Vec values;
    Mat sub;
    if (affine_) {
        values = A_.apply(x);
        for (std::size_t j = 0; j < count_; ++j) values[j] -= b_[j];
        sub = A_;
    } else {
        values.assign(count_, 0.0);
        sub = Mat(count_, dim_);
        eval_(x, values, sub);
        if (values.size() != count_ || sub.rows != count_ || sub.cols != dim_)
            throw std::invalid_argument("ConstraintOracle: callback returned wrong shapes");
    }
    // g_j(x) = 0 takes the nonzero branch.
    for (std::size_t j = 0; j < count_; ++j) {
        if (values[j] < 0.0)
            for (std::size_t i = 0; i < dim_; ++i) sub(j, i) = 0.0;
    }
    return sub;
}

LossOracle LossOracle::linear(std::vector<Vec> thetas) {
    if (thetas.empty()) throw std::invalid_argument("LossOracle::linear: empty sequence");
    LossOracle f;
    f.kind_ = Kind::Linear;
    f.dim_ = thetas.front().size();
    f.horizon_ = thetas.size();
    f.thetas_ = std::move(thetas);
    for (const Vec& th : f.thetas_)
        if (th.size() != f.dim_ || !all_finite(th))
            throw std::invalid_argument("LossOracle::linear: inconsistent or non-finite theta");
    f.build_prefix_sums();
    return f;
}

LossOracle LossOracle::quadratic(std::vector<Vec> thetas, double linear_scale) {
    if (thetas.empty()) throw std::invalid_argument("LossOracle::quadratic: empty sequence");
    if (!std::isfinite(linear_scale)) throw std::invalid_argument("LossOracle::quadratic: non-finite scale");
    LossOracle f;
    f.kind_ = Kind::Quadratic;
    f.dim_ = thetas.front().size();
    f.horizon_ = thetas.size();
    f.linear_scale_ = linear_scale;
    f.thetas_ = std::move(thetas);
    for (const Vec& th : f.thetas_)
        if (th.size() != f.dim_ || !all_finite(th))
            throw std::invalid_argument("LossOracle::quadratic: inconsistent or non-finite theta");
    f.build_prefix_sums();
    return f;
}

LossOracle LossOracle::general(std::size_t dimension, std::size_t horizon, ValueFn value, SubgradFn subgradient) {
    if (dimension == 0 || horizon == 0) throw std::invalid_argument("LossOracle::general: zero dimensions");
    if (!value || !subgradient) throw std::invalid_argument("LossOracle::general: missing callbacks");
    LossOracle f;
    f.kind_ = Kind::General;
    f.dim_ = dimension;
    f.horizon_ = horizon;
    f.value_ = std::move(value);
    f.subgrad_ = std::move(subgradient);
    return f;
}

void LossOracle::build_prefix_sums() {
    cum_theta_.assign(horizon_ + 1, Vec(dim_, 0.0));
    cum_theta_sq_.assign(horizon_ + 1, 0.0);
    for (std::size_t t = 1; t <= horizon_; ++t) {
        cum_theta_[t] = cum_theta_[t - 1];
        axpy(1.0, thetas_[t - 1], cum_theta_[t]);
        cum_theta_sq_[t] = cum_theta_sq_[t - 1] + dot(thetas_[t - 1], thetas_[t - 1]);
    }
}

double LossOracle::value(std::size_t t, const Vec& x) const {
    if (t == 0 || t > horizon_) throw std::invalid_argument("LossOracle::value: round out of range");
    if (x.size() != dim_) throw std::invalid_argument("LossOracle::value: dimension mismatch");
    switch (kind_) {
        case Kind::Linear:
            return dot(thetas_[t - 1], x);
        case Kind::Quadratic:
            return squared_distance(x, thetas_[t - 1]) + linear_scale_ * dot(thetas_[t - 1], x);
        case Kind::General:
            return value_(t, x);
    }
    return 0.0;
}

Vec LossOracle::subgradient(std::size_t t, const Vec& x) const {
    if (t == 0 || t > horizon_) throw std::invalid_argument("LossOracle::subgradient: round out of range");
    if (x.size() != dim_) throw std::invalid_argument("LossOracle::subgradient: dimension mismatch");
    switch (kind_) {
        case Kind::Linear:
            return thetas_[t - 1];
        case Kind::Quadratic: {
            Vec g(dim_);
            const Vec& th = thetas_[t - 1];
            for (std::size_t i = 0; i < dim_; ++i) g[i] = 2.0 * (x[i] - th[i]) + linear_scale_ * th[i];
            return g;
        }
        case Kind::General:
            return subgrad_(t, x);
    }
    return Vec{};
}

double LossOracle::sum_values(std::size_t T, const Vec& x) const {
    if (T > horizon_) throw std::invalid_argument("LossOracle::sum_values: horizon exceeded");
    if (x.size() != dim_) throw std::invalid_argument("LossOracle::sum_values: dimension mismatch");
    switch (kind_) {
        case Kind::Linear:
            return dot(cum_theta_[T], x);
        case Kind::Quadratic:
            // sum ||x - th||^2 + s<th, x> = T||x||^2 + (s - 2)<sum th, x> + sum ||th||^2
            return static_cast<double>(T) * dot(x, x) + (linear_scale_ - 2.0) * dot(cum_theta_[T], x) +
                   cum_theta_sq_[T];
        case Kind::General: {
            double s = 0.0;
            for (std::size_t t = 1; t <= T; ++t) s += value_(t, x);
            return s;
        }
    }
    return 0.0;
}

Vec LossOracle::sum_subgradient(std::size_t T, const Vec& x) const {
    if (T > horizon_) throw std::invalid_argument("LossOracle::sum_subgradient: horizon exceeded");
    if (x.size() != dim_) throw std::invalid_argument("LossOracle::sum_subgradient: dimension mismatch");
    switch (kind_) {
        case Kind::Linear:
            return cum_theta_[T];
        case Kind::Quadratic: {
            Vec g(dim_);
            for (std::size_t i = 0; i < dim_; ++i)
                g[i] = 2.0 * static_cast<double>(T) * x[i] + (linear_scale_ - 2.0) * cum_theta_[T][i];
            return g;
        }
        case Kind::General: {
            Vec g(dim_, 0.0);
            for (std::size_t t = 1; t <= T; ++t) axpy(1.0, subgrad_(t, x), g);
            return g;
        }
    }
    return Vec{};
}

const Vec& LossOracle::theta(std::size_t t) const {
    if (kind_ == Kind::General) throw std::invalid_argument("LossOracle::theta: general oracle has no theta");
    if (t == 0 || t > horizon_) throw std::invalid_argument("LossOracle::theta: round out of range");
    return thetas_[t - 1];
}

ProblemBounds::ProblemBounds(double F_, double G_, double diameter_) : F(F_), G(G_), diameter(diameter_) {
    if (!(std::isfinite(F) && F > 0.0) || !(std::isfinite(G) && G > 0.0) ||
        !(std::isfinite(diameter) && diameter > 0.0))
        throw std::invalid_argument("ProblemBounds: all bounds must be positive and finite");
}

double ProblemBounds::theoretical_gamma0() const { return 1.0 / (std::sqrt(2.0) * G); }

}  // namespace oco
