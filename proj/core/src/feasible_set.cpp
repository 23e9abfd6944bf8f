// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/feasible_set.hpp"

#include <cmath>
#include <stdexcept>

namespace oco {

FeasibleSet FeasibleSet::box(Vec lower, Vec upper) {
    if (lower.size() != upper.size()) throw std::invalid_argument("FeasibleSet::box: bound dimension mismatch");
    if (lower.empty()) throw std::invalid_argument("FeasibleSet::box: empty bounds");
    if (!all_finite(lower) || !all_finite(upper)) throw std::invalid_argument("FeasibleSet::box: non-finite bounds");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) throw std::invalid_argument("FeasibleSet::box: lower > upper");
    const std::size_t dim = lower.size();
    return FeasibleSet(Kind::Box, std::move(lower), std::move(upper), 0.0, dim);
}

FeasibleSet FeasibleSet::ball(Vec center, double radius) {
    if (center.empty()) throw std::invalid_argument("FeasibleSet::ball: empty center");
    if (!all_finite(center) || !(radius > 0.0)) throw std::invalid_argument("FeasibleSet::ball: invalid parameters");
    const std::size_t dim = center.size();
    return FeasibleSet(Kind::Ball, std::move(center), Vec{}, radius, dim);
}

FeasibleSet FeasibleSet::symmetric_box(std::size_t dim, double half_width) {
    return box(Vec(dim, -half_width), Vec(dim, half_width));
}

Vec FeasibleSet::project(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("FeasibleSet::project: dimension mismatch");
    if (kind_ == Kind::Box) {
        Vec y(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            double v = x[i];
            if (v < a_[i]) v = a_[i];
            if (v > b_[i]) v = b_[i];
            y[i] = v;
        }
        return y;
    }
    const double d = distance(x, a_);
    if (d <= radius_) return x;
    Vec y(dim_);
    double scale = radius_ / d;
    // Rounding can land the scaled point one ulp outside; shrink the scale
    // until the result verifiably lies in the ball so projection is exactly
    // idempotent.
    for (;;) {
        for (std::size_t i = 0; i < dim_; ++i) y[i] = a_[i] + scale * (x[i] - a_[i]);
        if (distance(y, a_) <= radius_) return y;
        scale = std::nextafter(scale, 0.0);
    }
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
    if (x.size() != dim_) throw std::invalid_argument("FeasibleSet::contains: dimension mismatch");
    if (kind_ == Kind::Box) {
        for (std::size_t i = 0; i < dim_; ++i)
            if (x[i] < a_[i] - tol || x[i] > b_[i] + tol) return false;
        return true;
    }
    return distance(x, a_) <= radius_ + tol;
}

double FeasibleSet::diameter() const {
    if (kind_ == Kind::Box) return distance(b_, a_);
    return 2.0 * radius_;
}

}  // namespace oco
