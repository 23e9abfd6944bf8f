// Simple feasible sets (box, ball) with closed-form Euclidean projection.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>

#include "oco/vec.hpp"

namespace oco {

/// A closed convex set with cheap exact projection. Only boxes and Euclidean
/// balls are supported; both have closed-form nearest-point maps, which the
/// per-round subproblem solver relies on.
///
/// Immutable after construction; safe to share across threads.
class FeasibleSet {
  public:
    enum class Kind { Box, Ball };

    static FeasibleSet box(Vec lower, Vec upper);
    static FeasibleSet ball(Vec center, double radius);

    /// Symmetric box [-half_width, half_width]^p.
    static FeasibleSet symmetric_box(std::size_t dim, double half_width);

    Kind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }

    /// Euclidean-nearest point of the set. Idempotent and nonexpansive.
    /// Points already in the set are returned unchanged bit-for-bit.
    Vec project(const Vec& x) const;

    bool contains(const Vec& x, double tol = 0.0) const;

    /// Exact diameter: ||upper - lower|| for a box, 2r for a ball.
    double diameter() const;

    // Box accessors (valid only for Kind::Box).
    const Vec& lower() const { return a_; }
    const Vec& upper() const { return b_; }
    // Ball accessors (valid only for Kind::Ball).
    const Vec& center() const { return a_; }
    double radius() const { return radius_; }

  private:
    FeasibleSet(Kind kind, Vec a, Vec b, double radius, std::size_t dim)
        : kind_(kind), a_(std::move(a)), b_(std::move(b)), radius_(radius), dim_(dim) {}

    Kind kind_;
    Vec a_;  // lower / center
    Vec b_;  // upper / unused
    double radius_ = 0.0;
    std::size_t dim_;
};

}  // namespace oco
