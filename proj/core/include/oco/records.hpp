// Per-round records and comparator sequences, the raw material of all metrics.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <vector>

#include "oco/vec.hpp"

namespace oco {

/// One round of a run as seen by the metrics: the decision, its loss, the raw
/// constraint values and the norm of their clipped part.
struct RoundRecord {
    std::size_t t = 0;
    Vec decision;
    double loss = 0.0;
    Vec constraint_values;
    double clipped_norm = 0.0;  // ||[g(x_t)]_+||
};

/// Static (one point broadcast over every round) or dynamic comparator.
class ComparatorSequence {
  public:
    static ComparatorSequence fixed(Vec point) { return ComparatorSequence({std::move(point)}, true); }
    static ComparatorSequence dynamic(std::vector<Vec> points);

    bool is_static() const { return static_; }
    std::size_t length() const { return points_.size(); }

    /// Comparator point for round t (1-based). Static sequences broadcast.
    const Vec& at(std::size_t t) const;

    const std::vector<Vec>& points() const { return points_; }

  private:
    ComparatorSequence(std::vector<Vec> points, bool is_static) : points_(std::move(points)), static_(is_static) {}
    std::vector<Vec> points_;
    bool static_;
};

inline ComparatorSequence ComparatorSequence::dynamic(std::vector<Vec> points) {
    if (points.empty()) throw std::invalid_argument("ComparatorSequence: empty sequence");
    return ComparatorSequence(std::move(points), false);
}

inline const Vec& ComparatorSequence::at(std::size_t t) const {
    if (t == 0) throw std::invalid_argument("ComparatorSequence::at: rounds are 1-based");
    if (static_) return points_.front();
    if (t > points_.size()) throw std::invalid_argument("ComparatorSequence::at: round out of range");
    return points_[t - 1];
}

}  // namespace oco
