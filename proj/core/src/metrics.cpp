// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oco/errors.hpp"

namespace oco {

double regret(const std::vector<RoundRecord>& records, const ComparatorSequence& comparator,
              const LossOracle& losses) {
    if (records.empty()) throw std::invalid_argument("regret: empty record set");
    if (!comparator.is_static() && comparator.length() != records.size())
        throw std::invalid_argument("regret: comparator length must match record count");
    double lhs = 0.0;
    double rhs = 0.0;
    for (const RoundRecord& r : records) {
        lhs += r.loss;
        rhs += losses.value(r.t, comparator.at(r.t));
    }
    return lhs - rhs;
}

ViolationMetrics violation_metrics(const std::vector<RoundRecord>& records) {
    if (records.empty()) throw std::invalid_argument("violation_metrics: empty record set");
    const std::size_t m = records.front().constraint_values.size();
    Vec sum_clipped(m, 0.0);
    Vec sum_values(m, 0.0);
    ViolationMetrics out;
    for (const RoundRecord& r : records) {
        if (r.constraint_values.size() != m)
            throw std::invalid_argument("violation_metrics: inconsistent constraint dimension");
        const Vec clipped = clipped_nonnegative(r.constraint_values);
        const double cn = norm2(clipped);
        out.ccv += cn;
        out.ccv_squared += cn * cn;
        axpy(1.0, clipped, sum_clipped);
        axpy(1.0, r.constraint_values, sum_values);
    }
    out.ccv_norm_of_sum = norm2(sum_clipped);
    out.plain = norm2(clipped_nonnegative(sum_values));
    return out;
}

double path_length(const ComparatorSequence& comparator) {
    if (comparator.is_static()) return 0.0;
    const auto& pts = comparator.points();
    double total = 0.0;
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) total += distance(pts[t + 1], pts[t]);
    return total;
}

namespace {

struct GridBest {
    Vec point;
    double objective = std::numeric_limits<double>::infinity();
    bool found = false;
};

bool feasible(const Vec& x, const ConstraintOracle& constraints, const FeasibleSet& set) {
    if (!set.contains(x)) return false;
    for (double v : constraints.values(x))
        if (v > 0.0) return false;
    return true;
}

void scan_grid(const LossOracle& losses, std::size_t T, const ConstraintOracle& constraints,
               const FeasibleSet& set, const Vec& lo, const Vec& hi, std::size_t points_per_axis,
               GridBest& best) {
    const std::size_t dim = lo.size();
    Vec x(dim);
    auto consider = [&](const Vec& pt) {
        if (!feasible(pt, constraints, set)) return;
        const double obj = losses.sum_values(T, pt);
        if (!best.found || obj < best.objective) {
            best.found = true;
            best.objective = obj;
            best.point = pt;
        }
    };
    const double n = static_cast<double>(points_per_axis - 1);
    if (dim == 1) {
        for (std::size_t i = 0; i < points_per_axis; ++i) {
            x[0] = lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / n;
            consider(x);
        }
    } else {
        for (std::size_t i = 0; i < points_per_axis; ++i) {
            x[0] = lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / n;
            for (std::size_t j = 0; j < points_per_axis; ++j) {
                x[1] = lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / n;
                consider(x);
            }
        }
    }
}

std::pair<Vec, Vec> bounding_box(const FeasibleSet& set) {
    if (set.kind() == FeasibleSet::Kind::Box) return {set.lower(), set.upper()};
    Vec lo = set.center(), hi = set.center();
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] -= set.radius();
        hi[i] += set.radius();
    }
    return {lo, hi};
}

Vec hindsight_gridded(const LossOracle& losses, std::size_t T, const ConstraintOracle& constraints,
                      const FeasibleSet& set) {
    auto [lo, hi] = bounding_box(set);
    const std::size_t dim = lo.size();

    GridBest best;
    std::size_t coarse = 201;
    scan_grid(losses, T, constraints, set, lo, hi, coarse, best);
    if (!best.found) {
        coarse = 801;
        scan_grid(losses, T, constraints, set, lo, hi, coarse, best);
    }
    if (!best.found) throw InfeasibleProblem("hindsight_static_optimum: no feasible grid point");

    double step = (hi[0] - lo[0]) / static_cast<double>(coarse - 1);
    for (std::size_t i = 0; i < dim; ++i)
        step = std::max(step, (hi[i] - lo[i]) / static_cast<double>(coarse - 1));
    for (int level = 0; level < 7; ++level) {
        Vec wlo(dim), whi(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            wlo[i] = std::max(lo[i], best.point[i] - 2.0 * step);
            whi[i] = std::min(hi[i], best.point[i] + 2.0 * step);
        }
        scan_grid(losses, T, constraints, set, wlo, whi, 41, best);
        step /= 10.0;
    }
    return best.point;
}

Vec hindsight_penalized(const LossOracle& losses, std::size_t T, const ConstraintOracle& constraints,
                        const FeasibleSet& set) {
    // Best effort for p > 2: projected subgradient on the summed loss plus a
    // large clipped penalty, then a feasibility polish with the penalty alone.
    const std::size_t dim = set.dimension();
    Vec x = set.project(Vec(dim, 0.0));
    const double weight = 1e6;
    double lip = 1.0;
    Vec best = x;
    double best_obj = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 5000; ++k) {
        Vec s = losses.sum_subgradient(T, x);
        const Mat sub = constraints.clipped_subgradient(x);
        for (std::size_t j = 0; j < sub.rows; ++j)
            for (std::size_t i = 0; i < dim; ++i) s[i] += weight * sub(j, i);
        lip = std::max(lip, norm2(s));
        const double eta = set.diameter() / (lip * std::sqrt(static_cast<double>(k)));
        for (std::size_t i = 0; i < dim; ++i) x[i] -= eta * s[i];
        x = set.project(x);
        if (feasible(x, constraints, set)) {
            const double obj = losses.sum_values(T, x);
            if (obj < best_obj) {
                best_obj = obj;
                best = x;
            }
        }
    }
    if (!std::isfinite(best_obj)) throw InfeasibleProblem("hindsight_static_optimum: polish found no feasible point");
    return best;
}

}  // namespace

Vec hindsight_static_optimum(const LossOracle& losses, std::size_t T, const ConstraintOracle& constraints,
                             const FeasibleSet& set) {
    if (T == 0 || T > losses.horizon()) throw std::invalid_argument("hindsight_static_optimum: bad horizon");
    if (losses.dimension() != set.dimension() || constraints.dimension() != set.dimension())
        throw std::invalid_argument("hindsight_static_optimum: dimension mismatch");
    if (set.dimension() <= 2) return hindsight_gridded(losses, T, constraints, set);
    return hindsight_penalized(losses, T, constraints, set);
}

GrowthFit growth_exponent(const std::vector<std::pair<double, double>>& checkpoints, ZeroPolicy policy) {
    if (checkpoints.size() < 3) throw InsufficientData("growth_exponent: need at least 3 checkpoints");
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
        if (!(checkpoints[i].first < checkpoints[i + 1].first))
            throw std::invalid_argument("growth_exponent: T values must be strictly increasing");

    GrowthFit fit;
    std::vector<std::pair<double, double>> pts;
    for (const auto& [T, value] : checkpoints) {
        if (!(T > 0.0) || value < 0.0 || !std::isfinite(value))
            throw std::invalid_argument("growth_exponent: invalid checkpoint");
        if (value == 0.0) {
            ++fit.floored;
            if (policy == ZeroPolicy::Floor)
                pts.emplace_back(T, std::numeric_limits<double>::epsilon());
            continue;
        }
        pts.emplace_back(T, value);
    }
    if (pts.size() < 3) throw InsufficientData("growth_exponent: fewer than 3 positive checkpoints");

    double sx = 0.0, sy = 0.0;
    for (const auto& [T, value] : pts) {
        sx += std::log(T);
        sy += std::log(value);
    }
    const double mx = sx / static_cast<double>(pts.size());
    const double my = sy / static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [T, value] : pts) {
        const double dx = std::log(T) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(value) - my);
    }
    fit.exponent = sxy / sxx;
    fit.used = pts.size();
    return fit;
}

}  // namespace oco
