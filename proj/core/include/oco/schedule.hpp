// Published stepsize schedules: alpha_t nonincreasing, gamma_t = gamma0/sqrt(alpha_t).
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <string>

namespace oco {

/// The four stepsize/dual-weight schedules used by the clipped primal-dual
/// algorithm. Every variant satisfies the algorithm's input contract: alpha_t
/// is nonincreasing and gamma_t = gamma0 / sqrt(alpha_t) is nondecreasing.
///
///  - FixedHorizonConvex:  alpha_t = alpha0 / T^c      (needs T up front)
///  - StronglyConvex:      alpha_t = 1 / (t mu)        (anytime)
///  - AnytimeDynamic:      alpha_t = alpha0 / t^c      (anytime)
///  - PathInformed:        AnytimeDynamic with alpha0 = (1 + P_T)^c
class Schedule {
  public:
    enum class Kind { FixedHorizonConvex, StronglyConvex, AnytimeDynamic, PathInformed };

    static Schedule fixed_horizon_convex(double alpha0, double c, std::size_t T, double gamma0);
    static Schedule strongly_convex(double mu, double gamma0);
    static Schedule anytime_dynamic(double alpha0, double c, double gamma0);
    static Schedule path_informed(double c, double path_length, double gamma0);

    Kind kind() const { return kind_; }
    double alpha(std::size_t t) const;
    double gamma(std::size_t t) const;
    double gamma0() const { return gamma0_; }
    double alpha0() const { return alpha0_; }
    double trade_off_c() const { return c_; }
    std::size_t horizon() const { return horizon_; }

    /// gamma0 <= 1/(sqrt(2) G) is what the regret/violation theory requires.
    /// Reproduction-mode schedules (Table 2/3 verbatim) intentionally exceed
    /// it; callers treat a false return as a warning, never an error.
    bool respects_theory_bound(double G) const;

    std::string describe() const;

  private:
    Schedule(Kind kind, double alpha0, double c, double mu, std::size_t horizon, double gamma0);

    Kind kind_;
    double alpha0_;
    double c_;
    double mu_;
    std::size_t horizon_;
    double gamma0_;
};

}  // namespace oco
