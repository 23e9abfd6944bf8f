// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace oco {

Schedule::Schedule(Kind kind, double alpha0, double c, double mu, std::size_t horizon, double gamma0)
    : kind_(kind), alpha0_(alpha0), c_(c), mu_(mu), horizon_(horizon), gamma0_(gamma0) {
    if (!(gamma0_ > 0.0) || !std::isfinite(gamma0_)) throw std::invalid_argument("Schedule: gamma0 must be > 0");
}

Schedule Schedule::fixed_horizon_convex(double alpha0, double c, std::size_t T, double gamma0) {
    if (!(alpha0 > 0.0)) throw std::invalid_argument("Schedule: alpha0 must be > 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("Schedule: c must lie in (0,1)");
    if (T == 0) throw std::invalid_argument("Schedule: horizon must be >= 1");
    return Schedule(Kind::FixedHorizonConvex, alpha0, c, 0.0, T, gamma0);
}

Schedule Schedule::strongly_convex(double mu, double gamma0) {
    if (!(mu > 0.0)) throw std::invalid_argument("Schedule: mu must be > 0");
    return Schedule(Kind::StronglyConvex, 0.0, 0.0, mu, 0, gamma0);
}

Schedule Schedule::anytime_dynamic(double alpha0, double c, double gamma0) {
    if (!(alpha0 > 0.0)) throw std::invalid_argument("Schedule: alpha0 must be > 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("Schedule: c must lie in (0,1)");
    return Schedule(Kind::AnytimeDynamic, alpha0, c, 0.0, 0, gamma0);
}

Schedule Schedule::path_informed(double c, double path_length, double gamma0) {
    if (path_length < 0.0) throw std::invalid_argument("Schedule: path length must be >= 0");
    Schedule s = anytime_dynamic(std::pow(1.0 + path_length, c), c, gamma0);
    s.kind_ = Kind::PathInformed;
    return s;
}

double Schedule::alpha(std::size_t t) const {
    if (t == 0) throw std::invalid_argument("Schedule::alpha: rounds are 1-based");
    switch (kind_) {
        case Kind::FixedHorizonConvex:
            return alpha0_ / std::pow(static_cast<double>(horizon_), c_);
        case Kind::StronglyConvex:
            return 1.0 / (static_cast<double>(t) * mu_);
        case Kind::AnytimeDynamic:
        case Kind::PathInformed:
            return alpha0_ / std::pow(static_cast<double>(t), c_);
    }
    return 0.0;
}

double Schedule::gamma(std::size_t t) const { return gamma0_ / std::sqrt(alpha(t)); }

bool Schedule::respects_theory_bound(double G) const { return gamma0_ <= 1.0 / (std::sqrt(2.0) * G); }

std::string Schedule::describe() const {
    switch (kind_) {
        case Kind::FixedHorizonConvex:
            return "fixed_horizon(alpha0=" + std::to_string(alpha0_) + ", c=" + std::to_string(c_) +
                   ", T=" + std::to_string(horizon_) + ")";
        case Kind::StronglyConvex:
            return "strongly_convex(mu=" + std::to_string(mu_) + ")";
        case Kind::AnytimeDynamic:
            return "anytime(alpha0=" + std::to_string(alpha0_) + ", c=" + std::to_string(c_) + ")";
        case Kind::PathInformed:
            return "path_informed(alpha0=" + std::to_string(alpha0_) + ", c=" + std::to_string(c_) + ")";
    }
    return "";
}

}  // namespace oco
