// Small dense vector/matrix helpers used throughout the library.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oco {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

inline double norm1(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += std::abs(v);
    return s;
}

inline double squared_distance(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("squared_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double distance(const Vec& a, const Vec& b) { return std::sqrt(squared_distance(a, b)); }

/// y += alpha * x
inline void axpy(double alpha, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    axpy(1.0, b, r);
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(double alpha, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = alpha * a[i];
    return r;
}

inline Vec clipped_nonnegative(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0.0 ? a[i] : 0.0;
    return r;
}

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

/// Dense row-major matrix. Dimensions here are tiny (m x p with m,p <= a few),
/// so no attempt is made at blocking or vectorization.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
    Mat(std::size_t r, std::size_t c, std::vector<double> values) : rows(r), cols(c), data(std::move(values)) {
        if (data.size() != rows * cols) throw std::invalid_argument("Mat: data size does not match shape");
    }

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    Vec row(std::size_t i) const {
        Vec r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }

    /// A x
    Vec apply(const Vec& x) const {
        if (x.size() != cols) throw std::invalid_argument("Mat::apply: dimension mismatch");
        Vec y(rows, 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    /// A^T y
    Vec apply_transpose(const Vec& y) const {
        if (y.size() != rows) throw std::invalid_argument("Mat::apply_transpose: dimension mismatch");
        Vec x(cols, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) x[j] += (*this)(i, j) * y[i];
        return x;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : data) s += v * v;
        return std::sqrt(s);
    }

    bool finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

}  // namespace oco
