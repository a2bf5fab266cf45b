#pragma once

#include <cmath>
#include <stdexcept>

namespace hhgc {

/// Closed interval [a, b] on the positive axis, 0 < a < b.
/// All bound and integral operations in this library work on such intervals;
/// the constructor enforces the invariant once so downstream code can assume it.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(a < b))
            throw std::domain_error("Interval requires finite 0 < a < b");
    }

    double width() const { return b - a; }
    /// Geometric midpoint sqrt(a*b), the natural center for multiplicative splits.
    double geometric_mid() const { return std::sqrt(a * b); }
    /// log(b) - log(a), the length of the interval in the log metric.
    double log_ratio() const { return std::log(b / a); }
};

} // namespace hhgc
