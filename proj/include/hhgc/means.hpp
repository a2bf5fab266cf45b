#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hhgc {

/// Pair of positive numbers used as arguments to the bivariate means.
/// Every mean is symmetric in (a, b); ordering constraints, where a use
/// requires them, are enforced by the consuming operation.
struct MeanPair {
    double a;
    double b;

    MeanPair(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(0.0 < b))
            throw std::domain_error("MeanPair requires finite positive a, b");
    }
};

/// Arithmetic mean (a + b) / 2.
inline double arithmetic_mean(const MeanPair& p) { return 0.5 * (p.a + p.b); }

/// Geometric mean sqrt(a * b).
inline double geometric_mean(const MeanPair& p) { return std::sqrt(p.a * p.b); }

/// Logarithmic mean (b - a) / (log b - log a); continuous limit a at a = b.
inline double logarithmic_mean(const MeanPair& p) {
    if (p.a == p.b) return p.a;
    return (p.b - p.a) / (std::log(p.b) - std::log(p.a));
}

/// p-logarithmic mean
///   L_p(a, b) = ((b^{p+1} - a^{p+1}) / ((p+1)(b - a)))^{1/p},
/// defined for a != b and exponent p outside {-1, 0}. Evaluated in the log
/// domain so large |p| does not overflow the intermediate powers.
inline double p_logarithmic_mean(const MeanPair& p, double exponent) {
    if (!std::isfinite(exponent) || exponent == 0.0 || exponent == -1.0)
        throw std::domain_error("p_logarithmic_mean requires finite p outside {-1, 0}");
    if (p.a == p.b)
        throw std::domain_error("p_logarithmic_mean requires a != b");
    const long double r = static_cast<long double>(exponent) + 1.0L;
    const long double lo_v = std::min<long double>(p.a, p.b);
    const long double hi_v = std::max<long double>(p.a, p.b);
    const long double la = std::log(static_cast<long double>(p.a));
    const long double lb = std::log(static_cast<long double>(p.b));
    // |b^r - a^r| = e^hi (1 - e^{lo-hi}) with hi - lo = |r| log(hi_v/lo_v).
    // The log ratio comes from log1p of the exact difference so nearly-equal
    // arguments keep full relative accuracy, and expm1 preserves it in the
    // bracket; the quotient below is positive for either ordering of a, b
    // because numerator and denominator flip signs together.
    const long double delta = std::log1p((hi_v - lo_v) / lo_v);
    const long double hi = std::max(r * la, r * lb);
    const long double log_num = hi + std::log(-std::expm1(-std::fabs(r) * delta));
    const long double log_den = std::log(std::fabs(r)) + std::log(hi_v - lo_v);
    return static_cast<double>(
        std::exp((log_num - log_den) / static_cast<long double>(exponent)));
}

} // namespace hhgc
