#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "functions.hpp"
#include "interval.hpp"

namespace hhgc {

namespace detail {

// The three weight kernels share the removable singularity at u = 1. Near it
// the closed forms cancel catastrophically, so a Taylor expansion in
// w = u - 1 takes over below |w| = 1e-4; elsewhere the closed form is
// evaluated in long double, which keeps both branches within ~1e-15 of each
// other at the switch.
inline constexpr double kSeriesSwitch = 1e-4;

inline void require_positive_u(double u) {
    if (!std::isfinite(u) || !(u > 0.0))
        throw std::domain_error("kernel argument u must be finite and positive");
}

} // namespace detail

/// h1(u) = (u - log u - 1) / log^2 u, the weight integral with factor (1-t).
/// h1(1) = 1/2.
inline double h1(double u) {
    detail::require_positive_u(u);
    const double w = u - 1.0;
    if (std::fabs(w) < detail::kSeriesSwitch)
        return 0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w * (1.0 / 45.0 - w * 7.0 / 480.0)));
    const long double lu = std::log(static_cast<long double>(u));
    // (u - 1) is exact near 1; subtracting log u from it keeps the cancelled
    // numerator accurate to ~eps/|u-1| instead of ~eps/(u-1)^2.
    return static_cast<double>(((static_cast<long double>(u) - 1.0L) - lu) / (lu * lu));
}

/// h2(u) = (u log u - u + 1) / log^2 u, the weight integral with factor t.
/// h2(1) = 1/2.
inline double h2(double u) {
    detail::require_positive_u(u);
    const double w = u - 1.0;
    if (std::fabs(w) < detail::kSeriesSwitch)
        return 0.5 + w * (1.0 / 3.0 + w * (-1.0 / 24.0 + w * (7.0 / 360.0 - w * 17.0 / 1440.0)));
    const long double ul = static_cast<long double>(u);
    const long double lu = std::log(ul);
    // u log u - (u - 1): same cancellation-aware grouping as h1.
    return static_cast<double>((ul * lu - (ul - 1.0L)) / (lu * lu));
}

/// h3(u) = (u - 1) / log u, the unweighted integral; h3 = h1 + h2 and
/// h3(1) = 1.
inline double h3(double u) {
    detail::require_positive_u(u);
    const double w = u - 1.0;
    if (std::fabs(w) < detail::kSeriesSwitch)
        return 1.0 + w * (0.5 + w * (-1.0 / 12.0 + w * (1.0 / 24.0 - w * 19.0 / 720.0)));
    const long double lu = std::log(static_cast<long double>(u));
    return static_cast<double>((static_cast<long double>(u) - 1.0L) / lu);
}

/// The ratio pair entering every bound:
///   theta    = (a |f'(a)|^s / (b |f'(b)|^s))^{q/2},
///   vartheta = 1 / theta.
/// Computed once in the log domain so the pair is exactly reciprocal.
struct ThetaPair {
    double theta;
    double vartheta;
    double log_theta;
};

/// theta pair from raw ingredients. df_a, df_b are the derivative magnitudes
/// at the endpoints; zero makes the ratio degenerate and throws.
inline ThetaPair theta_pair_from(double a, double b, double df_a, double df_b, double s,
                                 double q) {
    if (!(0.0 < a) || !(a < b) || !std::isfinite(b))
        throw std::domain_error("theta_pair requires 0 < a < b");
    if (!std::isfinite(df_a) || !std::isfinite(df_b) || !(df_a > 0.0) || !(df_b > 0.0))
        throw std::domain_error("theta_pair requires positive finite derivative magnitudes");
    if (!std::isfinite(s) || !std::isfinite(q))
        throw std::domain_error("theta_pair requires finite s, q");
    const double log_theta =
        0.5 * q * (std::log(a) - std::log(b) + s * (std::log(df_a) - std::log(df_b)));
    return ThetaPair{std::exp(log_theta), std::exp(-log_theta), log_theta};
}

inline ThetaPair theta_pair(const FunctionSpec& spec, const Interval& iv,
                            const ConvexityParams& params) {
    const double df_a = std::fabs(spec.derivative(iv.a));
    const double df_b = std::fabs(spec.derivative(iv.b));
    return theta_pair_from(iv.a, iv.b, df_a, df_b, params.s, params.q);
}

/// Which side of 1 the endpoint derivative magnitudes fall on. Every bound
/// assembles its two terms from a table keyed on this tag. Values exactly 1
/// classify into the "<= 1" tags, and the tables are built so adjacent cases
/// agree there.
enum class CaseTag {
    both_le_1,
    both_ge_1,
    a_le_1_le_b,
    b_le_1_le_a,
};

inline std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::both_le_1: return "both_le_1";
        case CaseTag::both_ge_1: return "both_ge_1";
        case CaseTag::a_le_1_le_b: return "a_le_1_le_b";
        case CaseTag::b_le_1_le_a: return "b_le_1_le_a";
    }
    return "?";
}

inline CaseTag classify_case(double df_a, double df_b) {
    if (df_a <= 1.0 && df_b <= 1.0) return CaseTag::both_le_1;
    if (df_a <= 1.0) return CaseTag::a_le_1_le_b;
    if (df_b <= 1.0) return CaseTag::b_le_1_le_a;
    return CaseTag::both_ge_1;
}

/// The elementary exponent comparisons that justify the case tables:
/// for t, s in (0, 1],
///   mu^(t^s)  <= mu^(t s)            when 0 < mu <= 1,
///   eta^(t^s) <= eta^(t s + 1 - s)   when eta >= 1.
/// Verified by comparing exponents directly (the bases' monotonicity is
/// analytic), with a 1e-15 slack absorbing rounding at the equality edges
/// t = 1 and s = 1.
inline bool exponent_bound_check(double mu, double eta, double t, double s) {
    if (!std::isfinite(mu) || !(0.0 < mu) || !(mu <= 1.0))
        throw std::domain_error("exponent_bound_check requires mu in (0, 1]");
    if (!std::isfinite(eta) || !(eta >= 1.0))
        throw std::domain_error("exponent_bound_check requires eta >= 1");
    if (!std::isfinite(t) || !(t > 0.0) || !(t <= 1.0) ||
        !std::isfinite(s) || !(s > 0.0) || !(s <= 1.0))
        throw std::domain_error("exponent_bound_check requires t, s in (0, 1]");

    constexpr double kSlack = 1e-15;
    const double ts_pow = std::pow(t, s);
    // mu <= 1: exponent t^s >= t*s makes the power smaller.
    const bool small_base_ok = (mu == 1.0) || (ts_pow >= t * s - kSlack);
    // eta >= 1: exponent t^s <= 1 + s(t - 1) makes the power smaller.
    const bool large_base_ok = (eta == 1.0) || (ts_pow <= 1.0 + s * (t - 1.0) + kSlack);
    return small_base_ok && large_base_ok;
}

} // namespace hhgc
