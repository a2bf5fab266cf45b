#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "functions.hpp"
#include "interval.hpp"

namespace hhgc {

/// Result of an adaptive integration. error_estimate is the accumulated
/// per-panel estimator, not a proven bound; converged reports whether the
/// requested tolerances were met without exhausting the depth budget.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss. xk holds the nonnegative
// nodes; the Gauss nodes are the odd-indexed entries plus the center.
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
    double value;
    double error; // |K15 - G7|
};

template <class F>
PanelEstimate panel_gk15(F& g, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (lo + hi);

    auto eval = [&](double x) {
        const double y = g(x);
        if (!std::isfinite(y))
            throw std::domain_error("integrand returned a non-finite value");
        return y;
    };

    const double fc = eval(mid);
    double kronrod = kKronrodW[7] * fc;
    double gauss = kGaussW[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodX[i];
        const double fsum = eval(mid - dx) + eval(mid + dx);
        kronrod += kKronrodW[i] * fsum;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return PanelEstimate{kronrod, std::fabs(kronrod - gauss)};
}

/// Adaptive integration over a raw [lo, hi] range; used internally where the
/// range is not restricted to the positive axis (e.g. parameter integrals
/// over [0, 1]). See integrate() below for semantics.
template <class F>
QuadratureResult integrate_raw(F& g, double lo, double hi, double rel_tol, double abs_tol,
                               int max_depth) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::domain_error("integrate requires finite lo < hi");
    if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || !(rel_tol > 0.0 || abs_tol > 0.0))
        throw std::domain_error("integrate requires nonnegative tolerances, not both zero");
    if (max_depth < 1) throw std::domain_error("integrate requires max_depth >= 1");

    QuadratureResult result;
    const double total_width = hi - lo;

    // One whole-interval pass fixes the scale for the relative budget.
    auto first = panel_gk15(g, lo, hi);
    result.evaluations += 15;
    const double budget = std::max(abs_tol, rel_tol * std::fabs(first.value));

    struct Segment {
        double lo, hi;
        int depth;
    };
    std::vector<Segment> stack;
    stack.push_back({lo, hi, 0});
    bool depth_exhausted = false;

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();

        auto est = (seg.depth == 0) ? first : panel_gk15(g, seg.lo, seg.hi);
        if (seg.depth != 0) result.evaluations += 15;

        const double share = budget * (seg.hi - seg.lo) / total_width;
        const double mid = 0.5 * (seg.lo + seg.hi);
        const bool splittable = seg.depth < max_depth && mid > seg.lo && mid < seg.hi;
        if (est.error <= share || !splittable) {
            if (est.error > share) depth_exhausted = true;
            result.value += est.value;
            result.error_estimate += est.error;
        } else {
            // Right half first so the left half is popped and settled first.
            stack.push_back({mid, seg.hi, seg.depth + 1});
            stack.push_back({seg.lo, mid, seg.depth + 1});
        }
    }

    result.converged =
        !depth_exhausted &&
        result.error_estimate <= std::max(abs_tol, rel_tol * std::fabs(result.value));
    return result;
}

} // namespace detail

/// Adaptive Gauss-Kronrod 7/15 integration of g over [iv.a, iv.b].
/// Panels are bisected until the local estimator |K15 - G7| fits a share of
/// the global budget proportional to panel width, or max_depth is reached.
/// Accepted panels are accumulated strictly left to right, so results are
/// deterministic for a given callable and tolerance.
template <class F>
QuadratureResult integrate(F&& g, const Interval& iv, double rel_tol = 1e-10,
                           double abs_tol = 1e-12, int max_depth = 60) {
    return detail::integrate_raw(g, iv.a, iv.b, rel_tol, abs_tol, max_depth);
}

/// The product integral at the heart of the geometric bound chain:
///   (1 / (log b - log a)) * Int_a^b (f(x) / x) * f(ab / x) dx.
/// The integrand is symmetric under x -> ab/x after weighting, which the
/// symmetry check below exercises.
inline QuadratureResult product_integral(const FunctionSpec& spec, const Interval& iv,
                                         double rel_tol = 1e-10, double abs_tol = 1e-12) {
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    const double ab = iv.a * iv.b;
    auto g = [&](double x) { return spec.value(x) / x * spec.value(ab / x); };
    QuadratureResult r = integrate(g, iv, rel_tol, abs_tol);
    const double scale = 1.0 / iv.log_ratio();
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

/// Splits the product integral at the geometric midpoint and checks that the
/// two halves agree, which is forced by the x -> ab/x substitution. Returns
/// true iff the halves match within 10*tol (absolute, plus the same margin
/// relative to their size).
inline bool half_integral_symmetry_check(const FunctionSpec& spec, const Interval& iv,
                                         double tol = 1e-10) {
    if (!(tol > 0.0)) throw std::domain_error("symmetry check requires tol > 0");
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    const double ab = iv.a * iv.b;
    const double mid = iv.geometric_mid();
    auto g = [&](double x) { return spec.value(x) / x * spec.value(ab / x); };
    const auto left = integrate(g, Interval(iv.a, mid), tol, tol * 1e-2);
    const auto right = integrate(g, Interval(mid, iv.b), tol, tol * 1e-2);
    const double scale = std::max({1.0, std::fabs(left.value), std::fabs(right.value)});
    return std::fabs(left.value - right.value) <= 10.0 * tol * scale;
}

} // namespace hhgc
