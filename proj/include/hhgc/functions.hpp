#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "interval.hpp"

namespace hhgc {

namespace detail {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string shortest(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

/// Radical-inverse (van der Corput) sequence in the given base; the Halton
/// low-discrepancy points used by the sampling checks are built from bases
/// 2, 3 and 5.
inline double radical_inverse(std::uint32_t base, std::uint64_t index) {
    double inv_base = 1.0 / base, frac = 1.0, result = 0.0;
    while (index > 0) {
        frac *= inv_base;
        result += frac * static_cast<double>(index % base);
        index /= base;
    }
    return result;
}

} // namespace detail

/// Convexity parameters shared by the bound operations: the order s of the
/// s-geometric convexity hypothesis and the integrability exponent q.
struct ConvexityParams {
    double s;
    double q;

    ConvexityParams(double s_, double q_) : s(s_), q(q_) {
        if (!std::isfinite(s) || !(0.0 < s) || !(s <= 1.0))
            throw std::domain_error("ConvexityParams requires 0 < s <= 1");
        if (!std::isfinite(q) || !(q >= 1.0))
            throw std::domain_error("ConvexityParams requires q >= 1");
    }
};

/// A positive differentiable function together with its derivative and
/// domain. Built-in families cover the cases used throughout the library;
/// custom() is the extension point for arbitrary callables.
///
/// Spec strings name a family and its parameters, e.g. "power_shift:s=0.5",
/// "power:c=-0.25", "constant:c=2", "exponential".
class FunctionSpec {
public:
    using Fn = std::function<double(double)>;

    /// f(x) = c with c > 0.
    static FunctionSpec constant(double c) {
        require_finite(c, "constant c");
        if (!(c > 0.0)) throw std::invalid_argument("constant requires c > 0");
        return FunctionSpec("constant:c=" + detail::shortest(c),
                            [c](double) { return c; },
                            [](double) { return 0.0; });
    }

    /// f(x) = x^c on (0, inf).
    static FunctionSpec power(double c) {
        require_finite(c, "power c");
        return FunctionSpec("power:c=" + detail::shortest(c),
                            [c](double x) { return std::pow(x, c); },
                            [c](double x) { return c * std::pow(x, c - 1.0); });
    }

    /// f(x) = x^s / s + 1 on (0, inf), s > 0. Derivative x^{s-1}.
    static FunctionSpec power_shift(double s) {
        require_finite(s, "power_shift s");
        if (!(s > 0.0)) throw std::invalid_argument("power_shift requires s > 0");
        return FunctionSpec("power_shift:s=" + detail::shortest(s),
                            [s](double x) { return std::pow(x, s) / s + 1.0; },
                            [s](double x) { return std::pow(x, s - 1.0); });
    }

    /// f(x) = e^x on (0, inf).
    static FunctionSpec exponential() {
        return FunctionSpec("exponential",
                            [](double x) { return std::exp(x); },
                            [](double x) { return std::exp(x); });
    }

    /// Arbitrary positive differentiable function on [lo, hi] (hi may be
    /// infinite). The caller is responsible for positivity; the sampling
    /// checks will surface violations.
    static FunctionSpec custom(std::string name, Fn f, Fn df, double lo = 0.0,
                               double hi = std::numeric_limits<double>::infinity()) {
        if (!(lo >= 0.0) || !(hi > lo))
            throw std::invalid_argument("custom requires 0 <= lo < hi");
        FunctionSpec spec(std::move(name), std::move(f), std::move(df));
        spec.lo_ = lo;
        spec.hi_ = hi;
        return spec;
    }

    /// Parse a spec string of the form "family" or "family:key=value[,...]".
    /// Throws std::invalid_argument on unknown families, missing or extra
    /// parameters, and malformed numbers.
    static FunctionSpec parse(std::string_view text);

    double value(double x) const {
        check_domain(x);
        const double y = f_(x);
        if (!std::isfinite(y))
            throw std::domain_error(name_ + ": non-finite value at x=" + detail::shortest(x));
        return y;
    }

    double derivative(double x) const {
        check_domain(x);
        const double y = df_(x);
        if (!std::isfinite(y))
            throw std::domain_error(name_ + ": non-finite derivative at x=" + detail::shortest(x));
        return y;
    }

    bool contains(double x) const {
        return std::isfinite(x) && x > 0.0 && x >= lo_ && x <= hi_;
    }

    bool contains(const Interval& iv) const { return contains(iv.a) && contains(iv.b); }

    double domain_lo() const { return lo_; }
    double domain_hi() const { return hi_; }
    const std::string& name() const { return name_; }
    const std::string& family() const { return family_; }

private:
    FunctionSpec(std::string name, Fn f, Fn df)
        : name_(std::move(name)), f_(std::move(f)), df_(std::move(df)) {
        const auto colon = name_.find(':');
        family_ = (colon == std::string::npos) ? name_ : name_.substr(0, colon);
    }

    static void require_finite(double v, const char* what) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + " must be finite");
    }

    void check_domain(double x) const {
        if (!contains(x))
            throw std::domain_error(name_ + ": argument x=" + detail::shortest(x) +
                                    " outside domain");
    }

    std::string name_;
    std::string family_;
    Fn f_;
    Fn df_;
    double lo_ = 0.0;
    double hi_ = std::numeric_limits<double>::infinity();
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline double parse_number(std::string_view text, const std::string& what) {
    const std::string owned(trim(text));
    if (owned.empty())
        throw std::invalid_argument("missing numeric value for " + what);
    char* end = nullptr;
    const double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || !std::isfinite(v))
        throw std::invalid_argument("bad numeric value '" + owned + "' for " + what);
    return v;
}

} // namespace detail

inline FunctionSpec FunctionSpec::parse(std::string_view text) {
    const std::string_view trimmed = detail::trim(text);
    std::string_view family = trimmed, args;
    if (const auto colon = trimmed.find(':'); colon != std::string_view::npos) {
        family = detail::trim(trimmed.substr(0, colon));
        args = trimmed.substr(colon + 1);
    }

    // Collect key=value pairs.
    std::optional<double> param;
    std::string param_key;
    std::string_view rest = args;
    while (!detail::trim(rest).empty()) {
        std::string_view item = rest;
        if (const auto comma = rest.find(','); comma != std::string_view::npos) {
            item = rest.substr(0, comma);
            rest = rest.substr(comma + 1);
        } else {
            rest = {};
        }
        item = detail::trim(item);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value in function spec, got '" +
                                        std::string(item) + "'");
        if (param)
            throw std::invalid_argument("too many parameters in function spec '" +
                                        std::string(trimmed) + "'");
        param_key = std::string(detail::trim(item.substr(0, eq)));
        param = detail::parse_number(item.substr(eq + 1), param_key);
    }

    auto require_param = [&](const char* key) {
        if (!param || param_key != key)
            throw std::invalid_argument("family '" + std::string(family) +
                                        "' requires parameter '" + key + "'");
        return *param;
    };

    if (family == "constant") return constant(require_param("c"));
    if (family == "power") return power(require_param("c"));
    if (family == "power_shift") return power_shift(require_param("s"));
    if (family == "exponential") {
        if (param)
            throw std::invalid_argument("family 'exponential' takes no parameters");
        return exponential();
    }
    throw std::invalid_argument("unknown function family '" + std::string(family) + "'");
}

/// Maximum scaled disagreement between the stored derivative and the central
/// finite difference (f(x+h) - f(x-h)) / 2h with h = 1e-6 x, over an evenly
/// spaced sample of the interval. The scale is 1 + |f'(x)| so the result is
/// comparable across families; builtin families stay below 1e-6.
inline double validate_derivative(const FunctionSpec& spec, const Interval& iv,
                                  std::size_t samples = 100) {
    if (samples < 2) samples = 2;
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = iv.a + (iv.b - iv.a) * (static_cast<double>(i) + 0.5) /
                                    static_cast<double>(samples);
        const double h = 1e-6 * x;
        if (!spec.contains(x - h) || !spec.contains(x + h)) continue;
        const double fd = (spec.value(x + h) - spec.value(x - h)) / (2.0 * h);
        const double d = spec.derivative(x);
        worst = std::max(worst, std::fabs(fd - d) / (1.0 + std::fabs(d)));
    }
    return worst;
}

enum class ConvexityKind {
    convex,
    s_convex_second_sense,
    geometrically_convex,
    s_geometrically_convex,
};

inline std::string_view to_string(ConvexityKind k) {
    switch (k) {
        case ConvexityKind::convex: return "convex";
        case ConvexityKind::s_convex_second_sense: return "s_convex";
        case ConvexityKind::geometrically_convex: return "geom_convex";
        case ConvexityKind::s_geometrically_convex: return "s_geom_convex";
    }
    return "?";
}

inline ConvexityKind parse_convexity_kind(std::string_view text) {
    if (text == "convex") return ConvexityKind::convex;
    if (text == "s_convex") return ConvexityKind::s_convex_second_sense;
    if (text == "geom_convex") return ConvexityKind::geometrically_convex;
    if (text == "s_geom_convex") return ConvexityKind::s_geometrically_convex;
    throw std::invalid_argument("unknown convexity kind '" + std::string(text) + "'");
}

/// Outcome of a sampling convexity check. When the property fails, the worst
/// sampled counterexample is recorded.
struct ConvexityWitness {
    bool holds = true;
    struct Violation {
        double x, y, lambda;
        double lhs, rhs;
        double slack; // (lhs - rhs) / rhs, positive for violations
    };
    std::optional<Violation> violation;
};

/// Sampling check of a convexity property over the interval using a Halton
/// sequence in (x, y, lambda). A sample counts as a violation only when the
/// defining inequality fails by more than a 1e-12 relative margin, so exact
/// members of each class are never rejected for rounding reasons.
inline ConvexityWitness check_convexity(const FunctionSpec& spec, const Interval& iv,
                                        ConvexityKind kind,
                                        std::optional<double> s = std::nullopt,
                                        std::size_t samples = 100000) {
    const bool needs_s = kind == ConvexityKind::s_convex_second_sense ||
                         kind == ConvexityKind::s_geometrically_convex;
    if (needs_s) {
        if (!s) throw std::invalid_argument("convexity kind requires parameter s");
        if (!std::isfinite(*s) || !(0.0 < *s) || !(*s <= 1.0))
            throw std::domain_error("convexity parameter s must satisfy 0 < s <= 1");
    }
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");

    constexpr double kRelMargin = 1e-12;
    const double la = std::log(iv.a), lb = std::log(iv.b);
    ConvexityWitness witness;
    double worst_slack = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 1; i <= samples; ++i) {
        const double u1 = detail::radical_inverse(2, i);
        const double u2 = detail::radical_inverse(3, i);
        const double lam = detail::radical_inverse(5, i);
        if (lam <= 0.0 || lam >= 1.0) continue;

        double x, y, mid, lhs, rhs;
        switch (kind) {
            case ConvexityKind::convex:
            case ConvexityKind::s_convex_second_sense: {
                x = iv.a + (iv.b - iv.a) * u1;
                y = iv.a + (iv.b - iv.a) * u2;
                mid = lam * x + (1.0 - lam) * y;
                const double wx = kind == ConvexityKind::convex ? lam : std::pow(lam, *s);
                const double wy = kind == ConvexityKind::convex ? 1.0 - lam
                                                                : std::pow(1.0 - lam, *s);
                lhs = spec.value(mid);
                rhs = wx * spec.value(x) + wy * spec.value(y);
                break;
            }
            case ConvexityKind::geometrically_convex:
            case ConvexityKind::s_geometrically_convex: {
                x = std::exp(la + (lb - la) * u1);
                y = std::exp(la + (lb - la) * u2);
                mid = std::exp(lam * std::log(x) + (1.0 - lam) * std::log(y));
                const double ex = kind == ConvexityKind::geometrically_convex
                                      ? lam
                                      : std::pow(lam, *s);
                const double ey = kind == ConvexityKind::geometrically_convex
                                      ? 1.0 - lam
                                      : std::pow(1.0 - lam, *s);
                lhs = spec.value(mid);
                rhs = std::exp(ex * std::log(spec.value(x)) + ey * std::log(spec.value(y)));
                break;
            }
            default:
                throw std::logic_error("unreachable convexity kind");
        }

        const double slack = (lhs - rhs) / std::max(std::fabs(rhs), 1e-300);
        if (slack > kRelMargin && slack > worst_slack) {
            worst_slack = slack;
            witness.holds = false;
            witness.violation = ConvexityWitness::Violation{x, y, lam, lhs, rhs, slack};
        }
    }
    return witness;
}

/// Suprema of |f| over the two geometric halves of the interval:
/// m1 on [a, sqrt(ab)], m2 on [sqrt(ab), b].
struct SupPair {
    double m1;
    double m2;
};

/// Supremum of |f| over [lo, hi]: dense scan followed by golden-section
/// refinement around the best bracket. Exact for the monotone built-in
/// families and accurate to ~1e-12 relative for smooth unimodal profiles.
inline double sup_abs_on(const FunctionSpec& spec, double lo, double hi) {
    if (!(lo <= hi) || !spec.contains(lo) || !spec.contains(hi))
        throw std::domain_error("sup_abs_on requires [lo, hi] inside the function domain");
    if (lo == hi) return std::fabs(spec.value(lo));

    constexpr int kScanPoints = 1025;
    auto g = [&](double x) { return std::fabs(spec.value(x)); };

    double best_x = lo, best = g(lo);
    for (int i = 1; i < kScanPoints; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (kScanPoints - 1);
        const double v = g(x);
        if (v > best) { best = v; best_x = x; }
    }

    const double h = (hi - lo) / (kScanPoints - 1);
    double bl = std::max(lo, best_x - h), br = std::min(hi, best_x + h);
    constexpr double invphi = 0.61803398874989484820;
    double x1 = br - invphi * (br - bl), x2 = bl + invphi * (br - bl);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 120 && (br - bl) > 1e-15 * (1.0 + std::fabs(best_x)); ++it) {
        if (f1 < f2) {
            bl = x1; x1 = x2; f1 = f2;
            x2 = bl + invphi * (br - bl); f2 = g(x2);
        } else {
            br = x2; x2 = x1; f2 = f1;
            x1 = br - invphi * (br - bl); f1 = g(x1);
        }
    }
    return std::max({best, f1, f2});
}

inline SupPair sup_pair(const FunctionSpec& spec, const Interval& iv) {
    const double mid = iv.geometric_mid();
    return SupPair{sup_abs_on(spec, iv.a, mid), sup_abs_on(spec, mid, iv.b)};
}

} // namespace hhgc
