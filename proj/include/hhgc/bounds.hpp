#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "functions.hpp"
#include "interval.hpp"
#include "kernels.hpp"
#include "quadrature.hpp"

namespace hhgc {

/// Which left-hand gap a bound controls: the endpoint product form
/// f(a)f(b) - I, or the geometric-midpoint form f(sqrt(ab))^2 - I, where I is
/// the product integral.
enum class Side { fafb, fsqrt };

/// Bound family: the power-mean route (valid for q >= 1) or the Holder route
/// (q > 1). Wire names "thm22" / "thm23".
enum class Theorem { power_mean, holder };

/// The third assembly table has two readings of its mixed case (derivative
/// magnitude straddling 1 with the larger value at a): the form as printed in
/// the source tables, and the form the derivation chain actually yields. They
/// differ by one factor in one term; everywhere else the tables coincide.
enum class Variant { printed, derivation_consistent };

inline std::string_view to_string(Side s) { return s == Side::fafb ? "fafb" : "fsqrt"; }
inline std::string_view to_string(Theorem t) { return t == Theorem::power_mean ? "thm22" : "thm23"; }
inline std::string_view to_string(Variant v) {
    return v == Variant::printed ? "printed" : "derivation_consistent";
}

inline Side parse_side(std::string_view text) {
    if (text == "fafb") return Side::fafb;
    if (text == "fsqrt") return Side::fsqrt;
    throw std::invalid_argument("unknown side '" + std::string(text) + "'");
}

inline Variant parse_variant(std::string_view text) {
    if (text == "printed") return Variant::printed;
    if (text == "derived" || text == "derivation_consistent") return Variant::derivation_consistent;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

/// Acceptance slack for every bound comparison: a bound "holds" when
/// lhs_gap <= rhs_bound + bound_slack(rhs_bound).
inline double bound_slack(double rhs_bound) { return 1e-8 * (1.0 + rhs_bound); }

/// Evaluation knobs shared by the bound operations.
struct EvalOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    bool check_hypothesis = true;      // sample the s-geometric hypothesis on |f'|^q
    std::size_t hypothesis_samples = 20000;
};

struct BoundInputs {
    std::string f;
    double a = 0, b = 0, s = 0, q = 0;
};

/// Everything a single bound evaluation produced, inputs echoed for
/// serialization.
struct BoundReport {
    double lhs_gap = 0.0;
    double rhs_bound = 0.0;
    CaseTag case_tag{};
    Theorem theorem{};
    Variant variant{};
    Side side{};
    bool holds = false;
    double quadrature_error = 0.0;
    bool quadrature_converged = false;
    bool hypothesis_checked = false;
    bool convexity_warning = false;
    BoundInputs inputs;
};

/// The two nested inequalities around the product integral (geometric form)
/// or the plain average (classical form).
struct ChainReport {
    double left = 0.0;
    double middle = 0.0;
    double right = 0.0;
    bool holds = false;
    double quadrature_error = 0.0;
    bool quadrature_converged = false;
};

/// Which integral identity to verify: the endpoint-product left side with
/// weight (t - 1), or the geometric-midpoint left side with weight t.
enum class IdentityForm { endpoints, midpoint };

namespace detail {

// The weighted derivative-of-product integrand shared by both identities:
// with u(t) = a (b/a)^{t/2} and v(t) = b (a/b)^{t/2},
//   (b/2) log(a/b) w (a/b)^{t/2} f(u) f'(v) + (a/2) log(b/a) w (b/a)^{t/2} f'(u) f(v).
inline double identity_integrand(const FunctionSpec& f, double a, double b, double t,
                                 double w) {
    const double lr = std::log(b / a);
    const double shrink = std::exp(-0.5 * t * lr); // (a/b)^{t/2}
    const double grow = std::exp(0.5 * t * lr);    // (b/a)^{t/2}
    const double u = a * grow;
    const double v = b * shrink;
    return 0.5 * b * (-lr) * w * shrink * f.value(u) * f.derivative(v) +
           0.5 * a * lr * w * grow * f.derivative(u) * f.value(v);
}

} // namespace detail

/// Residual |LHS - RHS| of the chosen integral identity, where LHS is the
/// gap (endpoint product or squared midpoint value, minus the product
/// integral) and RHS is the weighted parameter integral over [0, 1].
/// Callers treat residuals within 10*tol as verified.
inline double identity_residual(const FunctionSpec& spec, const Interval& iv,
                                IdentityForm form, double tol = 1e-10) {
    if (!(tol > 0.0)) throw std::domain_error("identity_residual requires tol > 0");
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");

    const auto pi = product_integral(spec, iv, tol, tol * 1e-2);

    double lhs;
    if (form == IdentityForm::endpoints) {
        lhs = spec.value(iv.a) * spec.value(iv.b) - pi.value;
    } else {
        const double fm = spec.value(iv.geometric_mid());
        lhs = fm * fm - pi.value;
    }

    auto g = [&](double t) {
        const double w = (form == IdentityForm::endpoints) ? t - 1.0 : t;
        return detail::identity_integrand(spec, iv.a, iv.b, t, w);
    };
    const auto rhs = detail::integrate_raw(g, 0.0, 1.0, tol, tol * 1e-2, 60);
    return std::fabs(lhs - rhs.value);
}

/// The geometric bound chain
///   f(sqrt(ab))^2 <= product integral <= f(a) f(b),
/// sharp for the power family.
inline ChainReport geometric_chain(const FunctionSpec& spec, const Interval& iv,
                                   double rel_tol = 1e-10, double abs_tol = 1e-12) {
    const auto pi = product_integral(spec, iv, rel_tol, abs_tol);
    ChainReport r;
    const double fm = spec.value(iv.geometric_mid());
    r.left = fm * fm;
    r.middle = pi.value;
    r.right = spec.value(iv.a) * spec.value(iv.b);
    r.quadrature_error = pi.error_estimate;
    r.quadrature_converged = pi.converged;
    r.holds = r.left <= r.middle + bound_slack(std::fabs(r.middle)) &&
              r.middle <= r.right + bound_slack(std::fabs(r.right));
    return r;
}

/// The classical average chain
///   f((a+b)/2) <= (1/(b-a)) Int_a^b f <= (f(a) + f(b)) / 2,
/// stated for convex f; included for cross-checking the geometric form.
inline ChainReport classical_chain(const FunctionSpec& spec, const Interval& iv,
                                   double rel_tol = 1e-10, double abs_tol = 1e-12) {
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    auto g = [&](double x) { return spec.value(x); };
    const auto avg = integrate(g, iv, rel_tol, abs_tol);
    ChainReport r;
    r.left = spec.value(0.5 * (iv.a + iv.b));
    r.middle = avg.value / iv.width();
    r.right = 0.5 * (spec.value(iv.a) + spec.value(iv.b));
    r.quadrature_error = avg.error_estimate / iv.width();
    r.quadrature_converged = avg.converged;
    r.holds = r.left <= r.middle + bound_slack(std::fabs(r.middle)) &&
              r.middle <= r.right + bound_slack(std::fabs(r.right));
    return r;
}

/// Raw ingredients of an assembly: interval endpoints, derivative magnitudes
/// there, and the suprema of |f| on the two geometric halves.
struct HIngredients {
    double a, b;
    double df_a, df_b;
    double m1, m2;
};

inline HIngredients h_ingredients(const FunctionSpec& spec, const Interval& iv) {
    const auto sup = sup_pair(spec, iv);
    return HIngredients{iv.a,
                        iv.b,
                        std::fabs(spec.derivative(iv.a)),
                        std::fabs(spec.derivative(iv.b)),
                        sup.m1,
                        sup.m2};
}

/// Assemble the two-term bound factor H_index for a forced case row.
/// index selects the kernel (1, 2 for the power-mean route, 3 for the Holder
/// route). Each term is a product of an endpoint, derivative-magnitude
/// powers, a supremum, and a kernel value to the 1/q; products are formed in
/// the log domain so extreme magnitudes cannot overflow intermediates.
inline double assemble_H(int index, const HIngredients& ing, const ConvexityParams& params,
                         Variant variant, CaseTag tag) {
    if (index < 1 || index > 3)
        throw std::domain_error("assemble_H index must be 1, 2 or 3");
    if (!(ing.m1 > 0.0) || !(ing.m2 > 0.0) || !std::isfinite(ing.m1) || !std::isfinite(ing.m2))
        throw std::domain_error("assemble_H requires positive finite suprema");

    const auto tp = theta_pair_from(ing.a, ing.b, ing.df_a, ing.df_b, params.s, params.q);
    const auto kernel = [&](double u) {
        switch (index) {
            case 1: return h1(u);
            case 2: return h2(u);
            default: return h3(u);
        }
    };
    const double h_theta = kernel(tp.theta);
    const double h_vartheta = kernel(tp.vartheta);

    const double s = params.s;
    auto term = [&](double endpoint, double e_dfb, double e_dfa, double m, double hval) {
        return std::exp(std::log(endpoint) + e_dfb * std::log(ing.df_b) +
                        e_dfa * std::log(ing.df_a) + std::log(m) + std::log(hval) / params.q);
    };

    switch (tag) {
        case CaseTag::both_le_1:
            return term(ing.b, s, 0.0, ing.m1, h_theta) + term(ing.a, 0.0, s, ing.m2, h_vartheta);
        case CaseTag::both_ge_1:
            return term(ing.b, 1.0, 1.0 - s, ing.m1, h_theta) +
                   term(ing.a, 1.0 - s, 1.0, ing.m2, h_vartheta);
        case CaseTag::a_le_1_le_b:
            return term(ing.b, 1.0, 0.0, ing.m1, h_theta) +
                   term(ing.a, 1.0 - s, s, ing.m2, h_vartheta);
        case CaseTag::b_le_1_le_a: {
            // The two readings differ here and only here, and only for the
            // third table: the printed row drops the df_a^{1-s} factor from
            // the first term.
            const double e_dfa_first =
                (index == 3 && variant == Variant::printed) ? 0.0 : 1.0 - s;
            return term(ing.b, s, e_dfa_first, ing.m1, h_theta) +
                   term(ing.a, 0.0, 1.0, ing.m2, h_vartheta);
        }
    }
    throw std::logic_error("unreachable case tag");
}

/// Assemble H_index with the case chosen from the derivative magnitudes.
inline double assemble_H(int index, const HIngredients& ing, const ConvexityParams& params,
                         Variant variant = Variant::derivation_consistent) {
    return assemble_H(index, ing, params, variant, classify_case(ing.df_a, ing.df_b));
}

/// Assemble H_index for a function on an interval: derivative magnitudes and
/// suprema are computed, the case is classified, and the table row applied.
inline double assemble_H(int index, const FunctionSpec& spec, const Interval& iv,
                         const ConvexityParams& params,
                         Variant variant = Variant::derivation_consistent) {
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    return assemble_H(index, h_ingredients(spec, iv), params, variant);
}

namespace detail {

// True when |f'|^q is s-geometrically convex on the interval. Exact for the
// built-in families (their |f'| is monotone and |f'|^q geometrically convex,
// and a geometrically convex g >= 1 is s-geometrically convex for every
// s in (0, 1]); otherwise falls back to a sampling check.
inline bool derivative_power_hypothesis(const FunctionSpec& spec, const Interval& iv,
                                        const ConvexityParams& params, std::size_t samples) {
    const std::string& fam = spec.family();
    if (fam == "power" || fam == "power_shift" || fam == "exponential") {
        if (params.s == 1.0) return true;
        const double dmin =
            std::min(std::fabs(spec.derivative(iv.a)), std::fabs(spec.derivative(iv.b)));
        if (dmin >= 1.0) return true;
    }
    const double q = params.q;
    FunctionSpec g = FunctionSpec::custom(
        "derivative_power",
        [spec, q](double x) { return std::pow(std::fabs(spec.derivative(x)), q); },
        [](double) { return 0.0; }, spec.domain_lo(), spec.domain_hi());
    const auto witness =
        check_convexity(g, iv, ConvexityKind::s_geometrically_convex, params.s, samples);
    return witness.holds;
}

inline double lhs_gap_for(const FunctionSpec& spec, const Interval& iv, Side side,
                          double integral_value) {
    double gap;
    if (side == Side::fafb) {
        gap = spec.value(iv.a) * spec.value(iv.b) - integral_value;
    } else {
        const double fm = spec.value(iv.geometric_mid());
        gap = fm * fm - integral_value;
    }
    return std::fabs(gap);
}

inline BoundReport make_bound_report(const FunctionSpec& spec, const Interval& iv,
                                     const ConvexityParams& params, Side side,
                                     Theorem theorem, Variant variant, double rhs,
                                     const EvalOptions& opts) {
    const auto pi = product_integral(spec, iv, opts.rel_tol, opts.abs_tol);
    BoundReport r;
    r.lhs_gap = lhs_gap_for(spec, iv, side, pi.value);
    r.rhs_bound = rhs;
    r.case_tag = classify_case(std::fabs(spec.derivative(iv.a)), std::fabs(spec.derivative(iv.b)));
    r.theorem = theorem;
    r.variant = variant;
    r.side = side;
    r.holds = r.lhs_gap <= rhs + bound_slack(rhs);
    r.quadrature_error = pi.error_estimate;
    r.quadrature_converged = pi.converged;
    if (opts.check_hypothesis) {
        r.hypothesis_checked = true;
        r.convexity_warning =
            !derivative_power_hypothesis(spec, iv, params, opts.hypothesis_samples);
    }
    r.inputs = BoundInputs{spec.name(), iv.a, iv.b, params.s, params.q};
    return r;
}

} // namespace detail

/// Power-mean route bound (q >= 1):
///   lhs_gap(side) <= log(b/a) * (1/2)^{2 - 1/q} * H_i,
/// with H_1 for the endpoint side and H_2 for the midpoint side.
inline BoundReport power_mean_bound(const FunctionSpec& spec, const Interval& iv,
                                    const ConvexityParams& params, Side side,
                                    const EvalOptions& opts = {}) {
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    const auto ing = h_ingredients(spec, iv);
    const int index = (side == Side::fafb) ? 1 : 2;
    const double H = assemble_H(index, ing, params, Variant::derivation_consistent);
    const double rhs = iv.log_ratio() * std::pow(0.5, 2.0 - 1.0 / params.q) * H;
    return detail::make_bound_report(spec, iv, params, side, Theorem::power_mean,
                                     Variant::derivation_consistent, rhs, opts);
}

/// Holder route bound (q > 1), same H_3 factor for both sides:
///   lhs_gap(side) <= (log(b/a) / 2) * ((q-1)/(2q-1))^{1 - 1/q} * H_3.
/// The variant selects the printed or derivation-consistent mixed-case row.
inline BoundReport holder_bound(const FunctionSpec& spec, const Interval& iv,
                                const ConvexityParams& params, Side side,
                                Variant variant = Variant::derivation_consistent,
                                const EvalOptions& opts = {}) {
    if (!(params.q > 1.0))
        throw std::domain_error("holder_bound requires q > 1");
    if (!spec.contains(iv))
        throw std::domain_error(spec.name() + ": interval outside domain");
    const auto ing = h_ingredients(spec, iv);
    const double H = assemble_H(3, ing, params, variant);
    const double q = params.q;
    const double rhs =
        0.5 * iv.log_ratio() * std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q) * H;
    return detail::make_bound_report(spec, iv, params, side, Theorem::holder, variant, rhs,
                                     opts);
}

/// Specialized corner cases of the two bounds. Each pins one parameter and
/// otherwise delegates, so results agree bit for bit with the general form.
enum class CorollaryKind { power_mean_s1, power_mean_q1, holder_s1 };

inline BoundReport corollary_eval(CorollaryKind kind, const FunctionSpec& spec,
                                  const Interval& iv, const ConvexityParams& params,
                                  Side side, const EvalOptions& opts = {}) {
    switch (kind) {
        case CorollaryKind::power_mean_s1:
            if (params.s != 1.0)
                throw std::domain_error("corollary power_mean_s1 requires s = 1");
            return power_mean_bound(spec, iv, params, side, opts);
        case CorollaryKind::power_mean_q1:
            if (params.q != 1.0)
                throw std::domain_error("corollary power_mean_q1 requires q = 1");
            return power_mean_bound(spec, iv, params, side, opts);
        case CorollaryKind::holder_s1:
            if (params.s != 1.0)
                throw std::domain_error("corollary holder_s1 requires s = 1");
            return holder_bound(spec, iv, params, side, Variant::derivation_consistent, opts);
    }
    throw std::logic_error("unreachable corollary kind");
}

} // namespace hhgc
