#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "functions.hpp"
#include "interval.hpp"
#include "means.hpp"

namespace hhgc {

/// Special-means cross-check for the family f(x) = x^s/s + 1 on 0 < a < b <= 1.
/// The bound is evaluated twice: directly through the theorem machinery
/// (normative for holds) and through the closed-form special-means
/// expressions (the cross-check). The two readings should agree to roundoff;
/// agreement_* quantify this and disagreements are reported, never silently
/// dropped.
///
/// The means expressions are reconstructed: the geometric mean is evaluated
/// as sqrt(ab) where the source repeats the arithmetic-mean formula, a "+" is
/// inserted between the bracketed M1/M2 terms, and the midpoint display's
/// coefficient is read as 2/s^2. The applied reconstructions are listed in
/// corrections.
struct PropositionReport {
    double means_form_lhs = 0.0;
    double means_form_rhs = 0.0;
    double theorem_form_lhs = 0.0;
    double theorem_form_rhs = 0.0;
    double agreement_lhs = 0.0; // |means - theorem|, absolute
    double agreement_rhs = 0.0;
    bool holds = false;         // theorem_form_lhs <= theorem_form_rhs + slack
    bool agreement_ok = false;  // both agreements within 1e-6 relative
    Side side{};
    std::vector<std::string> corrections;
    BoundReport theorem_report;
};

/// Relative agreement threshold between the means form and the theorem form.
inline constexpr double kMeansAgreementTol = 1e-6;

namespace detail {

inline void validate_proposition_args(double a, double b, double s) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(a < b) || !(b <= 1.0))
        throw std::domain_error("proposition requires 0 < a < b <= 1");
    if (!std::isfinite(s) || !(0.0 < s) || !(s < 1.0))
        throw std::domain_error("proposition requires 0 < s < 1");
}

// Shared means-form left side: the displayed endpoint-product or
// geometric-midpoint expression minus the closed-form product integral,
//   | LHS_side - (2/s^2) A(G^2(a^s, b^s), s^2) - (2/s) L_{s-1}^{s-1}(a, b) L(a, b) |.
inline double means_form_lhs(double a, double b, double s, Side side) {
    const MeanPair ab(a, b);
    double head;
    if (side == Side::fafb) {
        // G^2 of the two endpoint values is just their product.
        const double fa = std::pow(a, s) / s + 1.0;
        const double fb = std::pow(b, s) / s + 1.0;
        const MeanPair fp(fa, fb);
        const double g = geometric_mean(fp);
        head = g * g;
    } else {
        const double gm = geometric_mean(ab);
        const double v = std::pow(gm, s) / s + 1.0;
        head = v * v;
    }
    const double gs2 = std::pow(a, s) * std::pow(b, s); // G^2(a^s, b^s)
    const double avg = 0.5 * (gs2 + s * s);             // A(G^2(a^s,b^s), s^2)
    const double lp = p_logarithmic_mean(ab, s - 1.0);
    const double tail = (2.0 / (s * s)) * avg +
                        (2.0 / s) * std::pow(lp, s - 1.0) * logarithmic_mean(ab);
    return std::fabs(head - tail);
}

struct MeansPieces {
    double m1, m2;        // suprema in closed form
    double g1, g2;        // G(a^{-(s-1)^2}, b^s), G(b^{-(s-1)^2}, a^s)
    double bracket_theta; // b^kappa - L(a^kappa, b^kappa)
    double bracket_vartheta; // L(a^kappa, b^kappa) - a^kappa
    double log_mean_kappa;   // L(a^kappa, b^kappa)
    double g_ab_correction;  // 1 / G^{(s-1)^2}(a, b)
    double kappa;
};

inline MeansPieces means_pieces(double a, double b, double s, double q) {
    const MeanPair ab(a, b);
    MeansPieces p;
    p.kappa = 0.5 * (s * s - s + 1.0) * q;
    const double ak = std::pow(a, p.kappa), bk = std::pow(b, p.kappa);
    p.log_mean_kappa = logarithmic_mean(MeanPair(ak, bk));
    p.bracket_theta = bk - p.log_mean_kappa;
    p.bracket_vartheta = p.log_mean_kappa - ak;
    const double sm1_sq = (s - 1.0) * (s - 1.0);
    p.g1 = std::sqrt(std::pow(a, -sm1_sq) * std::pow(b, s));
    p.g2 = std::sqrt(std::pow(b, -sm1_sq) * std::pow(a, s));
    p.g_ab_correction = std::pow(geometric_mean(ab), -sm1_sq);
    p.m1 = std::pow(geometric_mean(ab), s) / s + 1.0;
    p.m2 = std::pow(b, s) / s + 1.0;
    return p;
}

inline std::vector<std::string> means_corrections(Side side) {
    std::vector<std::string> c = {
        "geometric mean evaluated as sqrt(ab)",
        "'+' inserted between the bracketed M1/M2 terms",
    };
    if (side == Side::fsqrt) {
        c.push_back("midpoint display coefficient read as 2/s^2");
        c.push_back("closing bracket moved to enclose both kernel factors");
    }
    return c;
}

} // namespace detail

/// Power-mean route proposition: means form of the endpoint and midpoint
/// bounds for f = power_shift(s) on 0 < a < b <= 1, 0 < s < 1, q >= 1.
inline PropositionReport proposition_power_mean(double a, double b, double s, double q,
                                                Side side, double tol = 1e-10) {
    detail::validate_proposition_args(a, b, s);
    if (!std::isfinite(q) || !(q >= 1.0))
        throw std::domain_error("proposition_power_mean requires q >= 1");

    const FunctionSpec spec = FunctionSpec::power_shift(s);
    const Interval iv(a, b);
    const ConvexityParams params(s, q);
    EvalOptions opts;
    opts.rel_tol = tol;
    opts.abs_tol = tol * 1e-2;

    PropositionReport r;
    r.side = side;
    r.theorem_report = power_mean_bound(spec, iv, params, side, opts);
    r.theorem_form_lhs = r.theorem_report.lhs_gap;
    r.theorem_form_rhs = r.theorem_report.rhs_bound;
    r.holds = r.theorem_report.holds;

    const auto p = detail::means_pieces(a, b, s, q);
    // The two kernel brackets swap between the endpoint and midpoint forms.
    const double br1 = (side == Side::fafb) ? p.bracket_theta : p.bracket_vartheta;
    const double br2 = (side == Side::fafb) ? p.bracket_vartheta : p.bracket_theta;
    const double inv_q = 1.0 / q;
    const double common = p.g_ab_correction * std::pow(1.0 / ((s * s - s + 1.0) * q), inv_q) *
                          std::pow((b - a) / (4.0 * logarithmic_mean(MeanPair(a, b))),
                                   1.0 - inv_q);
    r.means_form_rhs = common * (p.m1 * p.g1 * std::pow(br1, inv_q) +
                                 p.m2 * p.g2 * std::pow(br2, inv_q));
    r.means_form_lhs = detail::means_form_lhs(a, b, s, side);

    r.agreement_lhs = std::fabs(r.means_form_lhs - r.theorem_form_lhs);
    r.agreement_rhs = std::fabs(r.means_form_rhs - r.theorem_form_rhs);
    r.agreement_ok =
        r.agreement_lhs <= kMeansAgreementTol * (1.0 + std::fabs(r.theorem_form_lhs)) &&
        r.agreement_rhs <= kMeansAgreementTol * (1.0 + std::fabs(r.theorem_form_rhs));
    r.corrections = detail::means_corrections(side);
    return r;
}

/// Holder route proposition: same left sides, one shared right side built
/// from L(a^kappa, b^kappa). Requires q > 1.
inline PropositionReport proposition_holder(double a, double b, double s, double q,
                                            Side side, double tol = 1e-10) {
    detail::validate_proposition_args(a, b, s);
    if (!std::isfinite(q) || !(q > 1.0))
        throw std::domain_error("proposition_holder requires q > 1");

    const FunctionSpec spec = FunctionSpec::power_shift(s);
    const Interval iv(a, b);
    const ConvexityParams params(s, q);
    EvalOptions opts;
    opts.rel_tol = tol;
    opts.abs_tol = tol * 1e-2;

    PropositionReport r;
    r.side = side;
    r.theorem_report =
        holder_bound(spec, iv, params, side, Variant::derivation_consistent, opts);
    r.theorem_form_lhs = r.theorem_report.lhs_gap;
    r.theorem_form_rhs = r.theorem_report.rhs_bound;
    r.holds = r.theorem_report.holds;

    const auto p = detail::means_pieces(a, b, s, q);
    const double inv_q = 1.0 / q;
    const double lam = logarithmic_mean(MeanPair(a, b));
    r.means_form_rhs = (b - a) / (2.0 * lam) *
                       std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - inv_q) *
                       std::pow(p.log_mean_kappa, inv_q) * p.g_ab_correction *
                       (p.m1 * p.g1 + p.m2 * p.g2);
    r.means_form_lhs = detail::means_form_lhs(a, b, s, side);

    r.agreement_lhs = std::fabs(r.means_form_lhs - r.theorem_form_lhs);
    r.agreement_rhs = std::fabs(r.means_form_rhs - r.theorem_form_rhs);
    r.agreement_ok =
        r.agreement_lhs <= kMeansAgreementTol * (1.0 + std::fabs(r.theorem_form_lhs)) &&
        r.agreement_rhs <= kMeansAgreementTol * (1.0 + std::fabs(r.theorem_form_rhs));
    r.corrections = detail::means_corrections(side);
    return r;
}

/// Closed-form product integral for the power_shift family; underlies the
/// means-form left sides and doubles as an independent quadrature oracle:
///   (ab)^s / s^2 + 1 + (2/s) L_{s-1}^{s-1}(a, b) L(a, b).
inline double power_shift_product_integral(double a, double b, double s) {
    if (!(0.0 < a) || !(a < b) || !(s > 0.0))
        throw std::domain_error("power_shift_product_integral requires 0 < a < b, s > 0");
    const MeanPair ab(a, b);
    // L_{s-1}^{s-1} degenerates to 1 at s = 1 (the generalized mean is
    // undefined at exponent 0 but enters only through its 0th power).
    const double lp_pow =
        (s == 1.0) ? 1.0 : std::pow(p_logarithmic_mean(ab, s - 1.0), s - 1.0);
    return std::pow(a * b, s) / (s * s) + 1.0 +
           (2.0 / s) * lp_pow * logarithmic_mean(ab);
}

} // namespace hhgc
