#pragma once

#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "applications.hpp"
#include "bounds.hpp"
#include "quadrature.hpp"

namespace hhgc {

/// Serialization schema version stamped on every JSON document.
inline constexpr const char* kSchemaVersion = "1";

inline Theorem parse_theorem(std::string_view text) {
    if (text == "thm22") return Theorem::power_mean;
    if (text == "thm23") return Theorem::holder;
    throw std::invalid_argument("unknown theorem '" + std::string(text) + "'");
}

inline CaseTag parse_case_tag(std::string_view text) {
    if (text == "both_le_1") return CaseTag::both_le_1;
    if (text == "both_ge_1") return CaseTag::both_ge_1;
    if (text == "a_le_1_le_b") return CaseTag::a_le_1_le_b;
    if (text == "b_le_1_le_a") return CaseTag::b_le_1_le_a;
    throw std::invalid_argument("unknown case tag '" + std::string(text) + "'");
}

inline void to_json(nlohmann::json& j, const BoundInputs& in) {
    j = nlohmann::json{{"f", in.f}, {"a", in.a}, {"b", in.b}, {"s", in.s}, {"q", in.q}};
}

inline void from_json(const nlohmann::json& j, BoundInputs& in) {
    j.at("f").get_to(in.f);
    j.at("a").get_to(in.a);
    j.at("b").get_to(in.b);
    j.at("s").get_to(in.s);
    j.at("q").get_to(in.q);
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{{"lhs_gap", r.lhs_gap},
                       {"rhs_bound", r.rhs_bound},
                       {"case_tag", std::string(to_string(r.case_tag))},
                       {"theorem", std::string(to_string(r.theorem))},
                       {"variant", std::string(to_string(r.variant))},
                       {"side", std::string(to_string(r.side))},
                       {"holds", r.holds},
                       {"quadrature_error", r.quadrature_error},
                       {"quadrature_converged", r.quadrature_converged},
                       {"hypothesis_checked", r.hypothesis_checked},
                       {"convexity_warning", r.convexity_warning},
                       {"inputs", r.inputs}};
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
    j.at("lhs_gap").get_to(r.lhs_gap);
    j.at("rhs_bound").get_to(r.rhs_bound);
    r.case_tag = parse_case_tag(j.at("case_tag").get<std::string>());
    r.theorem = parse_theorem(j.at("theorem").get<std::string>());
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.side = parse_side(j.at("side").get<std::string>());
    j.at("holds").get_to(r.holds);
    j.at("quadrature_error").get_to(r.quadrature_error);
    j.at("quadrature_converged").get_to(r.quadrature_converged);
    j.at("hypothesis_checked").get_to(r.hypothesis_checked);
    j.at("convexity_warning").get_to(r.convexity_warning);
    j.at("inputs").get_to(r.inputs);
}

inline void to_json(nlohmann::json& j, const ChainReport& r) {
    j = nlohmann::json{{"left", r.left},
                       {"middle", r.middle},
                       {"right", r.right},
                       {"holds", r.holds},
                       {"quadrature_error", r.quadrature_error},
                       {"quadrature_converged", r.quadrature_converged}};
}

inline void from_json(const nlohmann::json& j, ChainReport& r) {
    j.at("left").get_to(r.left);
    j.at("middle").get_to(r.middle);
    j.at("right").get_to(r.right);
    j.at("holds").get_to(r.holds);
    j.at("quadrature_error").get_to(r.quadrature_error);
    j.at("quadrature_converged").get_to(r.quadrature_converged);
}

inline void to_json(nlohmann::json& j, const PropositionReport& r) {
    j = nlohmann::json{{"means_form_lhs", r.means_form_lhs},
                       {"means_form_rhs", r.means_form_rhs},
                       {"theorem_form_lhs", r.theorem_form_lhs},
                       {"theorem_form_rhs", r.theorem_form_rhs},
                       {"agreement_lhs", r.agreement_lhs},
                       {"agreement_rhs", r.agreement_rhs},
                       {"holds", r.holds},
                       {"agreement_ok", r.agreement_ok},
                       {"side", std::string(to_string(r.side))},
                       {"corrections", r.corrections},
                       {"theorem_report", r.theorem_report}};
}

inline void from_json(const nlohmann::json& j, PropositionReport& r) {
    j.at("means_form_lhs").get_to(r.means_form_lhs);
    j.at("means_form_rhs").get_to(r.means_form_rhs);
    j.at("theorem_form_lhs").get_to(r.theorem_form_lhs);
    j.at("theorem_form_rhs").get_to(r.theorem_form_rhs);
    j.at("agreement_lhs").get_to(r.agreement_lhs);
    j.at("agreement_rhs").get_to(r.agreement_rhs);
    j.at("holds").get_to(r.holds);
    j.at("agreement_ok").get_to(r.agreement_ok);
    r.side = parse_side(j.at("side").get<std::string>());
    j.at("corrections").get_to(r.corrections);
    j.at("theorem_report").get_to(r.theorem_report);
}

inline void to_json(nlohmann::json& j, const QuadratureResult& r) {
    j = nlohmann::json{{"value", r.value},
                       {"error_estimate", r.error_estimate},
                       {"evaluations", r.evaluations},
                       {"converged", r.converged}};
}

inline void to_json(nlohmann::json& j, const ConvexityWitness::Violation& v) {
    j = nlohmann::json{{"x", v.x},     {"y", v.y},     {"lambda", v.lambda},
                       {"lhs", v.lhs}, {"rhs", v.rhs}, {"slack", v.slack}};
}

inline void to_json(nlohmann::json& j, const ConvexityWitness& w) {
    j = nlohmann::json{{"holds", w.holds}};
    if (w.violation) j["violation"] = *w.violation;
}

/// Wrap a payload in the versioned document envelope used by the CLI.
inline nlohmann::json make_document(std::string_view check, nlohmann::json payload) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["check"] = std::string(check);
    doc["result"] = std::move(payload);
    return doc;
}

namespace detail {

/// CSV numeric formatting: 17 significant digits round-trips any double.
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

inline std::string bound_csv_header() {
    return "theorem,variant,side,case_tag,f,a,b,s,q,"
           "lhs_gap,rhs_bound,slack_ratio,holds,quadrature_error,"
           "quadrature_converged,convexity_warning";
}

/// Ratio lhs_gap / rhs_bound, the per-row tightness measure; 0/0 counts as 0.
inline double slack_ratio(const BoundReport& r) {
    if (r.rhs_bound == 0.0)
        return r.lhs_gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return r.lhs_gap / r.rhs_bound;
}

inline std::string bound_csv_row(const BoundReport& r) {
    using detail::csv_num;
    std::string row;
    row += std::string(to_string(r.theorem)) + ",";
    row += std::string(to_string(r.variant)) + ",";
    row += std::string(to_string(r.side)) + ",";
    row += std::string(to_string(r.case_tag)) + ",";
    row += r.inputs.f + ",";
    row += csv_num(r.inputs.a) + ",";
    row += csv_num(r.inputs.b) + ",";
    row += csv_num(r.inputs.s) + ",";
    row += csv_num(r.inputs.q) + ",";
    row += csv_num(r.lhs_gap) + ",";
    row += csv_num(r.rhs_bound) + ",";
    row += csv_num(slack_ratio(r)) + ",";
    row += r.holds ? "true," : "false,";
    row += csv_num(r.quadrature_error) + ",";
    row += r.quadrature_converged ? "true," : "false,";
    row += r.convexity_warning ? "true" : "false";
    return row;
}

} // namespace hhgc
