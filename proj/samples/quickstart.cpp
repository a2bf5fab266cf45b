// Minimal library tour: evaluate the geometric Hermite-Hadamard chain, both
// theorem bounds, and a proposition report for one function and interval.
//
// Build target: hhgc_quickstart (see samples/CMakeLists.txt).

#include <cstdio>

#include <hhgc/applications.hpp>
#include <hhgc/bounds.hpp>
#include <hhgc/report_io.hpp>

int main() {
    using namespace hhgc;

    const FunctionSpec f = FunctionSpec::power_shift(0.5); // f(x) = 2 sqrt(x) + 1
    const Interval iv{0.25, 0.75};

    // The three-term multiplicative chain: squared midpoint value, product
    // integral, endpoint product.
    const ChainReport chain = geometric_chain(f, iv);
    std::printf("chain: %.12g <= %.12g <= %.12g (holds: %s)\n", chain.left,
                chain.middle, chain.right, chain.holds ? "yes" : "no");

    // Power-mean bound on the endpoint-product side.
    const ConvexityParams params{0.5, 2.0};
    const BoundReport pm = power_mean_bound(f, iv, params, Side::fafb);
    std::printf("power-mean bound [%s]: lhs_gap %.12g <= rhs %.12g (holds: %s)\n",
                std::string(to_string(pm.case_tag)).c_str(), pm.lhs_gap, pm.rhs_bound,
                pm.holds ? "yes" : "no");

    // Holder bound, derivation-consistent case table.
    const BoundReport ho = holder_bound(f, iv, params, Side::fsqrt);
    std::printf("holder bound: lhs_gap %.12g <= rhs %.12g (holds: %s)\n", ho.lhs_gap,
                ho.rhs_bound, ho.holds ? "yes" : "no");

    // Special-means form of the power-mean bound, with the documented
    // display corrections applied and checked against the theorem form.
    const PropositionReport prop =
        proposition_power_mean(0.25, 0.75, 0.5, 2.0, Side::fafb);
    std::printf("proposition: holds %s, means/theorem agreement ok: %s\n",
                prop.holds ? "yes" : "no", prop.agreement_ok ? "yes" : "no");

    // Everything serializes to JSON for downstream tooling.
    const nlohmann::json doc = make_document("thm22", nlohmann::json(pm));
    std::printf("json: %s\n", doc.dump().c_str());
    return 0;
}
