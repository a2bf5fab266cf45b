#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <hhgc/functions.hpp>

#include "oracle.hpp"

using namespace hhgc;

TEST_CASE("family evaluation", "[functions]") {
    const auto shift = FunctionSpec::power_shift(0.5);
    CHECK(shift.value(1.0) == 3.0);
    CHECK(shift.derivative(1.0) == 1.0);

    const auto c2 = FunctionSpec::constant(2.0);
    CHECK(c2.value(0.3) == 2.0);
    CHECK(c2.derivative(0.3) == 0.0);
    CHECK(c2.derivative(17.0) == 0.0);

    const auto ex = FunctionSpec::exponential();
    CHECK_THAT(ex.value(1.0), Catch::Matchers::WithinRel(std::exp(1.0), 1e-15));
    CHECK(ex.value(2.0) == ex.derivative(2.0));

    const auto pw = FunctionSpec::power(-1.0);
    CHECK(pw.value(4.0) == 0.25);
    CHECK(pw.derivative(2.0) == -0.25);
}

TEST_CASE("domain enforcement", "[functions]") {
    const auto pw = FunctionSpec::power(2.0);
    CHECK_THROWS_AS(pw.value(0.0), std::domain_error);
    CHECK_THROWS_AS(pw.value(-1.0), std::domain_error);
    CHECK_THROWS_AS(pw.derivative(std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);

    const auto narrow = FunctionSpec::custom(
        "narrow", [](double x) { return x; }, [](double) { return 1.0; }, 1.0, 2.0);
    CHECK(narrow.contains(1.5));
    CHECK_FALSE(narrow.contains(0.5));
    CHECK_FALSE(narrow.contains(2.5));
    CHECK_THROWS_AS(narrow.value(0.5), std::domain_error);
}

TEST_CASE("spec string parsing", "[functions]") {
    CHECK(FunctionSpec::parse("power_shift:s=0.5").value(1.0) == 3.0);
    CHECK(FunctionSpec::parse("power:c=-0.25").family() == "power");
    CHECK(FunctionSpec::parse("exponential").family() == "exponential");
    CHECK(FunctionSpec::parse("constant:c=2").value(9.0) == 2.0);
    CHECK(FunctionSpec::parse(" power : c = 2 ").value(3.0) == 9.0);

    CHECK_THROWS_AS(FunctionSpec::parse("power_shift"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse("exponential:c=2"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse("power:c=abc"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse("constant:c=0"), std::invalid_argument);
    CHECK_THROWS_AS(FunctionSpec::parse("power_shift:s=-1"), std::invalid_argument);
}

TEST_CASE("parsed names round-trip", "[functions]") {
    for (const char* text : {"power_shift:s=0.5", "power:c=-0.25", "exponential",
                             "constant:c=2", "power:c=2"}) {
        const auto spec = FunctionSpec::parse(text);
        const auto again = FunctionSpec::parse(spec.name());
        CHECK(again.name() == spec.name());
        CHECK(again.value(1.7) == spec.value(1.7));
    }
}

TEST_CASE("declared derivatives match finite differences", "[functions]") {
    const Interval iv{0.3, 2.5};
    for (const char* text : {"constant:c=2", "power:c=2", "power:c=-1", "power:c=0.5",
                             "power_shift:s=0.3", "power_shift:s=0.5",
                             "power_shift:s=0.7", "exponential"}) {
        const auto spec = FunctionSpec::parse(text);
        CHECK(validate_derivative(spec, iv) <= 1e-6);
    }
    // a deliberately wrong derivative is caught by the same check
    const auto wrong = FunctionSpec::custom(
        "wrong", [](double x) { return x * x; }, [](double x) { return x; }, 0.0,
        std::numeric_limits<double>::infinity());
    CHECK(validate_derivative(wrong, iv) > 1e-3);
}

TEST_CASE("convexity checker accepts known members", "[functions]") {
    const auto geom = ConvexityKind::geometrically_convex;
    CHECK(check_convexity(FunctionSpec::exponential(), {0.5, 2.0}, geom).holds);
    for (double c : {2.0, -1.0, 0.5})
        CHECK(check_convexity(FunctionSpec::power(c), {0.25, 4.0}, geom).holds);

    // |f'|^q of power_shift(s) is power((s-1)q); s-geometrically convex on (0,1]
    for (double s : {0.3, 0.5, 0.9}) {
        for (double q : {1.0, 2.0}) {
            const auto spec = FunctionSpec::power((s - 1.0) * q);
            const auto w = check_convexity(spec, {0.01, 1.0},
                                           ConvexityKind::s_geometrically_convex, s);
            CHECK(w.holds);
        }
    }

    CHECK(check_convexity(FunctionSpec::power(2.0), {0.5, 3.0},
                          ConvexityKind::convex)
              .holds);
    CHECK(check_convexity(FunctionSpec::power(2.0), {0.1, 1.0},
                          ConvexityKind::s_convex_second_sense, 0.5)
              .holds);
}

TEST_CASE("convexity checker requires s where the kind needs it", "[functions]") {
    const auto ex = FunctionSpec::exponential();
    CHECK_THROWS_AS(
        check_convexity(ex, {0.5, 2.0}, ConvexityKind::s_geometrically_convex),
        std::invalid_argument);
    CHECK_THROWS_AS(check_convexity(ex, {0.5, 2.0},
                                    ConvexityKind::s_geometrically_convex, 1.5),
                    std::domain_error);
}

TEST_CASE("convexity witness is reproducible and symmetric", "[functions]") {
    // log f(e^t) = sin(e^t) is not convex, so f is not geometrically convex.
    const auto wiggle = FunctionSpec::custom(
        "wiggle", [](double x) { return std::exp(std::sin(3.0 * x)); },
        [](double x) { return 3.0 * std::cos(3.0 * x) * std::exp(std::sin(3.0 * x)); },
        0.0, std::numeric_limits<double>::infinity());
    const Interval iv{0.5, 4.0};

    const auto w =
        check_convexity(wiggle, iv, ConvexityKind::geometrically_convex, std::nullopt, 20000);
    REQUIRE_FALSE(w.holds);
    REQUIRE(w.violation.has_value());
    const auto& v = *w.violation;

    // re-evaluating the defining inequality at the witness reproduces the violation
    const double mid = std::exp(v.lambda * std::log(v.x) + (1.0 - v.lambda) * std::log(v.y));
    const double lhs = wiggle.value(mid);
    const double rhs = std::exp(v.lambda * std::log(wiggle.value(v.x)) +
                                (1.0 - v.lambda) * std::log(wiggle.value(v.y)));
    CHECK_THAT(lhs, Catch::Matchers::WithinRel(v.lhs, 1e-12));
    CHECK_THAT(rhs, Catch::Matchers::WithinRel(v.rhs, 1e-12));
    CHECK(lhs > rhs * (1.0 + 1e-12));

    // the swapped orientation (y, x, 1-lambda) names the same midpoint
    const double mid_swapped =
        std::exp((1.0 - v.lambda) * std::log(v.y) + v.lambda * std::log(v.x));
    const double rhs_swapped = std::exp((1.0 - v.lambda) * std::log(wiggle.value(v.y)) +
                                        v.lambda * std::log(wiggle.value(v.x)));
    CHECK(wiggle.value(mid_swapped) > rhs_swapped * (1.0 + 1e-12));

    // determinism: the same call finds the same witness
    const auto w2 =
        check_convexity(wiggle, iv, ConvexityKind::geometrically_convex, std::nullopt, 20000);
    REQUIRE(w2.violation.has_value());
    CHECK(w2.violation->x == v.x);
    CHECK(w2.violation->y == v.y);
    CHECK(w2.violation->lambda == v.lambda);
}

TEST_CASE("supremum estimation", "[functions]") {
    const auto shift = FunctionSpec::power_shift(0.5);
    const double g = std::sqrt(0.25 * 0.75);
    CHECK_THAT(sup_abs_on(shift, 0.25, g),
               Catch::Matchers::WithinRel(oracle::kShiftM1, 1e-12));
    CHECK_THAT(sup_abs_on(shift, g, 0.75),
               Catch::Matchers::WithinRel(oracle::kShiftM2, 1e-12));

    CHECK(sup_abs_on(FunctionSpec::constant(2.0), 0.1, 9.0) == 2.0);
    CHECK_THAT(sup_abs_on(FunctionSpec::power(2.0), 1.0, 3.0),
               Catch::Matchers::WithinRel(9.0, 1e-12));
    // decreasing family peaks at the left endpoint
    CHECK_THAT(sup_abs_on(FunctionSpec::power(-1.0), 1.0, 3.0),
               Catch::Matchers::WithinRel(1.0, 1e-12));
    // interior maximum found by the refinement stage
    const auto bump = FunctionSpec::custom(
        "bump", [](double x) { return std::exp(-(x - 2.0) * (x - 2.0)); },
        [](double x) { return -2.0 * (x - 2.0) * std::exp(-(x - 2.0) * (x - 2.0)); });
    CHECK_THAT(sup_abs_on(bump, 1.0, 3.0), Catch::Matchers::WithinAbs(1.0, 1e-10));
    // degenerate interval is the point value
    CHECK(sup_abs_on(bump, 1.5, 1.5) == bump.value(1.5));

    CHECK_THROWS_AS(sup_abs_on(shift, 3.0, 1.0), std::domain_error);
}

TEST_CASE("supremum dominates sampled values", "[functions]") {
    std::mt19937 rng(99);
    const struct {
        FunctionSpec spec;
        double lo, hi;
    } cases[] = {
        {FunctionSpec::power_shift(0.5), 0.25, 0.75},
        {FunctionSpec::exponential(), 1.0, 2.0},
        {FunctionSpec::power(-2.0), 0.5, 4.0},
    };
    for (const auto& c : cases) {
        const double sup = sup_abs_on(c.spec, c.lo, c.hi);
        std::uniform_real_distribution<double> range(c.lo, c.hi);
        for (int i = 0; i < 10000; ++i) {
            const double x = range(rng);
            REQUIRE(sup >= std::fabs(c.spec.value(x)) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("sup pair splits at the geometric midpoint", "[functions]") {
    const auto ex = FunctionSpec::exponential();
    const Interval iv{1.0, 4.0};
    const auto pair = sup_pair(ex, iv);
    CHECK_THAT(pair.m1, Catch::Matchers::WithinRel(std::exp(2.0), 1e-12));
    CHECK_THAT(pair.m2, Catch::Matchers::WithinRel(std::exp(4.0), 1e-12));
}
