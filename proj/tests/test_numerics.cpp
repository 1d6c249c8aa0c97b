#include <doctest.h>

#include <cmath>
#include <vector>

#include "fbma/numerics.hpp"
#include "fbma/surface.hpp"

using namespace fbma;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;
}  // namespace

TEST_CASE("integrate: constants and textbook values") {
    const auto c = integrate([](double) { return kSqrt2; }, Interval(0.0, kPi));
    CHECK(std::abs(c.value - kSqrt2 * kPi) < 1e-13);
    CHECK(c.error_estimate >= 0.0);

    const auto rate = integrate([](double t) { return phi_rate(0.0, t); }, Interval(0.0, kPi));
    CHECK(std::abs(rate.value - kSqrt2 * kPi) < 1e-12);

    const auto s = integrate([](double x) { return std::sin(x); }, Interval(0.0, kPi));
    CHECK(std::abs(s.value - 2.0) < 1e-13);
    CHECK(std::abs(s.value - 2.0) <= s.error_estimate + 1e-15);
}

TEST_CASE("integrate: additivity over a split point") {
    auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    const double whole = integrate(f, Interval(-1.0, 2.0)).value;
    const double left = integrate(f, Interval(-1.0, 0.37)).value;
    const double right = integrate(f, Interval(0.37, 2.0)).value;
    CHECK(std::abs(left + right - whole) < 1e-12);
}

TEST_CASE("integrate: rejects bad arguments, reports exhausted budgets") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, Interval(0, 1), 0.0, 1e-12),
                    std::invalid_argument);

    // An endpoint singularity starves the smooth scheme; the failure carries
    // the partial estimate.
    try {
        integrate([](double x) { return 1.0 / std::sqrt(x); }, Interval(0.0, 1.0));
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::abs(e.partial.value - 2.0) < 1e-3);
        CHECK(e.partial.evaluations > 0);
    }
}

TEST_CASE("integrate_singular_endpoints: arcsine and inverse square root") {
    // Endpoint-aware form reaches full precision.
    const auto arcsine = integrate_singular_endpoints(
        EndpointAwareFn(
            [](double, double d_lo, double d_hi) { return 1.0 / std::sqrt(d_lo * d_hi); }),
        Interval(0.0, 1.0));
    CHECK(std::abs(arcsine.value - kPi) < 1e-12);

    // The plain form recomputes distances from a rounded x; its accuracy near
    // the endpoints is limited but still far below the checks' needs.
    const auto arcsine_plain = integrate_singular_endpoints(
        [](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, Interval(0.0, 1.0), 1e-9,
        1e-9);
    CHECK(std::abs(arcsine_plain.value - kPi) < 1e-9);

    const auto inv_sqrt = integrate_singular_endpoints(
        [](double x) { return 1.0 / std::sqrt(x); }, Interval(0.0, 1.0), 1e-10, 1e-10);
    CHECK(std::abs(inv_sqrt.value - 2.0) < 1e-10);
}

TEST_CASE("integrate_singular_endpoints: period integrand matches the smooth route") {
    // At c = 1 - 4 a^2 the singular-endpoint integral reproduces the angle
    // advance computed by smooth quadrature of the rate.
    const double a = 0.3;
    const double oracle = 2.0 * integrate([a](double t) { return phi_rate(a, t); },
                                          Interval(0.0, 0.5 * kPi))
                                    .value;
    CHECK(std::abs(otsuki_period(1.0 - 4.0 * a * a) - oracle) < 1e-10);
}

TEST_CASE("integrate_singular_endpoints: agrees with integrate on smooth integrands") {
    for (auto f : {RealFn([](double x) { return std::cos(x); }),
                   RealFn([](double x) { return x * x * x - x; }),
                   RealFn([](double x) { return std::exp(-x); })}) {
        const double smooth = integrate(f, Interval(-0.5, 2.0)).value;
        const double singular = integrate_singular_endpoints(f, Interval(-0.5, 2.0)).value;
        CHECK(std::abs(smooth - singular) < 1e-10);
    }
}

TEST_CASE("find_root: brackets, residuals, trivial cases") {
    const double root =
        find_root([](double x) { return std::cos(x); },
                  make_bracket([](double x) { return std::cos(x); }, 1.0, 2.0));
    CHECK(std::abs(root - 0.5 * kPi) < 1e-13);
    CHECK(root >= 1.0);
    CHECK(root <= 2.0);

    const double zero = find_root([](double x) { return x; },
                                  make_bracket([](double x) { return x; }, -1.0, 1.0));
    CHECK(std::abs(zero) < 1e-13);

    CHECK_THROWS_AS(make_bracket([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_root([](double x) { return x; }, Bracket{0.0, 1.0, 0.5, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("find_root: first orthogonality zero against a plain-bisection oracle") {
    // Independent oracle: locate the first sign change of f_{0.29} on a fine
    // grid and refine by pure bisection.
    const SurfaceParams params(0.29, 0.0);
    auto f = [&params](double s) { return orthogonality(params, s); };

    double lo = 1.3, hi = 0.0;
    double f_lo = f(lo);
    for (int i = 1; i <= 500; ++i) {
        const double s = 1.3 + 0.2 * i / 500.0;
        const double fs = f(s);
        if (f_lo * fs < 0.0) {
            hi = s;
            break;
        }
        lo = s;
        f_lo = fs;
    }
    REQUIRE(hi > 0.0);
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    CHECK(std::abs(oracle - 1.4187129265599579) < 1e-10);  // frozen

    const double root = find_root(f, make_bracket(f, 1.3, 1.5));
    CHECK(std::abs(root - oracle) < 1e-10);
}

TEST_CASE("scan_sign_changes: grid cells with crossings or node zeros") {
    const auto cos_brackets =
        scan_sign_changes([](double x) { return std::cos(x); }, Interval(0.0, 2.0 * kPi),
                          kPi / 8.0);
    REQUIRE(cos_brackets.size() == 2);
    CHECK(cos_brackets[0].lo <= 0.5 * kPi);
    CHECK(cos_brackets[0].hi >= 0.5 * kPi);
    CHECK(cos_brackets[1].lo <= 1.5 * kPi);
    CHECK(cos_brackets[1].hi >= 1.5 * kPi);

    CHECK(scan_sign_changes([](double) { return 1.0; }, Interval(0.0, 1.0), 0.1).empty());

    // A zero landing exactly on an interior node is attached to the cell on
    // its right, once.
    const auto node_zero =
        scan_sign_changes([](double x) { return x; }, Interval(-0.5, 1.0), 0.5);
    REQUIRE(node_zero.size() == 1);
    CHECK(node_zero[0].lo == 0.0);
    CHECK(node_zero[0].f_lo == 0.0);

    CHECK_THROWS_AS(scan_sign_changes([](double) { return 1.0; }, Interval(0, 1), 0.0),
                    std::invalid_argument);
}

TEST_CASE("scan + refine recovers every simple zero of sin on [0, 20]") {
    auto f = [](double x) { return std::sin(x); };
    const auto brackets = scan_sign_changes(f, Interval(0.0, 20.0), 0.1);
    REQUIRE(brackets.size() == 7);  // k pi for k = 0..6
    for (std::size_t k = 0; k < brackets.size(); ++k) {
        const double root =
            brackets[k].f_lo == 0.0 ? brackets[k].lo : find_root(f, brackets[k]);
        CHECK(std::abs(root - static_cast<double>(k) * kPi) < 1e-10);
    }
}

TEST_CASE("invert_monotone: trivial targets and range errors") {
    CHECK(std::abs(invert_monotone([](double x) { return x * x; }, 4.0, Interval(0.0, 3.0)) -
                   2.0) < 1e-10);
    CHECK(std::abs(invert_monotone([](double x) { return -x; }, 0.5, Interval(-1.0, 0.0)) +
                   0.5) < 1e-10);

    try {
        invert_monotone([](double x) { return x; }, 5.0, Interval(0.0, 1.0));
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("outside attained range") != std::string::npos);
    }
}

TEST_CASE("invert_monotone: closed-surface parameter against a Simpson oracle") {
    // Oracle: composite-Simpson angle advance, bisected to the target.
    auto c_simpson = [](double a) {
        const int n = 4000;
        const double h = kPi / n;
        double acc = phi_rate(a, 0.0) + phi_rate(a, kPi);
        for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * phi_rate(a, i * h);
        return acc * h / 3.0;
    };
    const double target = 2.0 * kPi * (2.0 / 3.0);
    double lo = 0.0, hi = 0.4999;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (c_simpson(mid) > target ? lo : hi) = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    CHECK(std::abs(oracle - 0.3901215467580438) < 1e-9);  // frozen

    const double inverted = invert_monotone([](double a) { return angle_per_period(a); },
                                            target, Interval(0.0, 0.4999), 1e-12);
    CHECK(std::abs(inverted - oracle) < 1e-9);
}
