#include <doctest.h>

#include <cmath>

#include "fbma/numerics.hpp"
#include "fbma/surface.hpp"

using namespace fbma;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 4.442882938158366;

double fd_ode_residual(const SurfaceParams& params, double s, int k, double h) {
    const CurvePoint m = generating_curve(params, s - h);
    const CurvePoint c = generating_curve(params, s);
    const CurvePoint p = generating_curve(params, s + h);
    const double u = c.pos[k];
    const double du = (p.pos[k] - m.pos[k]) / (2.0 * h);
    const double ddu = (p.pos[k] - 2.0 * u + m.pos[k]) / (h * h);
    const double z = c.pos[2];
    const double dz = (p.pos[2] - m.pos[2]) / (2.0 * h);
    if (k < 2) return std::abs(ddu + (dz / z) * du + 2.0 * u);
    return std::abs(ddu + (du * du - 1.0) / z + 2.0 * z);
}
}  // namespace

TEST_CASE("phi_rate: Clifford constant, periodicity, glide symmetry") {
    CHECK(std::abs(phi_rate(0.0, 1.234) - kSqrt2) < 1e-15);
    CHECK(std::abs(phi_rate(0.3, 0.7) - phi_rate(0.3, 0.7 + kPi)) < 1e-15);
    CHECK(std::abs(phi_rate(-0.3, 0.4) - phi_rate(0.3, 0.4 + 0.5 * kPi)) < 1e-15);
    CHECK(phi_rate(0.45, 2.0) > 0.0);
}

TEST_CASE("phi_rate: domain errors at and beyond the parameter clamp") {
    CHECK_THROWS_AS(phi_rate(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(phi_rate(-0.6, 0.0), std::domain_error);
    CHECK_THROWS_AS(phi_rate(0.49995, 0.0), std::domain_error);
    CHECK_THROWS_AS(SurfaceParams(0.5, 0.0), std::domain_error);
    CHECK_NOTHROW(SurfaceParams(0.4999, 0.0));
}

TEST_CASE("angle_per_period: value at 0, evenness, bounds") {
    CHECK(std::abs(angle_per_period(0.0) - kSqrt2Pi) < 1e-12);
    CHECK(std::abs(angle_per_period(0.3) - angle_per_period(-0.3)) < 1e-12);
    CHECK(angle_per_period(0.3) >= kPi / std::sqrt(0.8));
    for (double a : {0.1, 0.25, 0.4, 0.499}) {
        const double c = angle_per_period(a);
        CHECK(c > kPi);
        CHECK(c <= kSqrt2Pi + 1e-12);
    }
    CHECK(angle_per_period(0.1) > angle_per_period(0.2));  // decreasing in |a|
}

TEST_CASE("otsuki_period: identity with the angle advance, monotonicity, domain") {
    for (double a : {0.1, 0.2, 0.3, 0.4})
        CHECK(std::abs(otsuki_period(1.0 - 4.0 * a * a) - angle_per_period(a)) < 1e-8);

    CHECK(otsuki_period(0.2) > otsuki_period(0.1));  // strictly increasing in c

    // c -> 1^- limit against the smooth route at the matching parameter
    const double a = std::sqrt((1.0 - 0.999) / 4.0);
    CHECK(std::abs(otsuki_period(0.999) - angle_per_period(a)) < 1e-2);
    CHECK(std::abs(otsuki_period(0.999) - kSqrt2Pi) < 1e-2);

    CHECK_THROWS_AS(otsuki_period(0.0), std::domain_error);
    CHECK_THROWS_AS(otsuki_period(1.0), std::domain_error);
    CHECK_THROWS_AS(otsuki_period(-0.3), std::domain_error);
}

TEST_CASE("azimuth: linear at a = 0, half-period value, period reduction") {
    CHECK(std::abs(azimuth(SurfaceParams(0.0, 0.0), 1.7) - kSqrt2 * 1.7) < 1e-13);

    const double half = azimuth(SurfaceParams(0.25, 0.0), 0.5 * kPi);
    CHECK(std::abs(half - 0.5 * angle_per_period(0.25)) < 1e-12);

    const SurfaceParams params(0.3, 0.4);
    const double ca = angle_per_period(0.3);
    CHECK(std::abs(azimuth(params, 0.9 + kPi) - azimuth(params, 0.9) - ca) < 1e-12);
    for (int k = -3; k <= 3; ++k)
        CHECK(std::abs(azimuth(params, -1.1 + k * kPi) - azimuth(params, -1.1) - k * ca) <
              1e-9);
}

TEST_CASE("azimuth: strictly increasing in s") {
    const SurfaceParams params(0.35, 0.0);
    double prev = azimuth(params, -2.0);
    for (int i = 1; i <= 40; ++i) {
        const double cur = azimuth(params, -2.0 + 4.0 * i / 40.0);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("generating_curve: Clifford circle and direct substitution") {
    const SurfaceParams clifford(0.0, 0.0);
    for (double s : {-2.0, 0.3, 1.9}) {
        const CurvePoint pt = generating_curve(clifford, s);
        CHECK(std::abs(pt.pos[0] - std::cos(kSqrt2 * s) / kSqrt2) < 1e-13);
        CHECK(std::abs(pt.pos[1] - std::sin(kSqrt2 * s) / kSqrt2) < 1e-13);
        CHECK(std::abs(pt.pos[2] - 1.0 / kSqrt2) < 1e-15);
    }

    const CurvePoint origin = generating_curve(SurfaceParams(0.3, 0.0), 0.0);
    CHECK(std::abs(origin.pos[0] - std::sqrt(0.2)) < 1e-15);
    CHECK(std::abs(origin.pos[1]) < 1e-15);
    CHECK(std::abs(origin.pos[2] - std::sqrt(0.8)) < 1e-15);
}

TEST_CASE("generating_curve: unit position and unit speed") {
    CHECK(std::abs(vec::norm(generating_curve(SurfaceParams(0.29, 0.0), 2.1).vel) - 1.0) <
          1e-12);
    for (double a : {-0.45, -0.2, 0.05, 0.38, 0.4999}) {
        const SurfaceParams params(a, 0.7);
        for (double s : {-3.3, -0.4, 0.9, 2.6}) {
            const CurvePoint pt = generating_curve(params, s);
            CHECK(std::abs(vec::norm(pt.pos) - 1.0) < 1e-12);
            CHECK(std::abs(vec::norm(pt.vel) - 1.0) < 1e-11);
            CHECK(pt.pos[2] > 0.0);
        }
    }
}

TEST_CASE("generating_curve: profile equations hold under finite differences") {
    for (double a : {-0.3, 0.29}) {
        const SurfaceParams params(a, 0.0);
        for (double s : {-1.7, 0.25, 1.3})
            for (int k = 0; k < 3; ++k) CHECK(fd_ode_residual(params, s, k, 1e-4) < 1e-6);
    }
}

TEST_CASE("immersion: unit vectors, equatorial section") {
    const AmbientPoint clifford = immersion(SurfaceParams(0.0, 0.0), 0.8, 2.2);
    CHECK(std::abs(clifford[0] - std::cos(kSqrt2 * 0.8) / kSqrt2) < 1e-13);
    CHECK(std::abs(clifford[2] - std::cos(2.2) / kSqrt2) < 1e-13);
    CHECK(std::abs(clifford[0] * clifford[0] + clifford[1] * clifford[1] - 0.5) < 1e-13);

    CHECK(immersion(SurfaceParams(0.3, 0.1), 1.0, 0.0)[3] == 0.0);
    CHECK(std::abs(vec::norm(immersion(SurfaceParams(0.29, 0.0), 1.3, 2.2)) - 1.0) < 1e-12);
}

TEST_CASE("frame: unit normal orthogonal to the tangent plane") {
    const SurfaceParams params(0.29, 0.0);
    const double h = 1e-5;
    const FrameSample fr = frame(params, 0.8, 0.5);
    CHECK(std::abs(vec::norm(fr.normal) - 1.0) < 1e-10);
    CHECK(std::abs(vec::dot(fr.normal, fr.point)) < 1e-10);

    Vec4 ts{}, tt{};
    const Vec4 sp = immersion(params, 0.8 + h, 0.5), sm = immersion(params, 0.8 - h, 0.5);
    const Vec4 tp = immersion(params, 0.8, 0.5 + h), tm = immersion(params, 0.8, 0.5 - h);
    for (int k = 0; k < 4; ++k) {
        ts[k] = (sp[k] - sm[k]) / (2.0 * h);
        tt[k] = (tp[k] - tm[k]) / (2.0 * h);
    }
    CHECK(std::abs(vec::dot(fr.normal, ts)) < 1e-8);
    CHECK(std::abs(vec::dot(fr.normal, tt)) < 1e-8);
}

TEST_CASE("frame: inner product is theta-free and a positive multiple of f") {
    const SurfaceParams params(0.31, 0.2);
    const double base = frame(params, 1.1, 0.0).inner;
    for (double theta : {1.0, 2.0}) CHECK(std::abs(frame(params, 1.1, theta).inner - base) < 1e-12);

    for (double s : {-1.4, 0.3, 0.9, 2.2}) {
        const FrameSample fr = frame(params, s, 0.7);
        const double w = 0.5 - params.a * std::cos(2.0 * s);
        const double z2 = 0.5 + params.a * std::cos(2.0 * s);
        const double factor = std::sqrt(w * z2 * (1.0 - fr.point[0] * fr.point[0]));
        CHECK(factor > 0.0);
        CHECK(std::abs(fr.inner * factor - orthogonality(params, s)) < 1e-12);
    }
}

TEST_CASE("orthogonality: closed-form anchors and parity") {
    const double a = 0.29;
    const SurfaceParams params(a, 0.0);
    CHECK(std::abs(orthogonality(params, 0.0) -
                   std::sqrt(0.25 - a * a) * std::sqrt(0.5 + a)) < 1e-14);

    const double ca = angle_per_period(a);
    const double expected_half = std::sqrt(0.25 - a * a) * std::sqrt(0.5 - a) *
                                 std::cos(0.5 * ca);
    CHECK(orthogonality(params, 0.5 * kPi) < 0.0);
    CHECK(std::abs(orthogonality(params, 0.5 * kPi) - expected_half) < 1e-12);

    const SurfaceParams even(0.3, 0.0);
    CHECK(std::abs(orthogonality(even, 1.1) - orthogonality(even, -1.1)) < 1e-12);
}

TEST_CASE("orthogonality: half-period closed form across k") {
    for (double a : {-0.3, 0.29}) {
        const SurfaceParams params(a, 0.0);
        const double ca = angle_per_period(a);
        for (int k = -8; k <= 8; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double expected =
                std::sqrt(0.25 - a * a) * std::sqrt(0.5 + a * sign) * std::cos(0.5 * k * ca);
            CHECK(std::abs(orthogonality(params, 0.5 * k * kPi) - expected) < 1e-9);
        }
    }
}
