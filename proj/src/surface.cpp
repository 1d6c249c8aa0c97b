#include "fbma/surface.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fbma/numerics.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_shape_param(double a) {
    if (!(std::abs(a) <= kMaxShapeParam)) {
        std::ostringstream msg;
        msg << "shape parameter a = " << a << " outside [-" << kMaxShapeParam << ", "
            << kMaxShapeParam << "]";
        throw std::domain_error(msg.str());
    }
}

// phi(a, s) - phi0 for s in [0, pi), by quadrature of the rate.
double azimuth_remainder(double a, double s_rem) {
    if (s_rem == 0.0) return 0.0;
    return integrate([a](double t) { return phi_rate(a, t); }, Interval(0.0, s_rem),
                     1e-13, 1e-13)
        .value;
}

}  // namespace

SurfaceParams::SurfaceParams(double a_, double phi0_) : a(a_), phi0(phi0_) {
    require_shape_param(a);
    if (!std::isfinite(phi0)) throw std::domain_error("phi0 must be finite");
}

double phi_rate(double a, double t) {
    require_shape_param(a);
    const double c = std::cos(2.0 * t);
    return std::sqrt(0.25 - a * a) / (std::sqrt(0.5 + a * c) * (0.5 - a * c));
}

double angle_per_period(double a) {
    require_shape_param(a);

    static std::mutex mtx;
    static std::map<double, double> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    // 2 * integral over [0, pi/2]; the rate is symmetric about pi/2.
    const double value =
        2.0 * integrate([a](double t) { return phi_rate(a, t); },
                        Interval(0.0, 0.5 * kPi), 1e-14, 1e-14)
                  .value;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(a, value);
    return value;
}

double otsuki_period(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("otsuki_period: need c in (0, 1)");
    const double root = std::sqrt(1.0 - c);
    const double x0 = 1.0 - root;
    const double x1 = 1.0 + root;
    // Integrand 1 / (x sqrt((2-x)(x-x0)(x1-x))): inverse-sqrt blowup at both
    // ends, handled through the endpoint distances.
    auto f = [](double x, double d_lo, double d_hi) {
        return 1.0 / (x * std::sqrt((2.0 - x) * d_lo * d_hi));
    };
    return std::sqrt(2.0 * c) *
           integrate_singular_endpoints(EndpointAwareFn(f), Interval(x0, x1), 1e-13, 1e-13)
               .value;
}

double azimuth(const SurfaceParams& params, double s) {
    const double k = std::floor(s / kPi);
    double rem = s - k * kPi;
    if (rem < 0.0) rem = 0.0;            // guard rounding at exact multiples
    if (rem >= kPi) rem = 0.0;
    double value = params.phi0 + azimuth_remainder(params.a, rem);
    if (k != 0.0) value += k * angle_per_period(params.a);
    return value;
}

CurvePoint generating_curve(const SurfaceParams& params, double s) {
    const double a = params.a;
    const double c2 = std::cos(2.0 * s);
    const double s2 = std::sin(2.0 * s);
    const double w = 0.5 - a * c2;       // x^2 + y^2 on S^2
    const double sqrt_w = std::sqrt(w);
    const double z = std::sqrt(0.5 + a * c2);

    const double ph = azimuth(params, s);
    const double cp = std::cos(ph);
    const double sp = std::sin(ph);
    const double rate = phi_rate(a, s);

    CurvePoint pt;
    pt.s = s;
    pt.phi = ph;
    pt.pos = {sqrt_w * cp, sqrt_w * sp, z};
    // d(sqrt w)/ds = a sin(2s) / sqrt(w); dz/ds = -a sin(2s) / z.
    const double dw = a * s2 / sqrt_w;
    pt.vel = {dw * cp - sqrt_w * sp * rate, dw * sp + sqrt_w * cp * rate, -a * s2 / z};
    return pt;
}

AmbientPoint immersion(const SurfaceParams& params, double s, double theta) {
    const CurvePoint pt = generating_curve(params, s);
    return {pt.pos[0], pt.pos[1], pt.pos[2] * std::cos(theta), pt.pos[2] * std::sin(theta)};
}

FrameSample frame(const SurfaceParams& params, double s, double theta) {
    const CurvePoint pt = generating_curve(params, s);
    const double x = pt.pos[0], y = pt.pos[1], z = pt.pos[2];
    const double dx = pt.vel[0], dy = pt.vel[1], dz = pt.vel[2];
    const double ct = std::cos(theta), st = std::sin(theta);

    FrameSample out;
    out.point = {x, y, z * ct, z * st};

    const double one_minus_x2 = 1.0 - x * x;
    if (!(one_minus_x2 > 1e-14))
        throw std::domain_error("frame: point at a pole of the radial field (|x1| = 1)");
    const double inv = 1.0 / std::sqrt(one_minus_x2);
    out.conormal_field = {(x * x - 1.0) * inv, x * y * inv, x * z * ct * inv, x * z * st * inv};

    // Normal: rotate n = gamma x gamma' about the x1 x2-plane.
    const double n1 = y * dz - z * dy;
    const double n2 = z * dx - x * dz;
    const double n3 = x * dy - y * dx;
    out.normal = {n1, n2, n3 * ct, n3 * st};

    out.inner = vec::dot(out.normal, out.conormal_field);
    return out;
}

double orthogonality(const SurfaceParams& params, double s) {
    const double a = params.a;
    require_shape_param(a);
    const double ph = azimuth(params, s);
    return a * std::sin(2.0 * s) * std::sin(ph) +
           std::sqrt(0.25 - a * a) * std::sqrt(0.5 + a * std::cos(2.0 * s)) * std::cos(ph);
}

namespace vec {

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

double dot(const Vec4& u, const Vec4& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

double norm(const Vec4& u) { return std::sqrt(dot(u, u)); }

}  // namespace vec

}  // namespace fbma
