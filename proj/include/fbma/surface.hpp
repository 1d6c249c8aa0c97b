#pragma once

#include <array>

namespace fbma {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using AmbientPoint = Vec4;  // unit vector in R^4, point of S^3

/// Selects one complete minimal surface of revolution in S^3: the shape
/// parameter a in (-1/2, 1/2) and the initial azimuth phi0.
struct SurfaceParams {
    double a = 0.0;
    double phi0 = 0.0;

    SurfaceParams() = default;
    SurfaceParams(double a_, double phi0_);
};

/// Largest |a| accepted; the profile functions degenerate as |a| -> 1/2.
inline constexpr double kMaxShapeParam = 0.4999;

/// A sample of the generating curve on S^2 with its arc-length derivative.
struct CurvePoint {
    double s = 0.0;
    double phi = 0.0;
    Vec3 pos{};
    Vec3 vel{};
};

/// Immersion point with the surface unit normal and the radial conormal
/// field of geodesic spheres centered at the north pole.
struct FrameSample {
    AmbientPoint point{};
    Vec4 normal{};          // unit normal of the surface
    Vec4 conormal_field{};  // outward conormal of the geodesic sphere through the point
    double inner = 0.0;     // <normal, conormal_field>
};

/// Azimuthal speed d(phi)/ds of the generating curve.  Positive everywhere.
double phi_rate(double a, double t);

/// Increase of the azimuth over one period pi of the profile.  Cached per a;
/// lies in (pi, sqrt(2) pi].
double angle_per_period(double a);

/// Otsuki's fundamental period integral for c in (0, 1).  Equals
/// angle_per_period(a) at c = 1 - 4a^2; computed by a singular-endpoint
/// scheme independent of the smooth quadrature used there.
double otsuki_period(double c);

/// Azimuth phi(a, s) = phi0 + integral of phi_rate from 0 to s, reduced by
/// periodicity so only a remainder in [0, pi) is integrated.
double azimuth(const SurfaceParams& params, double s);

/// The generating curve on S^2 (z > 0) with analytic derivative.
CurvePoint generating_curve(const SurfaceParams& params, double s);

/// The surface of revolution in S^3.
AmbientPoint immersion(const SurfaceParams& params, double s, double theta);

/// Unit normal, radial conormal field and their inner product at (s, theta).
FrameSample frame(const SurfaceParams& params, double s, double theta);

/// Boundary-orthogonality function: its zeros mark the parameters where the
/// surface meets a geodesic sphere centered at the north pole orthogonally.
double orthogonality(const SurfaceParams& params, double s);

namespace vec {
double dot(const Vec3& u, const Vec3& v);
double dot(const Vec4& u, const Vec4& v);
double norm(const Vec3& u);
double norm(const Vec4& u);
}  // namespace vec

}  // namespace fbma
