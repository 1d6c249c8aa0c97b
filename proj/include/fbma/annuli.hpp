#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fbma/numerics.hpp"
#include "fbma/surface.hpp"

namespace fbma {

/// A parameter band [s_lo, s_hi] of a surface whose boundary circles lie on
/// one geodesic sphere {x1 = sphere_x1} and meet it orthogonally.
struct AnnulusBand {
    SurfaceParams params;
    double s_lo = 0.0;
    double s_hi = 0.0;
    double sphere_x1 = 0.0;                // common x1 value of both boundary circles
    double radius = 0.0;                   // arccos(sphere_x1), from the north pole
    bool contained_north = false;          // x1 >= sphere_x1 on the whole band
    bool contained_south = false;          // x1 <= sphere_x1 on the whole band
    std::optional<bool> embedded;          // numeric certificate, when computed
    bool wraps_torus = false;              // band covers a full period of a closed curve

    double width() const { return s_hi - s_lo; }
};

inline constexpr double kZeroResidualTol = 1e-10;   // |f| at band ends
inline constexpr double kSphereMatchTol = 1e-9;     // |x(s_lo) - x(s_hi)|
inline constexpr double kDefaultScanStep = 0.012271846303085130;  // pi/256

/// All zeros of the orthogonality function on iv, each sign change of the
/// scan refined by bracketed root finding; duplicates within 1e-9 merged.
std::vector<double> find_f_zeros(const SurfaceParams& params, Interval iv,
                                 double step = kDefaultScanStep);

/// First positive zero of the orthogonality function with phi0 = 0;
/// lies in (0, pi/2).
double first_positive_zero(double a);

/// The i-th symmetric band [-s_i, s_i] of the phi0 = 0 surface (i >= 1).
AnnulusBand symmetric_band(double a, int index);

/// Builds a certified band from two orthogonality zeros on the same sphere.
/// Rejects pairs whose x1 values disagree beyond tolerance.
AnnulusBand band_from_zero_pair(const SurfaceParams& params, double s_lo, double s_hi);

/// Grid min/max of x1 over the band with one golden-section refinement pass;
/// sets and returns (contained_north, contained_south).
std::pair<bool, bool> containment_check(AnnulusBand& band, int n_samples = 2048);

/// Numeric embeddedness certificate for the band's generating curve segment.
bool embeddedness_check(const AnnulusBand& band, int n_samples = 4096);

/// Core of the certificate: reports whether a sampled curve has two samples
/// with parameter separation > 3*(width/n) but chordal distance < 0.5*(width/n).
bool curve_self_intersects(const std::function<Vec3(double)>& curve, double s_lo,
                           double s_hi, int n_samples);

/// Sign of r(a) - pi/2 (-1, 0, +1) for the first symmetric band.
int radius_trichotomy(double a);

/// Minimal s-period of the generating curve, if it closes (a = 0 or
/// rational angle advance); empty otherwise.
std::optional<double> curve_period(const SurfaceParams& params);

}  // namespace fbma
