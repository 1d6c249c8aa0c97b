#pragma once

#include <array>
#include <optional>

#include "fbma/annuli.hpp"
#include "fbma/surface.hpp"

namespace fbma {

using Mat4 = std::array<std::array<double, 4>, 4>;

struct IsoperimetricBounds {
    bool applicable = false;  // band must be contained in a geodesic ball
    double radius = 0.0;      // measured from the pole whose ball contains the band
    double ratio = 0.0;       // |boundary| / |area|
    double lower = 0.0;
    double upper = 0.0;
    bool ok = false;
};

struct GeometricReport {
    double area = 0.0;
    double boundary_length = 0.0;
    double ratio = 0.0;
    IsoperimetricBounds iso;
    std::array<double, 4> balancing{};       // boundary integrals of x^1..x^4
    bool same_side = false;
    std::optional<Mat4> index_matrix;        // when contained and same-side
    int negative_directions = -1;            // -1 when the matrix is inapplicable
    std::optional<std::array<double, 4>> steklov_residuals;  // when same-side
};

/// Area of the band, 2 pi * integral of z over [s_lo, s_hi].
double area(const AnnulusBand& band);

/// Total length of the two boundary circles.
double boundary_length(const AnnulusBand& band);

/// Ratio bounds k cot(r) <= |boundary|/|area| <= k (1+cos r)/(2 sin r), k = 2,
/// for bands contained in a geodesic ball.
IsoperimetricBounds isoperimetric_check(const AnnulusBand& band);

/// Boundary integral of the i-th ambient coordinate (i in 1..4).  Exactly 0
/// for i = 3, 4; closed form in the boundary samples for i = 1, 2.
double boundary_moment(const AnnulusBand& band, int i);

/// Squared norm of the second fundamental form, |II|^2 = 2 k_theta^2 with
/// k_theta the principal curvature of the rotation circle.
double second_fundamental_norm_sq(const SurfaceParams& params, double s);

/// Finite-difference oracle for |II|^2, assembled from second differences of
/// the immersion projected onto the unit normal.
double second_fundamental_fd(const SurfaceParams& params, double s, double theta, double h);

/// Finite-difference mean curvature (trace of II); 0 for these surfaces.
double mean_curvature_fd(const SurfaceParams& params, double s, double theta, double h);

/// +1 if the band leaves its sphere toward the north ball at both ends,
/// -1 toward the south, 0 if the two ends disagree.
int boundary_side(const AnnulusBand& band);

/// Whether the band meets its sphere from one consistent side.
bool same_side_check(const AnnulusBand& band);

/// Second-variation quadratic form on the linear ambient functions.
/// Requires a contained, same-side band.
Mat4 index_form_matrix(const AnnulusBand& band);

/// Eigenvalues of a symmetric 4x4 matrix below -1e-10, by Jacobi rotations.
int negative_eigen_count(const Mat4& m);

/// |Laplace(x^i) + 2 x^i| at (s, theta*) with finite-difference s-derivatives.
double laplace_residual(const SurfaceParams& params, double s, int i, double h);

/// Residuals of the free boundary conditions d_eta x^1 = -sin r and
/// d_eta x^i = cot(r) x^i (per-coordinate max over the two boundary circles).
/// Requires a same-side band; the sphere side picks the pole.
std::array<double, 4> steklov_boundary_check(const AnnulusBand& band);

GeometricReport geometric_report(const AnnulusBand& band);

}  // namespace fbma
