#include "fbma/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fbma/numerics.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;

double z_of(const AnnulusBand& band, double s) {
    return std::sqrt(0.5 + band.params.a * std::cos(2.0 * s));
}

// Geodesic-ball radius measured from the pole that contains (or abuts) the band.
double effective_radius(const AnnulusBand& band, int side) {
    return side >= 0 ? band.radius : kPi - band.radius;
}

// Weighted band integrals of |II|^2 against products of coordinate functions.
struct IndexIntegrals {
    double xx, yy, xy, zz;
};

IndexIntegrals index_integrals(const AnnulusBand& band) {
    const SurfaceParams& p = band.params;
    const Interval iv(band.s_lo, band.s_hi);
    auto integral = [&](auto g) {
        return integrate(
                   [&](double s) {
                       const CurvePoint pt = generating_curve(p, s);
                       const double kt =
                           (pt.pos[0] * pt.vel[1] - pt.pos[1] * pt.vel[0]) / pt.pos[2];
                       return 2.0 * kt * kt * pt.pos[2] * g(pt);
                   },
                   iv, 1e-11, 1e-11)
            .value;
    };
    IndexIntegrals out;
    out.xx = integral([](const CurvePoint& pt) { return pt.pos[0] * pt.pos[0]; });
    out.yy = integral([](const CurvePoint& pt) { return pt.pos[1] * pt.pos[1]; });
    out.xy = integral([](const CurvePoint& pt) { return pt.pos[0] * pt.pos[1]; });
    out.zz = integral([](const CurvePoint& pt) { return pt.pos[2] * pt.pos[2]; });
    return out;
}

// Jacobi eigenvalue sweep for a symmetric 4x4 matrix.
std::array<double, 4> symmetric_eigenvalues(Mat4 m) {
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-30) break;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (std::abs(m[i][j]) < 1e-300) continue;
                const double theta = 0.5 * (m[j][j] - m[i][i]) / m[i][j];
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double mik = m[i][k], mjk = m[j][k];
                    m[i][k] = c * mik - s * mjk;
                    m[j][k] = s * mik + c * mjk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double mki = m[k][i], mkj = m[k][j];
                    m[k][i] = c * mki - s * mkj;
                    m[k][j] = s * mki + c * mkj;
                }
            }
        }
    }
    return {m[0][0], m[1][1], m[2][2], m[3][3]};
}

}  // namespace

double area(const AnnulusBand& band) {
    const double a = band.params.a;
    return 2.0 * kPi *
           integrate([a](double s) { return std::sqrt(0.5 + a * std::cos(2.0 * s)); },
                     Interval(band.s_lo, band.s_hi), 1e-12, 1e-12)
               .value;
}

double boundary_length(const AnnulusBand& band) {
    return 2.0 * kPi * (z_of(band, band.s_lo) + z_of(band, band.s_hi));
}

IsoperimetricBounds isoperimetric_check(const AnnulusBand& band) {
    IsoperimetricBounds out;
    out.applicable = band.contained_north || band.contained_south;
    if (!out.applicable) return out;
    out.radius = effective_radius(band, band.contained_north ? +1 : -1);
    out.ratio = boundary_length(band) / area(band);
    const double sin_r = std::sin(out.radius);
    const double cos_r = std::cos(out.radius);
    out.lower = 2.0 * cos_r / sin_r;
    out.upper = (1.0 + cos_r) / sin_r;
    out.ok = (out.lower <= out.ratio + 1e-12) && (out.ratio <= out.upper + 1e-12);
    return out;
}

double boundary_moment(const AnnulusBand& band, int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("boundary_moment: i must be in 1..4");
    if (i >= 3) return 0.0;  // the circle integral of cos/sin theta vanishes
    const CurvePoint lo = generating_curve(band.params, band.s_lo);
    const CurvePoint hi = generating_curve(band.params, band.s_hi);
    const int c = i - 1;
    return 2.0 * kPi * (lo.pos[2] * lo.pos[c] + hi.pos[2] * hi.pos[c]);
}

double second_fundamental_norm_sq(const SurfaceParams& params, double s) {
    const CurvePoint pt = generating_curve(params, s);
    const double k_theta = (pt.pos[0] * pt.vel[1] - pt.pos[1] * pt.vel[0]) / pt.pos[2];
    return 2.0 * k_theta * k_theta;
}

namespace {

// Second fundamental form coefficients (h_ss, h_stheta, h_ttheta) by central
// differences of the immersion, projected on the unit normal.
std::array<double, 3> fd_second_form(const SurfaceParams& params, double s, double theta,
                                     double h) {
    if (!(h >= 1e-5 && h <= 1e-3))
        throw std::invalid_argument("finite-difference step h must be in [1e-5, 1e-3]");

    const FrameSample fr = frame(params, s, theta);
    const Vec4& n = fr.normal;
    const Vec4& x = fr.point;
    const double z2 = x[2] * x[2] + x[3] * x[3];

    auto X = [&](double ds, double dt) { return immersion(params, s + ds, theta + dt); };
    const Vec4 xs_p = X(h, 0.0), xs_m = X(-h, 0.0);
    const Vec4 xt_p = X(0.0, h), xt_m = X(0.0, -h);
    const Vec4 xpp = X(h, h), xpm = X(h, -h), xmp = X(-h, h), xmm = X(-h, -h);

    double h_ss = 0.0, h_st = 0.0, h_tt = 0.0;
    for (int k = 0; k < 4; ++k) {
        // Ambient correction |dX|^2 x^k is orthogonal to the normal; keeping it
        // stabilizes the projection against rounding in the stencil.
        const double dss = (xs_p[k] - 2.0 * x[k] + xs_m[k]) / (h * h) + 1.0 * x[k];
        const double dtt = (xt_p[k] - 2.0 * x[k] + xt_m[k]) / (h * h) + z2 * x[k];
        const double dst = (xpp[k] - xpm[k] - xmp[k] + xmm[k]) / (4.0 * h * h);
        h_ss += dss * n[k];
        h_tt += dtt * n[k];
        h_st += dst * n[k];
    }
    return {h_ss, h_st, h_tt};
}

}  // namespace

double second_fundamental_fd(const SurfaceParams& params, double s, double theta, double h) {
    const auto [h_ss, h_st, h_tt] = fd_second_form(params, s, theta, h);
    const double z2 = 0.5 + params.a * std::cos(2.0 * s);
    return h_ss * h_ss + 2.0 * h_st * h_st / z2 + h_tt * h_tt / (z2 * z2);
}

double mean_curvature_fd(const SurfaceParams& params, double s, double theta, double h) {
    const auto [h_ss, h_st, h_tt] = fd_second_form(params, s, theta, h);
    (void)h_st;
    const double z2 = 0.5 + params.a * std::cos(2.0 * s);
    return h_ss + h_tt / z2;
}

int boundary_side(const AnnulusBand& band) {
    const double dx_lo = generating_curve(band.params, band.s_lo).vel[0];
    const double dx_hi = generating_curve(band.params, band.s_hi).vel[0];
    if (dx_lo > 0.0 && dx_hi < 0.0) return +1;  // x1 rises into the band: north side
    if (dx_lo < 0.0 && dx_hi > 0.0) return -1;
    return 0;
}

bool same_side_check(const AnnulusBand& band) { return boundary_side(band) != 0; }

Mat4 index_form_matrix(const AnnulusBand& band) {
    if (!(band.contained_north || band.contained_south))
        throw std::invalid_argument("index_form_matrix: band not contained in a ball");
    const int side = boundary_side(band);
    if (side == 0)
        throw std::invalid_argument("index_form_matrix: band is not same-side");

    const double r = effective_radius(band, side);
    const double cot_r = std::cos(r) / std::sin(r);
    const IndexIntegrals ig = index_integrals(band);
    const double blen = boundary_length(band);

    Mat4 m{};
    m[0][0] = -2.0 * kPi * ig.xx - cot_r * blen;
    m[1][1] = -2.0 * kPi * ig.yy;
    m[0][1] = m[1][0] = -2.0 * kPi * ig.xy;
    m[2][2] = m[3][3] = -kPi * ig.zz;
    return m;
}

int negative_eigen_count(const Mat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(m[i][j] - m[j][i]) > 1e-10)
                throw std::invalid_argument("negative_eigen_count: matrix not symmetric");
    int count = 0;
    for (double lambda : symmetric_eigenvalues(m))
        if (lambda < -1e-10) ++count;
    return count;
}

double laplace_residual(const SurfaceParams& params, double s, int i, double h) {
    if (i < 1 || i > 4) throw std::invalid_argument("laplace_residual: i must be in 1..4");
    if (!(h >= 1e-5 && h <= 1e-3))
        throw std::invalid_argument("laplace_residual: h must be in [1e-5, 1e-3]");

    // Evaluate on a meridian where the coordinate is extremal in theta, so the
    // analytic theta-derivative term reduces to -u.
    const double theta = (i == 4) ? 0.5 * kPi : 0.0;
    const int k = i - 1;
    auto u = [&](double t) { return immersion(params, t, theta)[k]; };

    const double um = u(s - h), u0 = u(s), up = u(s + h);
    const double u_s = (up - um) / (2.0 * h);
    const double u_ss = (up - 2.0 * u0 + um) / (h * h);

    const CurvePoint pt = generating_curve(params, s);
    const double z = pt.pos[2];
    const double dz = pt.vel[2];
    const double u_tt = (i >= 3) ? -u0 : 0.0;  // second theta-derivative of z cos/sin

    return std::abs(u_ss + (dz / z) * u_s + u_tt / (z * z) + 2.0 * u0);
}

std::array<double, 4> steklov_boundary_check(const AnnulusBand& band) {
    const int side = boundary_side(band);
    if (side == 0)
        throw std::invalid_argument("steklov_boundary_check: band is not same-side");
    const double r = effective_radius(band, side);
    const double sin_r = std::sin(r);
    const double cot_r = std::cos(r) / sin_r;

    std::array<double, 4> res{};
    for (int end = 0; end < 2; ++end) {
        const double s = end == 0 ? band.s_lo : band.s_hi;
        const double eta = end == 0 ? -1.0 : +1.0;  // outward conormal is -+ d/ds
        const CurvePoint pt = generating_curve(band.params, s);

        // d_eta x^1 = -sin r measured from the containing pole; with the south
        // pole the axial coordinate flips sign.
        const double d_eta_x1 = eta * pt.vel[0];
        res[0] = std::max(res[0], std::abs(d_eta_x1 + side * sin_r));
        res[1] = std::max(res[1], std::abs(eta * pt.vel[1] - cot_r * pt.pos[1]));
        // x^3 = z cos(theta), x^4 = z sin(theta): the theta factor cancels.
        const double radial = std::abs(eta * pt.vel[2] - cot_r * pt.pos[2]);
        res[2] = std::max(res[2], radial);
        res[3] = std::max(res[3], radial);
    }
    return res;
}

GeometricReport geometric_report(const AnnulusBand& band) {
    GeometricReport rep;
    rep.area = area(band);
    rep.boundary_length = boundary_length(band);
    rep.ratio = rep.boundary_length / rep.area;
    rep.iso = isoperimetric_check(band);
    for (int i = 1; i <= 4; ++i) rep.balancing[i - 1] = boundary_moment(band, i);
    rep.same_side = same_side_check(band);
    if (rep.same_side) {
        rep.steklov_residuals = steklov_boundary_check(band);
        if (band.contained_north || band.contained_south) {
            rep.index_matrix = index_form_matrix(band);
            rep.negative_directions = negative_eigen_count(*rep.index_matrix);
        }
    }
    return rep;
}

}  // namespace fbma
