#include "fbma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "fbma/annuli.hpp"
#include "fbma/geometry.hpp"
#include "fbma/numerics.hpp"
#include "fbma/otsuki.hpp"
#include "fbma/surface.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 4.442882938158366;

// Deterministic uniform doubles (splitmix64), identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    double uniform(double lo, double hi) {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::uint64_t state_;
};

class Checker {
public:
    explicit Checker(std::optional<double> tol_override) : tol_override_(tol_override) {}

    void value(const std::string& claim, double residual, double tolerance,
               const std::string& inputs) {
        VerificationReport rep;
        rep.claim = claim;
        rep.residual = residual;
        rep.tolerance = tol_override_.value_or(tolerance);
        rep.inputs = inputs;
        rep.status = residual <= rep.tolerance ? "pass" : "fail";
        reports_.push_back(std::move(rep));
    }

    void boolean(const std::string& claim, bool ok, const std::string& inputs) {
        value(claim, ok ? 0.0 : 1.0, 0.0, inputs);
    }

    void skipped(const std::string& claim, const std::string& inputs) {
        VerificationReport rep;
        rep.claim = claim;
        rep.status = "skipped";
        rep.inputs = inputs;
        reports_.push_back(std::move(rep));
    }

    std::vector<VerificationReport> take() { return std::move(reports_); }

private:
    std::optional<double> tol_override_;
    std::vector<VerificationReport> reports_;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

const std::vector<double>& c_grid() {
    static const std::vector<double> grid = {0.0,  0.05, 0.10, 0.15, 0.20, 0.25,
                                             0.30, 0.35, 0.40, 0.45, 0.499};
    return grid;
}

// Shared band pool, built once: the per-parameter first bands plus the closed
// family's annuli that the checks keep revisiting.
struct BandPool {
    std::vector<AnnulusBand> first_bands;        // a-grid first symmetric bands
    std::vector<AnnulusBand> nested_029;         // a = 0.29, i = 1..4
    std::vector<AnnulusBand> nested_m03;         // a = -0.3, i = 1..4
    std::vector<AnnulusBand> otsuki23_zero;      // (2,3), phi0 = 0
    std::vector<AnnulusBand> otsuki23_half_pi;   // (2,3), phi0 = pi/2
    std::vector<AnnulusBand> otsuki58_zero;      // (5,8), phi0 = 0
    std::vector<AnnulusBand> otsuki58_pi_q;      // (5,8), phi0 = pi/8
    OtsukiSpec spec23, spec58;

    std::vector<const AnnulusBand*> all() const {
        std::vector<const AnnulusBand*> out;
        for (const auto* v : {&first_bands, &nested_029, &nested_m03, &otsuki23_zero,
                              &otsuki23_half_pi, &otsuki58_zero, &otsuki58_pi_q})
            for (const auto& band : *v) out.push_back(&band);
        return out;
    }
};

const std::vector<double>& first_band_grid() {
    static const std::vector<double> grid = {-0.45, -0.29, -0.05, 0.0, 0.05, 0.29, 0.45};
    return grid;
}

const BandPool& band_pool() {
    static const BandPool pool = [] {
        BandPool p;
        for (double a : first_band_grid()) p.first_bands.push_back(symmetric_band(a, 1));
        for (int i = 1; i <= 4; ++i) {
            p.nested_029.push_back(symmetric_band(0.29, i));
            p.nested_m03.push_back(symmetric_band(-0.3, i));
        }
        p.spec23 = solve_parameter(2, 3);
        p.spec58 = solve_parameter(5, 8);
        p.otsuki23_zero = enumerate_annuli(p.spec23, OtsukiCase::phi0_zero);
        p.otsuki23_half_pi = enumerate_annuli(p.spec23, OtsukiCase::phi0_half_pi);
        p.otsuki58_zero = enumerate_annuli(p.spec58, OtsukiCase::phi0_zero);
        p.otsuki58_pi_q = enumerate_annuli(p.spec58, OtsukiCase::phi0_pi_over_q);
        return p;
    }();
    return pool;
}

double fd_ode_residual(const SurfaceParams& params, double s, int component) {
    const double h = 1e-4;
    const CurvePoint m = generating_curve(params, s - h);
    const CurvePoint c = generating_curve(params, s);
    const CurvePoint pl = generating_curve(params, s + h);
    const int k = component;
    const double u = c.pos[k];
    const double du = (pl.pos[k] - m.pos[k]) / (2.0 * h);
    const double ddu = (pl.pos[k] - 2.0 * u + m.pos[k]) / (h * h);
    const double z = c.pos[2];
    const double dz = (pl.pos[2] - m.pos[2]) / (2.0 * h);
    if (k < 2) return std::abs(ddu + (dz / z) * du + 2.0 * u);
    return std::abs(ddu + (du * du - 1.0) / z + 2.0 * z);
}

void check_numerics(Checker& ck) {
    {
        const auto whole = integrate([](double x) { return std::sin(x); }, Interval(0, kPi));
        const auto left = integrate([](double x) { return std::sin(x); }, Interval(0, 1.1));
        const auto right = integrate([](double x) { return std::sin(x); }, Interval(1.1, kPi));
        ck.value("numerics.quadrature_value", std::abs(whole.value - 2.0), 1e-12,
                 "integral of sin over [0, pi]");
        ck.value("numerics.quadrature_additive",
                 std::abs(left.value + right.value - whole.value), 1e-12, "split at 1.1");
    }
    {
        const auto smooth = integrate([](double x) { return std::exp(-x * x); }, Interval(0, 2));
        const auto singular = integrate_singular_endpoints(
            [](double x) { return std::exp(-x * x); }, Interval(0, 2));
        ck.value("numerics.singular_matches_smooth", std::abs(smooth.value - singular.value),
                 1e-10, "exp(-x^2) on [0, 2], both schemes");
    }
    {
        const auto arcsine = integrate_singular_endpoints(
            EndpointAwareFn([](double, double d_lo, double d_hi) {
                return 1.0 / std::sqrt(d_lo * d_hi);
            }),
            Interval(0, 1));
        ck.value("numerics.arcsine_integral", std::abs(arcsine.value - kPi), 1e-12,
                 "1/sqrt(x(1-x)) on [0, 1]");
        const auto inv_sqrt = integrate_singular_endpoints(
            [](double x) { return 1.0 / std::sqrt(x); }, Interval(0, 1));
        ck.value("numerics.inverse_sqrt_integral", std::abs(inv_sqrt.value - 2.0), 1e-9,
                 "1/sqrt(x) on [0, 1], plain integrand");
    }
    {
        const double root = find_root([](double x) { return std::cos(x); },
                                      make_bracket([](double x) { return std::cos(x); }, 1, 2));
        ck.value("numerics.find_root_cos", std::abs(root - 0.5 * kPi), 1e-12, "cos on [1, 2]");
    }
    {
        auto f = [](double x) { return std::sin(x); };
        const auto brackets = scan_sign_changes(f, Interval(0.0, 20.0), 0.1);
        double worst = brackets.size() == 7 ? 0.0 : 1.0;
        int k = 0;
        for (const auto& b : brackets) {
            const double root = b.f_lo == 0.0 ? b.lo : find_root(f, b, 1e-15, 1e-15);
            worst = std::max(worst, std::abs(root - k * kPi));
            ++k;
        }
        ck.value("numerics.scan_recovers_sin_zeros", worst, 1e-10,
                 "sin on [0, 20], step 0.1, 7 zeros");
    }
    {
        const double x = invert_monotone([](double t) { return t * t; }, 4.0, Interval(0, 3));
        ck.value("numerics.invert_monotone_square", std::abs(x - 2.0), 1e-10,
                 "x^2 = 4 on [0, 3]");
    }
}

void check_surface(Checker& ck) {
    ck.value("surface.c0_sqrt2pi", std::abs(angle_per_period(0.0) - kSqrt2Pi), 1e-10,
             "a = 0");
    {
        double even = 0.0, range = 0.0, lower = 0.0, decreasing = -1.0;
        double prev = angle_per_period(c_grid()[0]);
        for (std::size_t i = 0; i < c_grid().size(); ++i) {
            const double a = c_grid()[i];
            const double c = angle_per_period(a);
            even = std::max(even, std::abs(c - angle_per_period(-a)));
            range = std::max({range, kPi - c, c - kSqrt2Pi});
            lower = std::max(lower, kPi / std::sqrt(0.5 + a) - c);
            if (i > 0) {
                decreasing = std::max(decreasing, c - prev);
                prev = c;
            }
        }
        ck.value("surface.c_even", even, 1e-10, "grid a in {0, 0.05, ..., 0.45, 0.499}");
        ck.value("surface.c_range_pi_sqrt2pi", range, 1e-12, "same grid");
        ck.value("surface.c_lower_bound", lower, 1e-10, "C_a >= pi/sqrt(1/2 + a)");
        ck.value("surface.c_strictly_decreasing", decreasing, 0.0,
                 "max forward difference on the grid");
    }
    {
        double worst = 0.0;
        for (double a : {0.1, 0.2, 0.3, 0.4})
            worst = std::max(worst,
                             std::abs(angle_per_period(a) - otsuki_period(1.0 - 4.0 * a * a)));
        ck.value("surface.period_integral_match", worst, 1e-8,
                 "two quadrature schemes, a in {0.1, 0.2, 0.3, 0.4}");
    }
    {
        const double t1 = otsuki_period(0.1), t2 = otsuki_period(0.2);
        ck.value("surface.period_integral_increasing", t1 - t2, 0.0, "T(0.1) vs T(0.2)");
        const double a = std::sqrt((1.0 - 0.999) / 4.0);
        ck.value("surface.period_integral_continuity",
                 std::abs(otsuki_period(0.999) - angle_per_period(a)), 1e-2,
                 "c = 0.999 against the smooth route");
    }
    {
        Rng rng(20240811);
        double ode = 0.0, pos_norm = 0.0, vel_norm = 0.0, point_norm = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double a = rng.uniform(-0.45, 0.45);
            const double s = rng.uniform(-4.0, 4.0);
            const SurfaceParams params(a, 0.0);
            for (int k = 0; k < 3; ++k) ode = std::max(ode, fd_ode_residual(params, s, k));
            const CurvePoint pt = generating_curve(params, s);
            pos_norm = std::max(pos_norm, std::abs(vec::norm(pt.pos) - 1.0));
            vel_norm = std::max(vel_norm, std::abs(vec::norm(pt.vel) - 1.0));
            point_norm = std::max(
                point_norm, std::abs(vec::norm(immersion(params, s, rng.uniform(0, 6))) - 1.0));
        }
        ck.value("surface.ode_residuals", ode, 1e-6,
                 "central differences h = 1e-4, 200 random (a, s)");
        ck.value("surface.curve_unit_position", pos_norm, 1e-10, "same samples");
        ck.value("surface.curve_unit_speed", vel_norm, 1e-8, "same samples");
        ck.value("surface.immersion_unit", point_norm, 1e-10, "same samples");
    }
    {
        double worst = 0.0;
        for (double a : {-0.3, 0.1, 0.29}) {
            for (double phi0 : {0.0, 0.4}) {
                const SurfaceParams params(a, phi0);
                const double ca = angle_per_period(a);
                for (double s : {-1.3, 0.0, 0.9, 2.2}) {
                    const double base = azimuth(params, s);
                    for (int k = -3; k <= 3; ++k)
                        worst = std::max(
                            worst, std::abs(azimuth(params, s + k * kPi) - base - k * ca));
                }
            }
        }
        ck.value("surface.phi_period_reduction", worst, 1e-9,
                 "phi(s + k pi) = phi(s) + k C_a, k in -3..3");
    }
    {
        double glide = 0.0, periodic = 0.0;
        for (double a : {-0.4, -0.1, 0.25, 0.45}) {
            for (int i = 0; i <= 32; ++i) {
                const double t = -2.0 + 4.0 * i / 32.0;
                glide = std::max(glide,
                                 std::abs(phi_rate(-a, t) - phi_rate(a, t + 0.5 * kPi)));
                periodic = std::max(periodic,
                                    std::abs(phi_rate(a, t) - phi_rate(a, t + kPi)));
            }
        }
        ck.value("surface.rate_glide_symmetry", glide, 1e-12, "psi(-a,t) = psi(a,t+pi/2)");
        ck.value("surface.rate_pi_periodic", periodic, 1e-12, "psi(a,t) = psi(a,t+pi)");
    }
    {
        double worst = 0.0;
        for (double a : {-0.35, 0.2, 0.41}) {
            const SurfaceParams params(a, 0.0);
            for (int i = 0; i <= 16; ++i) {
                const double s = 0.1 + 2.9 * i / 16.0;
                const CurvePoint plus = generating_curve(params, s);
                const CurvePoint minus = generating_curve(params, -s);
                worst = std::max({worst,
                                  std::abs(orthogonality(params, s) - orthogonality(params, -s)),
                                  std::abs(plus.pos[0] - minus.pos[0]),
                                  std::abs(plus.pos[1] + minus.pos[1])});
            }
        }
        ck.value("surface.parity_phi0_zero", worst, 1e-10,
                 "f and x even, y odd when phi0 = 0");
    }
    {
        double worst = 0.0;
        for (double a : {-0.3, 0.29, 0.41}) {
            const SurfaceParams params(a, 0.0);
            const double ca = angle_per_period(a);
            for (int k = -8; k <= 8; ++k) {
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                const double expected = std::sqrt(0.25 - a * a) *
                                        std::sqrt(0.5 + a * sign) * std::cos(0.5 * k * ca);
                worst = std::max(worst,
                                 std::abs(orthogonality(params, 0.5 * k * kPi) - expected));
            }
        }
        ck.value("surface.f_half_period_closed_form", worst, 1e-9,
                 "f(k pi/2) closed form, k in -8..8");
    }
    {
        double curve = 0.0, phi_lin = 0.0;
        const SurfaceParams clifford(0.0, 0.0);
        const double inv = 1.0 / std::sqrt(2.0);
        for (int i = 0; i <= 24; ++i) {
            const double s = -3.0 + 6.0 * i / 24.0;
            const CurvePoint pt = generating_curve(clifford, s);
            const double u = std::sqrt(2.0) * s;
            curve = std::max({curve, std::abs(pt.pos[0] - inv * std::cos(u)),
                              std::abs(pt.pos[1] - inv * std::sin(u)),
                              std::abs(pt.pos[2] - inv)});
            phi_lin = std::max(phi_lin, std::abs(pt.phi - u));
        }
        ck.value("surface.clifford_circle", curve, 1e-12, "a = 0 generating curve");
        ck.value("surface.clifford_phi_linear", phi_lin, 1e-12, "phi(0, s) = sqrt(2) s");
    }
    {
        const SurfaceParams params(0.29, 0.0);
        double theta_dep = 0.0, ortho = 0.0, prop = 0.0;
        const FrameSample base = frame(params, 0.8, 0.0);
        for (double theta : {1.0, 2.0}) {
            const FrameSample fr = frame(params, 0.8, theta);
            theta_dep = std::max(theta_dep, std::abs(fr.inner - base.inner));
        }
        const double h = 1e-5;
        for (double s : {0.3, 0.8, 1.2}) {
            const FrameSample fr = frame(params, s, 0.5);
            Vec4 ts{}, tt{};
            const Vec4 sp = immersion(params, s + h, 0.5), sm = immersion(params, s - h, 0.5);
            const Vec4 tp = immersion(params, s, 0.5 + h), tm = immersion(params, s, 0.5 - h);
            for (int k = 0; k < 4; ++k) {
                ts[k] = (sp[k] - sm[k]) / (2.0 * h);
                tt[k] = (tp[k] - tm[k]) / (2.0 * h);
            }
            ortho = std::max({ortho, std::abs(vec::norm(fr.normal) - 1.0),
                              std::abs(vec::dot(fr.normal, fr.point)),
                              std::abs(vec::dot(fr.normal, ts)),
                              std::abs(vec::dot(fr.normal, tt))});

            // <N, nu> must be a positive multiple of f.
            const double a = params.a;
            const double w = 0.5 - a * std::cos(2.0 * s);
            const double z2 = 0.5 + a * std::cos(2.0 * s);
            const double x = fr.point[0];
            const double factor = std::sqrt(w * z2 * (1.0 - x * x));
            prop = std::max(prop,
                            std::abs(fr.inner * factor - orthogonality(params, s)));
        }
        ck.value("surface.frame_inner_theta_independent", theta_dep, 1e-12, "a = 0.29, s = 0.8");
        ck.value("surface.frame_orthonormal", ortho, 1e-8,
                 "unit normal orthogonal to point and tangents");
        ck.value("surface.inner_positive_multiple_of_f", prop, 1e-10,
                 "<N,nu> * sqrt(w z^2 (1-x^2)) = f");
    }
}

void check_annuli(Checker& ck) {
    ck.value("annuli.s1_clifford", std::abs(first_positive_zero(0.0) - kPi / (2.0 * std::sqrt(2.0))),
             1e-10, "s1(0) = pi/(2 sqrt 2)");
    {
        double below = -1.0;
        double ortho = 0.0;
        for (double a : {-0.4, -0.29, -0.1, 0.1, 0.29, 0.4}) {
            const double s1 = first_positive_zero(a);
            below = std::max(below, s1 - 0.5 * kPi);
            const SurfaceParams params(a, 0.0);
            for (double send : {-s1, s1})
                ortho = std::max(ortho, std::abs(frame(params, send, 0.7).inner));
        }
        ck.value("annuli.s1_below_half_pi", below, 0.0, "a in {+-0.1, +-0.29, +-0.4}");
        ck.value("annuli.orthogonal_boundaries", ortho, 1e-8,
                 "<N,nu> at both ends of the first band");
    }
    {
        double nested = -1.0;
        const auto& pool = band_pool();
        for (const auto* family : {&pool.nested_029, &pool.nested_m03})
            for (std::size_t i = 0; i + 1 < family->size(); ++i)
                nested = std::max(nested, (*family)[i].s_hi - (*family)[i + 1].s_hi);
        ck.value("annuli.nested_bands", nested, 0.0, "a in {0.29, -0.3}, i = 1..4");
    }
    {
        bool ok = true;
        for (double a : {-0.4, -0.29, -0.2, -0.1, 0.0, 0.1, 0.2, 0.29, 0.4})
            ok = ok && embeddedness_check(symmetric_band(a, 1));
        ck.boolean("annuli.first_band_embedded", ok,
                   "first bands, a in {0, +-0.1, +-0.2, +-0.29, +-0.4}");
    }
    {
        double r0_gap = std::abs(std::acos(generating_curve(SurfaceParams(0.0, 0.0),
                                                            first_positive_zero(0.0))
                                               .pos[0]) -
                                 0.5 * kPi);
        ck.value("annuli.radius_clifford", r0_gap, 1e-10, "r(0) = pi/2");
        bool trichotomy = true;
        for (double a : {-0.45, -0.29, -0.05, 0.05, 0.29, 0.45}) {
            const int sign = radius_trichotomy(a);
            trichotomy = trichotomy && sign == (a > 0 ? 1 : -1);
        }
        ck.boolean("annuli.radius_trichotomy", trichotomy, "sign(r(a) - pi/2) = sign(a)");
    }
    {
        bool containment = true;
        for (const AnnulusBand& band : band_pool().first_bands)
            containment = containment && band.contained_north && !band.contained_south;
        ck.boolean("annuli.first_band_containment", containment,
                   "(contained_north, contained_south) = (true, false)");
    }
    {
        double f_res = 0.0, x_gap = 0.0, radius_gap = 0.0;
        for (const AnnulusBand* band : band_pool().all()) {
            f_res = std::max({f_res, std::abs(orthogonality(band->params, band->s_lo)),
                              std::abs(orthogonality(band->params, band->s_hi))});
            x_gap = std::max(x_gap, std::abs(generating_curve(band->params, band->s_lo).pos[0] -
                                             generating_curve(band->params, band->s_hi).pos[0]));
            radius_gap = std::max(radius_gap,
                                  std::abs(band->radius - std::acos(band->sphere_x1)));
        }
        ck.value("annuli.band_zero_residuals", f_res, 1e-10, "every pooled band");
        ck.value("annuli.band_same_sphere", x_gap, 1e-9, "x(s_lo) vs x(s_hi)");
        ck.value("annuli.band_radius_consistent", radius_gap, 1e-12, "r = arccos(x1)");
    }
    {
        // x has exactly one zero in [0, pi/2] for phi0 = 0 (any a != 0), and for
        // a > 0 decreases strictly between that zero and s1.
        bool single_zero = true;
        double monotone = -1.0;
        for (double a : {-0.45, -0.29, -0.05, 0.05, 0.29, 0.45}) {
            const SurfaceParams params(a, 0.0);
            auto x1 = [&params](double s) { return generating_curve(params, s).pos[0]; };
            const auto brackets =
                scan_sign_changes(x1, Interval(0.0, 0.5 * kPi), kPi / 512.0);
            single_zero = single_zero && brackets.size() == 1;
            if (a > 0.0) {
                const double s_star = find_root(x1, brackets.front(), 1e-13, 1e-13);
                const double s1 = first_positive_zero(a);
                double prev = x1(s_star);
                for (int i = 1; i <= 64; ++i) {
                    const double cur = x1(s_star + (s1 - s_star) * i / 64.0);
                    monotone = std::max(monotone, cur - prev);
                    prev = cur;
                }
            }
        }
        ck.boolean("annuli.x_single_zero_quarter", single_zero,
                   "sign changes of x on [0, pi/2] at step pi/512");
        ck.value("annuli.x_decreasing_past_zero", monotone, 0.0,
                 "x strictly decreasing on (s*, s1], a > 0");
    }
    {
        double jump = 0.0;
        double prev_r = -1.0;
        for (double a = -0.45; a <= 0.451; a += 0.05) {
            const double s1 = first_positive_zero(a);
            const double r = std::acos(generating_curve(SurfaceParams(a, 0.0), s1).pos[0]);
            if (prev_r >= 0.0) jump = std::max(jump, std::abs(r - prev_r));
            prev_r = r;
        }
        ck.value("annuli.radius_grid_continuity", jump, 0.25,
                 "r(a) sampled at step 0.05 over [-0.45, 0.45]");
    }
}

void check_otsuki(Checker& ck) {
    const auto& pool = band_pool();
    {
        double solve_res = 0.0;
        double count_deficit = -100.0;
        for (const auto [p, q] :
             std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {5, 8}, {4, 7}, {5, 9}}) {
            const OtsukiSpec spec = solve_parameter(p, q);
            solve_res = std::max(solve_res,
                                 std::abs(angle_per_period(spec.a) - 2.0 * kPi * p / q));
            std::vector<double> phi0s = {0.0};
            phi0s.push_back(q % 2 == 1 ? 0.5 * kPi : kPi / q);
            for (double phi0 : phi0s) {
                const auto zeros = zeros_in_period(spec, phi0);
                count_deficit =
                    std::max(count_deficit, 2.0 * p - static_cast<double>(zeros.size()));
            }
        }
        ck.value("otsuki.parameter_residual", solve_res, 1e-10,
                 "C_a = 2 pi p / q over the test set");
        ck.value("otsuki.zero_count_gate", count_deficit, 0.0,
                 ">= 2p zeros per period, all phi0 cases");
    }
    {
        const auto rt = detect_rational_period(pool.spec23.a);
        const bool roundtrip = rt && rt->first == 2 && rt->second == 3;
        const bool clifford_none = !detect_rational_period(0.0).has_value();
        const bool generic_none = !detect_rational_period(0.1234).has_value();
        ck.boolean("otsuki.rational_detection", roundtrip && clifford_none && generic_none,
                   "(2,3) roundtrip; a = 0 and a = 0.1234 -> none");
    }
    {
        ck.boolean("otsuki.count_2_3_phi0_zero", pool.otsuki23_zero.size() >= 4,
                   fmt("found %g bands", static_cast<double>(pool.otsuki23_zero.size())));
        double equator = 0.0;
        for (const AnnulusBand& band : pool.otsuki23_half_pi)
            equator = std::max(equator, std::abs(band.sphere_x1));
        ck.boolean("otsuki.count_2_3_phi0_half_pi",
                   pool.otsuki23_half_pi.size() == 2 && equator <= 1e-9,
                   fmt("2 bands, max |x1| = %.3g", equator));
        ck.boolean("otsuki.count_5_8_phi0_zero", pool.otsuki58_zero.size() >= 10,
                   fmt("found %g bands", static_cast<double>(pool.otsuki58_zero.size())));
        ck.boolean("otsuki.count_5_8_phi0_pi_q", pool.otsuki58_pi_q.size() >= 10,
                   fmt("found %g bands", static_cast<double>(pool.otsuki58_pi_q.size())));
    }
    ck.boolean("otsuki.rotation_pairing", rotation_map_check(pool.spec58, 1e-9),
               "(5,8), phi0 = 0, half-period + half-turn identity");
    ck.boolean("otsuki.mirror_pairing", mirror_map_check(pool.spec23, 1e-9),
               "(2,3), phi0 = pi/2, reflection across x1 = 0");
    ck.boolean("otsuki.set_equality", set_equality_check(pool.spec58, 1e-9),
               "(5,8): phi0 = pi/q surface equals the reflected phi0 = 0 surface");
    {
        OtsukiSpec perturbed = pool.spec58;
        perturbed.a += 1e-3;
        ck.boolean("otsuki.rotation_negative_control", !rotation_map_check(perturbed, 1e-9),
                   "perturbed a must break the pairing");
    }
    {
        const double qpi = pool.spec58.period;
        const SurfaceParams params(pool.spec58.a, 0.0);
        double odd_about = std::abs(orthogonality(params, 0.25 * qpi));
        double periodic = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double s = -2.0 + 4.5 * i / 32.0;
            odd_about = std::max(odd_about, std::abs(orthogonality(params, 0.5 * qpi - s) +
                                                     orthogonality(params, s)));
            periodic = std::max(periodic, std::abs(orthogonality(params, s + qpi) -
                                                   orthogonality(params, s)));
            const AmbientPoint u = immersion(params, s, 0.9);
            const AmbientPoint v = immersion(params, s + qpi, 0.9);
            for (int k = 0; k < 4; ++k) periodic = std::max(periodic, std::abs(u[k] - v[k]));
        }
        ck.value("otsuki.f_odd_about_quarter_period", odd_about, 1e-9,
                 "(5,8), phi0 = 0: f(q pi/2 - s) = -f(s)");
        ck.value("otsuki.period_q_pi", periodic, 1e-9, "X and f are q pi-periodic");
    }
    {
        bool found = false;
        for (const AnnulusBand& band : pool.otsuki23_zero)
            found = found || (!band.contained_north && !band.contained_south);
        ck.boolean("otsuki.non_contained_band_exists", found,
                   "(2,3), phi0 = 0 family contains a band outside both balls");
    }
    {
        double ortho = 0.0;
        for (const auto* bands : {&pool.otsuki23_zero, &pool.otsuki58_zero}) {
            for (const AnnulusBand& band : *bands) {
                ortho = std::max({ortho, std::abs(frame(band.params, band.s_lo, 0.3).inner),
                                  std::abs(frame(band.params, band.s_hi, 0.3).inner)});
            }
        }
        ck.value("otsuki.band_orthogonality", ortho, 1e-8,
                 "<N,nu> at the ends of every enumerated band");
    }
}

void check_geometry(Checker& ck) {
    const auto& pool = band_pool();
    const AnnulusBand* clifford = nullptr;
    for (const AnnulusBand& band : pool.first_bands)
        if (band.params.a == 0.0) clifford = &band;

    {
        const double a = area(*clifford);
        const double b = boundary_length(*clifford);
        ck.value("geometry.clifford_area", std::abs(a - kPi * kPi), 1e-10, "pi^2");
        ck.value("geometry.clifford_boundary", std::abs(b - 2.0 * std::sqrt(2.0) * kPi), 1e-10,
                 "2 sqrt(2) pi");
        const double ratio = b / a;
        ck.value("geometry.clifford_ratio", std::abs(ratio - 2.0 * std::sqrt(2.0) / kPi), 1e-9,
                 "2 sqrt(2)/pi");
        const auto iso = isoperimetric_check(*clifford);
        ck.boolean("geometry.clifford_ratio_below_upper", iso.ok && iso.upper <= 1.0 + 1e-12,
                   "upper bound 1 at r = pi/2");
    }
    {
        const AnnulusBand& sample = pool.nested_029[0];
        AnnulusBand lo_half = sample, hi_half = sample;
        lo_half.s_hi = 0.0;
        hi_half.s_lo = 0.0;
        ck.value("geometry.area_additive",
                 std::abs(area(lo_half) + area(hi_half) - area(sample)), 1e-10,
                 "split at s = 0, a = 0.29");
    }
    {
        double worst = -1.0;
        int applicable = 0;
        for (const AnnulusBand* band : pool.all()) {
            const auto iso = isoperimetric_check(*band);
            if (!iso.applicable) continue;
            ++applicable;
            worst = std::max({worst, iso.lower - iso.ratio, iso.ratio - iso.upper});
        }
        ck.value("geometry.iso_bounds_all_contained", worst, 1e-12,
                 fmt("%g contained bands checked", static_cast<double>(applicable)));
    }
    {
        double balancing = 0.0, steklov = 0.0;
        int same_side_count = 0;
        for (const AnnulusBand* band : pool.all()) {
            if (!same_side_check(*band)) continue;
            ++same_side_count;
            for (int i = 2; i <= 4; ++i)
                balancing = std::max(balancing, std::abs(boundary_moment(*band, i)));
            for (double r : steklov_boundary_check(*band)) steklov = std::max(steklov, r);
        }
        ck.value("geometry.balancing", balancing, 1e-8,
                 fmt("boundary moments x2..x4 on %g same-side bands",
                     static_cast<double>(same_side_count)));
        ck.value("geometry.steklov_residuals", steklov, 1e-6, "same bands");
    }
    {
        Rng rng(777);
        double mean_h = 0.0, agree = 0.0;
        for (int i = 0; i < 100; ++i) {
            const SurfaceParams params(rng.uniform(-0.45, 0.45), 0.0);
            const double s = rng.uniform(-3.0, 3.0);
            const double theta = rng.uniform(0.0, 6.28);
            mean_h = std::max(mean_h, std::abs(mean_curvature_fd(params, s, theta, 1e-4)));
            if (i < 50)
                agree = std::max(agree, std::abs(second_fundamental_fd(params, s, theta, 1e-4) -
                                                 second_fundamental_norm_sq(params, s)));
        }
        ck.value("geometry.mean_curvature_zero", mean_h, 1e-4, "100 random samples, h = 1e-4");
        ck.value("geometry.ii_fd_agreement", agree, 1e-5, "50 random samples");
        double clifford_ii = 0.0;
        for (double s : {-1.0, 0.0, 0.7})
            clifford_ii = std::max(clifford_ii,
                                   std::abs(second_fundamental_norm_sq(SurfaceParams(0, 0), s) -
                                            2.0));
        ck.value("geometry.clifford_ii_norm", clifford_ii, 1e-10, "|II|^2 = 2 on the Clifford band");
    }
    {
        Rng rng(4242);
        double residual = 0.0, clifford_res = 0.0;
        for (int i = 0; i < 24; ++i) {
            const SurfaceParams params(rng.uniform(-0.44, 0.44), 0.0);
            const double s = rng.uniform(-2.5, 2.5);
            for (int comp = 1; comp <= 4; ++comp)
                residual = std::max(residual, laplace_residual(params, s, comp, 1e-4));
        }
        for (int comp = 1; comp <= 4; ++comp)
            clifford_res = std::max(clifford_res,
                                    laplace_residual(SurfaceParams(0.0, 0.0), 0.6, comp, 1e-4));
        ck.value("geometry.laplace_residuals", residual, 1e-6,
                 "Delta x^i + 2 x^i, 24 random samples");
        ck.value("geometry.laplace_clifford", clifford_res, 1e-8, "a = 0");
    }
    {
        const Mat4 m = index_form_matrix(*clifford);
        double closed_form = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                closed_form = std::max(closed_form,
                                       std::abs(m[i][j] - (i == j ? -0.5 * kPi * kPi : 0.0)));
        ck.value("geometry.index_clifford_matrix", closed_form, 1e-8,
                 "S = -(pi^2/2) I at a = 0");
        ck.boolean("geometry.index_clifford_negative_4", negative_eigen_count(m) == 4,
                   "4 negative eigenvalues");
    }
    {
        bool restricted = true;
        for (double a : {0.1, 0.29, 0.4}) {
            const AnnulusBand band = symmetric_band(a, 1);
            Mat4 m = index_form_matrix(band);
            for (int k = 0; k < 4; ++k) m[0][k] = m[k][0] = 0.0;
            restricted = restricted && negative_eigen_count(m) == 3;
        }
        ck.boolean("geometry.index_restricted_negative_3", restricted,
                   "v1 = 0 restriction, a in {0.1, 0.29, 0.4} (r > pi/2)");
    }
    {
        bool larger_balls = true;
        for (const AnnulusBand* band : pool.all()) {
            if (!(band->contained_north || band->contained_south)) continue;
            if (!same_side_check(*band)) continue;
            const double r = band->contained_north ? band->radius : kPi - band->radius;
            Mat4 m = index_form_matrix(*band);
            if (r > 0.5 * kPi + 1e-9) {
                for (int k = 0; k < 4; ++k) m[0][k] = m[k][0] = 0.0;
                larger_balls = larger_balls && negative_eigen_count(m) == 3;
            } else if (std::abs(r - 0.5 * kPi) <= 1e-9) {
                larger_balls = larger_balls && negative_eigen_count(m) == 4;
            }
        }
        ck.boolean("geometry.index_negdef_structure", larger_balls,
                   "restricted negdef for r > pi/2; full negdef at r = pi/2");
    }
    {
        bool sides = same_side_check(pool.nested_029[0]);
        sides = sides && !same_side_check(pool.otsuki23_half_pi[0]);
        // The complement of the first symmetric band in the closed curve is
        // contained in neither ball yet leaves its sphere southward at both ends.
        const AnnulusBand* complement = nullptr;
        for (const AnnulusBand& band : pool.otsuki23_zero)
            if (band.s_lo > 0.0 && !band.contained_north && !band.contained_south)
                complement = &band;
        sides = sides && complement != nullptr && boundary_side(*complement) == -1;
        ck.boolean("geometry.same_side_cases", sides,
                   "first band true; equator band false; complement band south");
    }
    {
        double identity = 0.0;
        for (int i = 1; i <= 30; ++i) {
            const double r = 0.1 + (kPi - 0.2) * i / 30.0;
            identity = std::max(identity, std::abs(std::cos(r) / std::tan(r) + std::sin(r) -
                                                   1.0 / std::sin(r)));
        }
        ck.value("geometry.csc_identity", identity, 1e-12,
                 "cos r cot r + sin r = csc r on (0, pi)");
        const Mat4 diag{{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}}};
        const Mat4 eye{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
        ck.boolean("geometry.negative_count_basics",
                   negative_eigen_count(diag) == 3 && negative_eigen_count(eye) == 0,
                   "diag(-1,-1,-1,0) -> 3; identity -> 0");
    }
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "surface") return Suite::Surface;
    if (name == "annuli") return Suite::Annuli;
    if (name == "otsuki") return Suite::Otsuki;
    if (name == "geometry") return Suite::Geometry;
    return std::nullopt;
}

std::vector<VerificationReport> run_suite(Suite suite, std::optional<double> tol_override) {
    Checker ck(tol_override);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Surface) {
        check_numerics(ck);
        check_surface(ck);
    }
    if (all || suite == Suite::Annuli) check_annuli(ck);
    if (all || suite == Suite::Otsuki) check_otsuki(ck);
    if (all || suite == Suite::Geometry) check_geometry(ck);
    return ck.take();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& rep : reports)
        if (!rep.skipped() && !rep.passed()) return false;
    return true;
}

}  // namespace fbma
