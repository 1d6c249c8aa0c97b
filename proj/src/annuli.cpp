#include "fbma/annuli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fbma/otsuki.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMergeTol = 1e-9;

double x1_of(const SurfaceParams& params, double s) {
    return generating_curve(params, s).pos[0];
}

// Golden-section refinement of an extremum bracketed by three grid samples.
template <typename F>
double golden_refine(const F& f, double lo, double hi, bool minimize) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
        const bool keep_left = minimize ? (fc < fd) : (fc > fd);
        if (keep_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return f(mid);
}

}  // namespace

std::vector<double> find_f_zeros(const SurfaceParams& params, Interval iv, double step) {
    if (!(step <= kPi / 64.0))
        throw std::invalid_argument("find_f_zeros: step must be <= pi/64");

    auto f = [&params](double s) { return orthogonality(params, s); };
    std::vector<double> zeros;
    for (const Bracket& b : scan_sign_changes(f, iv, step)) {
        double root;
        if (b.f_lo == 0.0)
            root = b.lo;
        else if (b.f_hi == 0.0)
            root = b.hi;
        else
            root = find_root(f, b, 1e-14, 1e-13);
        if (zeros.empty() || std::abs(root - zeros.back()) > kMergeTol) zeros.push_back(root);
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](double u, double v) { return std::abs(u - v) <= kMergeTol; }),
                zeros.end());
    return zeros;
}

double first_positive_zero(double a) {
    const SurfaceParams params(a, 0.0);
    // f(0) > 0 and f(pi/2) < 0, so the first zero lies in (0, pi/2).
    const auto zeros = find_f_zeros(params, Interval(0.0, 0.5 * kPi + 0.1));
    for (double z : zeros)
        if (z > 1e-12) return z;
    throw std::runtime_error("first_positive_zero: no zero found in (0, pi/2]");
}

AnnulusBand symmetric_band(double a, int index) {
    if (index < 1) throw std::invalid_argument("symmetric_band: index must be >= 1");
    const SurfaceParams params(a, 0.0);

    double window = (index + 2) * kPi;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> zeros;
        for (double z : find_f_zeros(params, Interval(0.0, window)))
            if (z > 1e-12) zeros.push_back(z);
        if (static_cast<int>(zeros.size()) >= index) {
            const double si = zeros[index - 1];
            return band_from_zero_pair(params, -si, si);
        }
        window *= 2.0;
    }
    std::ostringstream msg;
    msg << "symmetric_band: fewer than " << index
        << " positive zeros in the scan window; rerun with a larger window";
    throw std::runtime_error(msg.str());
}

AnnulusBand band_from_zero_pair(const SurfaceParams& params, double s_lo, double s_hi) {
    if (!(s_lo < s_hi)) throw std::invalid_argument("band_from_zero_pair: need s_lo < s_hi");

    const double f_lo = orthogonality(params, s_lo);
    const double f_hi = orthogonality(params, s_hi);
    if (std::abs(f_lo) > kZeroResidualTol || std::abs(f_hi) > kZeroResidualTol) {
        std::ostringstream msg;
        msg << "band_from_zero_pair: endpoints are not orthogonality zeros (|f| = "
            << std::max(std::abs(f_lo), std::abs(f_hi)) << ")";
        throw std::invalid_argument(msg.str());
    }

    const double x_lo = x1_of(params, s_lo);
    const double x_hi = x1_of(params, s_hi);
    if (std::abs(x_lo - x_hi) > kSphereMatchTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "band_from_zero_pair: boundary circles on different spheres, |x(s_lo) - "
               "x(s_hi)| = "
            << std::abs(x_lo - x_hi);
        throw std::invalid_argument(msg.str());
    }

    AnnulusBand band;
    band.params = params;
    band.s_lo = s_lo;
    band.s_hi = s_hi;
    band.sphere_x1 = 0.5 * (x_lo + x_hi);
    band.radius = std::acos(std::clamp(band.sphere_x1, -1.0, 1.0));
    if (auto period = curve_period(params))
        band.wraps_torus = band.width() >= *period - 1e-9;
    containment_check(band);
    return band;
}

std::pair<bool, bool> containment_check(AnnulusBand& band, int n_samples) {
    if (n_samples < 1024)
        throw std::invalid_argument("containment_check: need n_samples >= 1024");

    auto x1 = [&band](double s) { return x1_of(band.params, s); };
    const double h = band.width() / n_samples;

    double min_v = x1(band.s_lo), max_v = min_v;
    int min_i = 0, max_i = 0;
    for (int i = 1; i <= n_samples; ++i) {
        const double v = x1(band.s_lo + i * h);
        if (v < min_v) { min_v = v; min_i = i; }
        if (v > max_v) { max_v = v; max_i = i; }
    }
    // Local refinement around the sampled extrema, to guard flat minima.
    const double lo_min = band.s_lo + std::max(0, min_i - 1) * h;
    const double hi_min = band.s_lo + std::min(n_samples, min_i + 1) * h;
    min_v = std::min(min_v, golden_refine(x1, lo_min, hi_min, true));
    const double lo_max = band.s_lo + std::max(0, max_i - 1) * h;
    const double hi_max = band.s_lo + std::min(n_samples, max_i + 1) * h;
    max_v = std::max(max_v, golden_refine(x1, lo_max, hi_max, false));

    band.contained_north = min_v >= band.sphere_x1 - 1e-8;
    band.contained_south = max_v <= band.sphere_x1 + 1e-8;
    return {band.contained_north, band.contained_south};
}

bool curve_self_intersects(const std::function<Vec3(double)>& curve, double s_lo,
                           double s_hi, int n_samples) {
    const double width = s_hi - s_lo;
    const double delta = width / n_samples;
    const double sep_min = 3.0 * delta;
    const double dist_max = 0.5 * delta;
    const double dist_max2 = dist_max * dist_max;

    std::vector<Vec3> pts(n_samples + 1);
    for (int i = 0; i <= n_samples; ++i)
        pts[i] = curve(s_lo + width * i / n_samples);

    for (int i = 0; i <= n_samples; ++i) {
        for (int j = i + 1; j <= n_samples; ++j) {
            if ((j - i) * delta <= sep_min) continue;
            const double dx = pts[i][0] - pts[j][0];
            const double dy = pts[i][1] - pts[j][1];
            const double dz = pts[i][2] - pts[j][2];
            if (dx * dx + dy * dy + dz * dz < dist_max2) return true;
        }
    }
    return false;
}

bool embeddedness_check(const AnnulusBand& band, int n_samples) {
    if (n_samples < 2048)
        throw std::invalid_argument("embeddedness_check: need n_samples >= 2048");

    const SurfaceParams& p = band.params;
    if (curve_self_intersects(
            [&p](double s) { return generating_curve(p, s).pos; }, band.s_lo, band.s_hi,
            n_samples))
        return false;

    // For first symmetric bands the sufficient conditions are also checkable:
    // s_1(a) < pi/2 and y has the sign of s.
    if (p.phi0 == 0.0 && band.s_lo == -band.s_hi && band.s_hi < 0.5 * kPi) {
        for (int i = 0; i <= 256; ++i) {
            const double s = band.s_lo + band.width() * i / 256;
            const double y = generating_curve(p, s).pos[1];
            if (std::abs(s) > 1e-9 && y * s < 0.0) return false;
        }
    }
    return true;
}

int radius_trichotomy(double a) {
    const double s1 = first_positive_zero(a);
    const double x1 = x1_of(SurfaceParams(a, 0.0), s1);
    const double r = std::acos(std::clamp(x1, -1.0, 1.0));
    const double gap = r - 0.5 * kPi;
    if (std::abs(gap) <= 1e-9) return 0;
    return gap > 0.0 ? 1 : -1;
}

std::optional<double> curve_period(const SurfaceParams& params) {
    if (params.a == 0.0) return std::sqrt(2.0) * kPi;
    if (auto pq = detect_rational_period(params.a)) return pq->second * kPi;
    return std::nullopt;
}

}  // namespace fbma
