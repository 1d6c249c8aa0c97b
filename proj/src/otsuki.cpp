#include "fbma/otsuki.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fbma/numerics.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.7071067811865476;

Vec3 rotate_x1x2(const Vec3& v, double beta) {
    const double c = std::cos(beta), s = std::sin(beta);
    return {c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]};
}

}  // namespace

int modular_inverse(int p, int m) {
    if (m <= 0) throw std::invalid_argument("modular_inverse: modulus must be positive");
    const int pr = ((p % m) + m) % m;
    for (int n = 1; n <= m; ++n)
        if ((static_cast<long long>(n) * pr) % m == 1) return n;
    throw std::invalid_argument("modular_inverse: arguments are not coprime");
}

OtsukiSpec solve_parameter(int p, int q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("solve_parameter: p, q must be positive");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("solve_parameter: p and q must be coprime");
    const double ratio = static_cast<double>(p) / q;
    if (!(ratio > 0.5 && ratio < kInvSqrt2)) {
        std::ostringstream msg;
        msg << "solve_parameter: p/q = " << p << "/" << q
            << " outside (1/2, 1/sqrt(2)); no such closed surface";
        throw std::domain_error(msg.str());
    }

    const double target = 2.0 * kPi * ratio;
    const double a = invert_monotone([](double t) { return angle_per_period(t); }, target,
                                     Interval(0.0, kMaxShapeParam), 1e-12);
    OtsukiSpec spec;
    spec.p = p;
    spec.q = q;
    spec.a = a;
    spec.period = q * kPi;
    return spec;
}

std::optional<std::pair<int, int>> detect_rational_period(double a, int max_den) {
    if (max_den > 64) throw std::invalid_argument("detect_rational_period: max_den <= 64");
    const double advance = angle_per_period(a);
    for (int q = 1; q <= max_den; ++q) {
        const double p_real = advance * q / (2.0 * kPi);
        const int p = static_cast<int>(std::lround(p_real));
        if (p < 1) continue;
        if (std::gcd(p, q) != 1) continue;
        if (std::abs(advance - 2.0 * kPi * p / q) <= 1e-8) return std::make_pair(p, q);
    }
    return std::nullopt;
}

std::vector<double> zeros_in_period(const OtsukiSpec& spec, double phi0) {
    const SurfaceParams params(spec.a, phi0);
    const double half = 0.5 * spec.period;

    std::vector<double> zeros = find_f_zeros(params, Interval(-half, half));
    // Left endpoint counts, right endpoint does not.  A zero that lies
    // mathematically at -q pi/2 shows up only as a tiny value there, not as a
    // sign change, so test it explicitly.
    if (std::abs(orthogonality(params, -half)) <= 1e-12 &&
        (zeros.empty() || std::abs(zeros.front() + half) > 1e-9)) {
        zeros.insert(zeros.begin(), -half);
    }
    std::vector<double> kept;
    for (double z : zeros)
        if (z < half - 1e-9) kept.push_back(z);
    return kept;
}

std::vector<AnnulusBand> enumerate_annuli(const OtsukiSpec& spec, OtsukiCase which) {
    const bool q_even = spec.q % 2 == 0;
    const double qpi = spec.period;

    std::vector<AnnulusBand> bands;
    int guarantee = 2 * spec.p;

    switch (which) {
        case OtsukiCase::phi0_zero: {
            const SurfaceParams params(spec.a, 0.0);
            std::vector<double> positive;
            for (double z : zeros_in_period(spec, 0.0))
                if (z > 1e-9) positive.push_back(z);
            for (double si : positive) {
                bands.push_back(band_from_zero_pair(params, -si, si));
                bands.push_back(band_from_zero_pair(params, si, qpi - si));
            }
            break;
        }
        case OtsukiCase::phi0_half_pi: {
            if (q_even)
                throw std::invalid_argument(
                    "enumerate_annuli: phi0 = pi/2 case requires odd q");
            const SurfaceParams params(spec.a, 0.5 * kPi);
            guarantee = 2;
            bands.push_back(band_from_zero_pair(params, -0.5 * qpi, 0.0));
            bands.push_back(band_from_zero_pair(params, 0.0, 0.5 * qpi));
            break;
        }
        case OtsukiCase::phi0_pi_over_q: {
            if (!q_even)
                throw std::invalid_argument(
                    "enumerate_annuli: phi0 = pi/q case requires even q");
            // The phi0 = pi/q surface coincides with the phi0 = 0 surface of -a,
            // where the symmetric construction applies.
            OtsukiSpec reflected = spec;
            reflected.a = -spec.a;
            const SurfaceParams params(reflected.a, 0.0);
            std::vector<double> positive;
            for (double z : zeros_in_period(reflected, 0.0))
                if (z > 1e-9) positive.push_back(z);
            for (double si : positive) {
                bands.push_back(band_from_zero_pair(params, -si, si));
                bands.push_back(band_from_zero_pair(params, si, qpi - si));
            }
            break;
        }
    }

    if (static_cast<int>(bands.size()) < guarantee) {
        std::ostringstream msg;
        msg << "enumerate_annuli: found " << bands.size() << " annuli, below the guaranteed "
            << guarantee << " for p/q = " << spec.p << "/" << spec.q;
        throw std::runtime_error(msg.str());
    }
    for (AnnulusBand& band : bands) band.embedded = embeddedness_check(band);
    return bands;
}

bool rotation_map_check(const OtsukiSpec& spec, double tol) {
    if (spec.q % 2 != 0)
        throw std::invalid_argument("rotation_map_check: requires even q");
    const SurfaceParams params(spec.a, 0.0);
    const double shift = 0.5 * spec.period;

    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double s = -spec.period + 2.0 * spec.period * i / 40.0;
        for (double theta : {0.0, 1.1, 2.7}) {
            const AmbientPoint lhs_raw = immersion(params, shift + s, theta);
            const AmbientPoint rhs = immersion(params, s, theta);
            const AmbientPoint lhs = {-lhs_raw[0], -lhs_raw[1], lhs_raw[2], lhs_raw[3]};
            for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
        }
    }
    return worst <= tol;
}

bool mirror_map_check(const OtsukiSpec& spec, double tol) {
    if (spec.q % 2 == 0)
        throw std::invalid_argument("mirror_map_check: requires odd q");
    const SurfaceParams params(spec.a, 0.5 * kPi);

    double worst = 0.0;
    for (int i = 0; i <= 64; ++i) {
        const double s = -0.5 * spec.period + spec.period * i / 64.0;
        const Vec3 plus = generating_curve(params, s).pos;
        const Vec3 minus = generating_curve(params, -s).pos;
        worst = std::max({worst, std::abs(minus[0] + plus[0]), std::abs(minus[1] - plus[1]),
                          std::abs(minus[2] - plus[2])});
    }
    return worst <= tol;
}

bool set_equality_check(const OtsukiSpec& spec, double tol) {
    if (spec.q % 2 != 0)
        throw std::invalid_argument("set_equality_check: requires even q");
    const double phi0 = kPi / spec.q;
    const int n = modular_inverse(spec.p, 2 * spec.q);
    const double beta = phi0 + n * spec.p * kPi / spec.q;

    const SurfaceParams original(spec.a, phi0);
    const SurfaceParams reflected(-spec.a, 0.0);

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double s = -spec.period + 2.0 * spec.period * i / 100.0;
        const Vec3 lhs = generating_curve(reflected, s - 0.5 * n * kPi).pos;
        const Vec3 rhs = rotate_x1x2(generating_curve(original, s).pos, beta);
        for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    return worst <= tol;
}

}  // namespace fbma
