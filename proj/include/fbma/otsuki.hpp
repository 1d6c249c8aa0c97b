#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fbma/annuli.hpp"
#include "fbma/surface.hpp"

namespace fbma {

/// A closed member of the family: coprime (p, q) with 1/2 < p/q < 1/sqrt(2)
/// and the solved parameter a in (0, 1/2) whose angle advance is 2 pi p / q.
struct OtsukiSpec {
    int p = 0;
    int q = 0;
    double a = 0.0;
    double period = 0.0;  // q * pi, the s-period of the closed generating curve
};

/// The three initial-azimuth cases with guaranteed annulus counts.
enum class OtsukiCase {
    phi0_zero,      // phi0 = 0 (either parity of q)
    phi0_half_pi,   // phi0 = pi/2 (q odd)
    phi0_pi_over_q  // phi0 = pi/q (q even); realized on the phi0 = 0 surface of -a
};

OtsukiSpec solve_parameter(int p, int q);

/// Detects whether the angle advance of `a` is 2 pi p / q for some q <= max_den.
std::optional<std::pair<int, int>> detect_rational_period(double a, int max_den = 64);

/// The free boundary annuli of one fundamental period, constructed per case.
/// Throws if fewer than the guaranteed count (2p, or 2 for phi0 = pi/2) is found.
std::vector<AnnulusBand> enumerate_annuli(const OtsukiSpec& spec, OtsukiCase which);

/// Distinct orthogonality zeros in the representative interval
/// [-q pi/2, q pi/2); a zero at the left endpoint counts, at the right does not.
std::vector<double> zeros_in_period(const OtsukiSpec& spec, double phi0);

/// q even, phi0 = 0: checks that a half-period shift composed with a half-turn
/// of the x1 x2-plane is the identity on a sample grid.
bool rotation_map_check(const OtsukiSpec& spec, double tol = 1e-9);

/// q odd, phi0 = pi/2: checks that x1 is odd and x2, x3 are even in s.
bool mirror_map_check(const OtsukiSpec& spec, double tol = 1e-9);

/// q even: checks pointwise that the phi0 = pi/q surface of a coincides, up
/// to a rotation and parameter shift, with the phi0 = 0 surface of -a.
bool set_equality_check(const OtsukiSpec& spec, double tol = 1e-9);

/// Smallest n >= 1 with n*p == 1 (mod m); requires gcd(p, m) = 1.
int modular_inverse(int p, int m);

}  // namespace fbma
