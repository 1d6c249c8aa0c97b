#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fbma/annuli.hpp"
#include "fbma/surface.hpp"
#include "fbma/verify.hpp"

#include <nlohmann/json_fwd.hpp>

namespace fbma {

/// Current layout version of every emitted JSON document.
inline constexpr int kJsonSchema = 1;

/// One float, 17 significant digits: reparsing reproduces the bits.
std::string format_double(double v);

/// CSV with header s,phi,x,y,z,dx,dy,dz,f and n uniform samples of [s_lo, s_hi].
void write_curve_csv(std::ostream& os, const SurfaceParams& params, double s_lo,
                     double s_hi, int n);

nlohmann::json band_to_json(const AnnulusBand& band, bool with_geometry = true);

/// The first `count` nested symmetric bands of the phi0 = 0 surface.
nlohmann::json annuli_report(double a, int count);

/// Solved closed surface, zero list, bands and pairing witnesses.
/// phi0_case is one of "0", "half_pi", "pi_over_q".
nlohmann::json otsuki_report(int p, int q, const std::string& phi0_case);

nlohmann::json verification_to_json(const std::string& suite,
                                    const std::vector<VerificationReport>& reports);

/// Orthographic figure of the generating curves and their geodesic circles
/// on S^2, one panel per band.  figure_id in 1..5.
std::string figure_svg(int figure_id, Vec3 projection = {0.3, -0.8, 0.52},
                       int panel_size = 280);

}  // namespace fbma
