#include "fbma/export.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fbma/geometry.hpp"
#include "fbma/otsuki.hpp"

namespace fbma {

namespace {

constexpr double kPi = 3.14159265358979323846;

nlohmann::json mat4_to_json(const Mat4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) rows.push_back(std::vector<double>(row.begin(), row.end()));
    return rows;
}

nlohmann::json geometry_to_json(const GeometricReport& rep) {
    nlohmann::json j;
    j["area"] = rep.area;
    j["boundary_length"] = rep.boundary_length;
    j["ratio"] = rep.ratio;
    if (rep.iso.applicable) {
        j["iso"] = {{"radius", rep.iso.radius},
                    {"lower", rep.iso.lower},
                    {"upper", rep.iso.upper},
                    {"ok", rep.iso.ok}};
    } else {
        j["iso"] = nullptr;
    }
    j["balancing"] = std::vector<double>(rep.balancing.begin(), rep.balancing.end());
    j["same_side"] = rep.same_side;
    j["index_matrix"] = rep.index_matrix ? mat4_to_json(*rep.index_matrix)
                                         : nlohmann::json(nullptr);
    j["negative_directions"] =
        rep.negative_directions >= 0 ? nlohmann::json(rep.negative_directions)
                                     : nlohmann::json(nullptr);
    j["steklov_residuals"] =
        rep.steklov_residuals
            ? nlohmann::json(std::vector<double>(rep.steklov_residuals->begin(),
                                                 rep.steklov_residuals->end()))
            : nlohmann::json(nullptr);
    return j;
}

// --- SVG figure machinery ---------------------------------------------------

struct Camera {
    Vec3 dir;  // unit view direction; points with p.dir >= 0 face the viewer
    Vec3 u1, u2;
};

Camera make_camera(Vec3 dir) {
    const double n = std::sqrt(vec::dot(dir, dir));
    if (!(n > 1e-12)) throw std::invalid_argument("figure: projection must be nonzero");
    for (auto& c : dir) c /= n;
    Vec3 up = {0.0, 0.0, 1.0};
    if (std::abs(dir[2]) > 0.95) up = {0.0, 1.0, 0.0};
    Vec3 u1 = {up[1] * dir[2] - up[2] * dir[1], up[2] * dir[0] - up[0] * dir[2],
               up[0] * dir[1] - up[1] * dir[0]};
    const double n1 = std::sqrt(vec::dot(u1, u1));
    for (auto& c : u1) c /= n1;
    const Vec3 u2 = {dir[1] * u1[2] - dir[2] * u1[1], dir[2] * u1[0] - dir[0] * u1[2],
                     dir[0] * u1[1] - dir[1] * u1[0]};
    return Camera{dir, u1, u2};
}

struct Panel {
    std::ostringstream body;
    const Camera* cam;
    double size;

    std::pair<double, double> project(const Vec3& p) const {
        const double px = vec::dot(p, cam->u1);
        const double py = vec::dot(p, cam->u2);
        const double scale = 0.46 * size;
        return {0.5 * size + scale * px, 0.5 * size - scale * py};
    }

    // Emits a 3-D polyline split into front/back runs; the hidden hemisphere
    // is drawn at 30% opacity.
    void polyline(const std::vector<Vec3>& pts, const char* color, double width) {
        auto segment_front = [&](std::size_t k) {
            return vec::dot(pts[k], cam->dir) + vec::dot(pts[k + 1], cam->dir) >= 0.0;
        };
        std::size_t k = 0;
        while (k + 1 < pts.size()) {
            const bool front = segment_front(k);
            std::size_t end = k + 1;
            while (end + 1 < pts.size() && segment_front(end) == front) ++end;
            body << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
                 << "\"";
            if (!front) body << " opacity=\"0.3\"";
            body << " d=\"";
            for (std::size_t m = k; m <= end; ++m) {
                const auto [x, y] = project(pts[m]);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%c%.2f %.2f", m == k ? 'M' : 'L', x, y);
                body << buf;
            }
            body << "\"/>\n";
            k = end;
        }
    }

    void outline() {
        body << "<circle cx=\"" << 0.5 * size << "\" cy=\"" << 0.5 * size << "\" r=\""
             << 0.46 * size << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    }
};

std::vector<Vec3> sample_curve(const AnnulusBand& band, int n) {
    std::vector<Vec3> pts(n + 1);
    for (int i = 0; i <= n; ++i)
        pts[i] =
            generating_curve(band.params, band.s_lo + band.width() * i / n).pos;
    return pts;
}

std::vector<Vec3> sample_geodesic_circle(double x1, int n) {
    const double rho = std::sqrt(std::max(0.0, 1.0 - x1 * x1));
    std::vector<Vec3> pts(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double alpha = 2.0 * kPi * i / n;
        pts[i] = {x1, rho * std::cos(alpha), rho * std::sin(alpha)};
    }
    return pts;
}

std::vector<AnnulusBand> figure_bands(int figure_id) {
    switch (figure_id) {
        case 1: {
            std::vector<AnnulusBand> bands;
            for (int i = 1; i <= 4; ++i) bands.push_back(symmetric_band(0.29, i));
            return bands;
        }
        case 2:
            return enumerate_annuli(solve_parameter(2, 3), OtsukiCase::phi0_zero);
        case 3:
            return enumerate_annuli(solve_parameter(2, 3), OtsukiCase::phi0_half_pi);
        case 4:
            return enumerate_annuli(solve_parameter(5, 8), OtsukiCase::phi0_zero);
        case 5:
            return enumerate_annuli(solve_parameter(5, 8), OtsukiCase::phi0_pi_over_q);
        default:
            throw std::invalid_argument("figure id must be in 1..5");
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_curve_csv(std::ostream& os, const SurfaceParams& params, double s_lo,
                     double s_hi, int n) {
    if (n < 2) throw std::invalid_argument("curve export needs n >= 2");
    if (!(s_lo < s_hi)) throw std::invalid_argument("curve export needs s_lo < s_hi");
    os << "s,phi,x,y,z,dx,dy,dz,f\n";
    for (int i = 0; i < n; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / (n - 1);
        const CurvePoint pt = generating_curve(params, s);
        const double fv = orthogonality(params, s);
        os << format_double(s) << ',' << format_double(pt.phi) << ','
           << format_double(pt.pos[0]) << ',' << format_double(pt.pos[1]) << ','
           << format_double(pt.pos[2]) << ',' << format_double(pt.vel[0]) << ','
           << format_double(pt.vel[1]) << ',' << format_double(pt.vel[2]) << ','
           << format_double(fv) << '\n';
    }
}

nlohmann::json band_to_json(const AnnulusBand& band, bool with_geometry) {
    nlohmann::json j;
    j["a"] = band.params.a;
    j["phi0"] = band.params.phi0;
    j["s_lo"] = band.s_lo;
    j["s_hi"] = band.s_hi;
    j["sphere_x1"] = band.sphere_x1;
    j["radius"] = band.radius;
    j["contained_north"] = band.contained_north;
    j["contained_south"] = band.contained_south;
    j["embedded"] = band.embedded ? nlohmann::json(*band.embedded) : nlohmann::json(nullptr);
    j["wraps_torus"] = band.wraps_torus;
    if (with_geometry) j["geometry"] = geometry_to_json(geometric_report(band));
    return j;
}

nlohmann::json annuli_report(double a, int count) {
    if (count < 1) throw std::invalid_argument("annuli report needs count >= 1");
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["a"] = a;
    j["phi0"] = 0.0;
    j["count"] = count;
    nlohmann::json bands = nlohmann::json::array();
    for (int i = 1; i <= count; ++i) {
        AnnulusBand band = symmetric_band(a, i);
        band.embedded = embeddedness_check(band);
        bands.push_back(band_to_json(band));
    }
    j["bands"] = std::move(bands);
    return j;
}

nlohmann::json otsuki_report(int p, int q, const std::string& phi0_case) {
    OtsukiCase which;
    double phi0 = 0.0;
    if (phi0_case == "0") {
        which = OtsukiCase::phi0_zero;
    } else if (phi0_case == "half_pi") {
        which = OtsukiCase::phi0_half_pi;
        phi0 = 0.5 * kPi;
    } else if (phi0_case == "pi_over_q") {
        which = OtsukiCase::phi0_pi_over_q;
        phi0 = kPi / q;
    } else {
        throw std::invalid_argument("phi0 case must be one of: 0, half_pi, pi_over_q");
    }

    const OtsukiSpec spec = solve_parameter(p, q);
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["p"] = p;
    j["q"] = q;
    j["a"] = spec.a;
    j["period"] = spec.period;
    j["phi0_case"] = phi0_case;
    j["phi0"] = phi0;
    j["c_residual"] = std::abs(angle_per_period(spec.a) - 2.0 * kPi * p / q);

    const double scan_phi0 = which == OtsukiCase::phi0_half_pi ? 0.5 * kPi : 0.0;
    if (which == OtsukiCase::phi0_pi_over_q) {
        OtsukiSpec reflected = spec;
        reflected.a = -spec.a;
        j["zeros"] = zeros_in_period(reflected, 0.0);
        j["note"] = "bands realized on the phi0 = 0 surface of -a";
    } else {
        j["zeros"] = zeros_in_period(spec, scan_phi0);
    }

    const std::vector<AnnulusBand> bands = enumerate_annuli(spec, which);
    j["guarantee"] = which == OtsukiCase::phi0_half_pi ? 2 : 2 * p;
    j["count"] = bands.size();

    nlohmann::json pairing;
    switch (which) {
        case OtsukiCase::phi0_zero:
            if (q % 2 == 0) {
                pairing = {{"type", "rotation"},
                           {"angle", kPi},
                           {"shift", 0.5 * spec.period},
                           {"ok", rotation_map_check(spec, 1e-9)}};
            } else {
                pairing = nullptr;  // shared boundaries only; no isometry claimed
            }
            break;
        case OtsukiCase::phi0_half_pi:
            pairing = {{"type", "mirror"},
                       {"plane", "x1 = 0"},
                       {"ok", mirror_map_check(spec, 1e-9)}};
            break;
        case OtsukiCase::phi0_pi_over_q: {
            OtsukiSpec reflected = spec;
            reflected.a = -spec.a;
            pairing = {{"type", "rotation"},
                       {"angle", kPi},
                       {"shift", 0.5 * spec.period},
                       {"ok", rotation_map_check(reflected, 1e-9)},
                       {"set_equality", set_equality_check(spec, 1e-9)},
                       {"modular_inverse", modular_inverse(p, 2 * q)}};
            break;
        }
    }
    j["pairing"] = std::move(pairing);

    nlohmann::json bj = nlohmann::json::array();
    for (const AnnulusBand& band : bands) bj.push_back(band_to_json(band));
    j["bands"] = std::move(bj);
    return j;
}

nlohmann::json verification_to_json(const std::string& suite,
                                    const std::vector<VerificationReport>& reports) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["suite"] = suite;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& rep : reports) {
        items.push_back({{"claim", rep.claim},
                         {"status", rep.status},
                         {"residual", rep.residual},
                         {"tolerance", rep.tolerance},
                         {"inputs", rep.inputs}});
    }
    j["reports"] = std::move(items);
    j["passed"] = all_passed(reports);
    return j;
}

std::string figure_svg(int figure_id, Vec3 projection, int panel_size) {
    const std::vector<AnnulusBand> bands = figure_bands(figure_id);
    const Camera cam = make_camera(projection);

    const int n = static_cast<int>(bands.size());
    const int cols = n > 5 ? (n + 1) / 2 : n;
    const int rows = (n + cols - 1) / cols;
    const int width = cols * panel_size;
    const int height = rows * panel_size;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    for (int i = 0; i < n; ++i) {
        const int cx = (i % cols) * panel_size;
        const int cy = (i / cols) * panel_size;
        Panel panel{{}, &cam, static_cast<double>(panel_size)};
        panel.outline();
        panel.polyline(sample_geodesic_circle(bands[i].sphere_x1, 256), "black", 1.2);
        panel.polyline(sample_curve(bands[i], 512), "#cc0000", 1.6);
        svg << "<g transform=\"translate(" << cx << ',' << cy << ")\">\n"
            << panel.body.str() << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace fbma
