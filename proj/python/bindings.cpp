// Python bindings for the core operations: surface data, band construction,
// the closed family, geometry reports and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "fbma/annuli.hpp"
#include "fbma/export.hpp"
#include "fbma/geometry.hpp"
#include "fbma/numerics.hpp"
#include "fbma/otsuki.hpp"
#include "fbma/surface.hpp"
#include "fbma/verify.hpp"

namespace py = pybind11;
using namespace fbma;

namespace {

py::dict band_dict(const AnnulusBand& band) {
    py::dict d;
    d["a"] = band.params.a;
    d["phi0"] = band.params.phi0;
    d["s_lo"] = band.s_lo;
    d["s_hi"] = band.s_hi;
    d["sphere_x1"] = band.sphere_x1;
    d["radius"] = band.radius;
    d["contained_north"] = band.contained_north;
    d["contained_south"] = band.contained_south;
    d["embedded"] = band.embedded ? py::cast(*band.embedded) : py::none();
    d["wraps_torus"] = band.wraps_torus;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fbma, m) {
    m.doc() = "Minimal surfaces of revolution in S^3 and their free boundary annuli";

    py::class_<SurfaceParams>(m, "SurfaceParams")
        .def(py::init<double, double>(), py::arg("a"), py::arg("phi0") = 0.0)
        .def_readonly("a", &SurfaceParams::a)
        .def_readonly("phi0", &SurfaceParams::phi0)
        .def("__repr__", [](const SurfaceParams& p) {
            return "SurfaceParams(a=" + std::to_string(p.a) +
                   ", phi0=" + std::to_string(p.phi0) + ")";
        });

    py::class_<AnnulusBand>(m, "AnnulusBand")
        .def_readonly("s_lo", &AnnulusBand::s_lo)
        .def_readonly("s_hi", &AnnulusBand::s_hi)
        .def_readonly("sphere_x1", &AnnulusBand::sphere_x1)
        .def_readonly("radius", &AnnulusBand::radius)
        .def_readonly("contained_north", &AnnulusBand::contained_north)
        .def_readonly("contained_south", &AnnulusBand::contained_south)
        .def_readonly("wraps_torus", &AnnulusBand::wraps_torus)
        .def_property_readonly("params",
                               [](const AnnulusBand& b) { return b.params; })
        .def_property_readonly(
            "embedded",
            [](const AnnulusBand& b) -> std::optional<bool> { return b.embedded; })
        .def("to_dict", &band_dict)
        .def("__repr__", [](const AnnulusBand& b) {
            return "AnnulusBand([" + std::to_string(b.s_lo) + ", " + std::to_string(b.s_hi) +
                   "], x1=" + std::to_string(b.sphere_x1) + ")";
        });

    py::class_<OtsukiSpec>(m, "OtsukiSpec")
        .def_readonly("p", &OtsukiSpec::p)
        .def_readonly("q", &OtsukiSpec::q)
        .def_readonly("a", &OtsukiSpec::a)
        .def_readonly("period", &OtsukiSpec::period);

    py::enum_<OtsukiCase>(m, "OtsukiCase")
        .value("PHI0_ZERO", OtsukiCase::phi0_zero)
        .value("PHI0_HALF_PI", OtsukiCase::phi0_half_pi)
        .value("PHI0_PI_OVER_Q", OtsukiCase::phi0_pi_over_q);

    // surface data
    m.def("phi_rate", &phi_rate, py::arg("a"), py::arg("t"));
    m.def("angle_per_period", &angle_per_period, py::arg("a"));
    m.def("otsuki_period", &otsuki_period, py::arg("c"));
    m.def("azimuth", &azimuth, py::arg("params"), py::arg("s"));
    m.def(
        "generating_curve",
        [](const SurfaceParams& p, double s) {
            const CurvePoint pt = generating_curve(p, s);
            py::dict d;
            d["s"] = pt.s;
            d["phi"] = pt.phi;
            d["pos"] = pt.pos;
            d["vel"] = pt.vel;
            return d;
        },
        py::arg("params"), py::arg("s"));
    m.def("immersion", &immersion, py::arg("params"), py::arg("s"), py::arg("theta"));
    m.def("orthogonality", &orthogonality, py::arg("params"), py::arg("s"));

    // bands
    m.def("first_positive_zero", &first_positive_zero, py::arg("a"));
    m.def("symmetric_band", &symmetric_band, py::arg("a"), py::arg("index") = 1);
    m.def("band_from_zero_pair", &band_from_zero_pair, py::arg("params"), py::arg("s_lo"),
          py::arg("s_hi"));
    m.def("embeddedness_check", &embeddedness_check, py::arg("band"),
          py::arg("n_samples") = 4096);
    m.def("radius_trichotomy", &radius_trichotomy, py::arg("a"));

    // closed family
    m.def("solve_parameter", &solve_parameter, py::arg("p"), py::arg("q"));
    m.def("detect_rational_period", &detect_rational_period, py::arg("a"),
          py::arg("max_den") = 64);
    m.def("enumerate_annuli", &enumerate_annuli, py::arg("spec"), py::arg("case"));
    m.def("rotation_map_check", &rotation_map_check, py::arg("spec"), py::arg("tol") = 1e-9);
    m.def("mirror_map_check", &mirror_map_check, py::arg("spec"), py::arg("tol") = 1e-9);
    m.def("set_equality_check", &set_equality_check, py::arg("spec"), py::arg("tol") = 1e-9);

    // geometry
    m.def("area", &area, py::arg("band"));
    m.def("boundary_length", &boundary_length, py::arg("band"));
    m.def("boundary_moment", &boundary_moment, py::arg("band"), py::arg("i"));
    m.def("second_fundamental_norm_sq", &second_fundamental_norm_sq, py::arg("params"),
          py::arg("s"));
    m.def("index_form_matrix", &index_form_matrix, py::arg("band"));
    m.def("negative_eigen_count", &negative_eigen_count, py::arg("matrix"));
    m.def("steklov_boundary_check", &steklov_boundary_check, py::arg("band"));
    m.def("same_side_check", &same_side_check, py::arg("band"));
    m.def(
        "geometric_report",
        [](const AnnulusBand& band) {
            const GeometricReport rep = geometric_report(band);
            py::dict d;
            d["area"] = rep.area;
            d["boundary_length"] = rep.boundary_length;
            d["ratio"] = rep.ratio;
            d["balancing"] = rep.balancing;
            d["same_side"] = rep.same_side;
            d["negative_directions"] = rep.negative_directions;
            if (rep.index_matrix) d["index_matrix"] = *rep.index_matrix;
            if (rep.steklov_residuals) d["steklov_residuals"] = *rep.steklov_residuals;
            if (rep.iso.applicable) {
                py::dict iso;
                iso["radius"] = rep.iso.radius;
                iso["lower"] = rep.iso.lower;
                iso["upper"] = rep.iso.upper;
                iso["ratio"] = rep.iso.ratio;
                iso["ok"] = rep.iso.ok;
                d["iso"] = iso;
            }
            return d;
        },
        py::arg("band"));

    // verification and figures
    m.def(
        "verify",
        [](const std::string& suite_name, std::optional<double> tol) {
            const auto suite = parse_suite(suite_name);
            if (!suite) throw std::invalid_argument("unknown suite: " + suite_name);
            py::list out;
            for (const auto& rep : run_suite(*suite, tol)) {
                py::dict d;
                d["claim"] = rep.claim;
                d["status"] = rep.status;
                d["residual"] = rep.residual;
                d["tolerance"] = rep.tolerance;
                d["inputs"] = rep.inputs;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("tol") = py::none());
    m.def("figure_svg", &figure_svg, py::arg("figure_id"),
          py::arg("projection") = Vec3{0.3, -0.8, 0.52}, py::arg("panel_size") = 280);
}
