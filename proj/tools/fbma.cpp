// fbma: free boundary minimal annuli of revolution in the 3-sphere.
//
// Subcommands: curve, annuli, otsuki, verify, figure.
// Exit status: 0 success, 1 verification/guarantee failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fbma/export.hpp"
#include "fbma/otsuki.hpp"
#include "fbma/surface.hpp"
#include "fbma/verify.hpp"

namespace {

// Writes to the path, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
    if (!os) throw std::runtime_error("failed writing output file: " + path);
}

fbma::Vec3 parse_projection(const std::string& text) {
    fbma::Vec3 v{};
    std::istringstream ss(text);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, tok, ',')) throw CLI::ValidationError("--projection needs x,y,z");
        v[i] = std::stod(tok);
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal surfaces of revolution in S^3 and their free boundary annuli"};
    app.require_subcommand(1);

    // curve
    double a = 0.29, phi0 = 0.0, s_lo = -2.0, s_hi = 2.0;
    int n = 256;
    std::string out;
    auto* curve = app.add_subcommand("curve", "Sample the generating curve to CSV");
    curve->add_option("--a", a, "shape parameter in (-1/2, 1/2)");
    curve->add_option("--phi0", phi0, "initial azimuth (radians)");
    curve->add_option("--s-lo", s_lo, "lower parameter bound");
    curve->add_option("--s-hi", s_hi, "upper parameter bound");
    curve->add_option("-n,--n", n, "number of samples (>= 2)");
    curve->add_option("--out,-o", out, "output path (default stdout)");

    // annuli
    double annuli_a = 0.29;
    int count = 4;
    auto* annuli = app.add_subcommand("annuli", "Nested free boundary annuli as JSON");
    annuli->add_option("--a", annuli_a, "shape parameter");
    annuli->add_option("--count", count, "number of nested bands (>= 1)");
    annuli->add_option("--out,-o", out, "output path (default stdout)");

    // otsuki
    int p = 2, q = 3;
    std::string phi0_case = "0";
    auto* otsuki = app.add_subcommand("otsuki", "Annuli inside a closed (Otsuki) member");
    otsuki->add_option("--p", p, "numerator")->required();
    otsuki->add_option("--q", q, "denominator")->required();
    otsuki->add_option("--phi0", phi0_case, "initial azimuth case: 0 | half_pi | pi_over_q");
    otsuki->add_option("--out,-o", out, "output path (default stdout)");

    // verify
    std::string suite_name = "all";
    std::optional<double> tol_override;
    double tol_value = 0.0;
    auto* verify = app.add_subcommand("verify", "Run the quantitative verification suite");
    verify->add_option("suite", suite_name, "all | surface | annuli | otsuki | geometry");
    auto* tol_opt = verify->add_option("--tol", tol_value, "override every check tolerance");
    verify->add_option("--out,-o", out, "output path (default stdout)");

    // figure
    int figure_id = 1;
    std::string projection_text = "0.3,-0.8,0.52";
    int size = 280;
    auto* figure = app.add_subcommand("figure", "Render a figure of the family as SVG");
    figure->add_option("id", figure_id, "figure id in 1..5")->required();
    figure->add_option("--projection", projection_text, "view direction x,y,z");
    figure->add_option("--size", size, "panel size in pixels");
    figure->add_option("--out,-o", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*curve) {
            std::ostringstream os;
            fbma::write_curve_csv(os, fbma::SurfaceParams(a, phi0), s_lo, s_hi, n);
            emit(out, os.str());
            return 0;
        }
        if (*annuli) {
            emit(out, fbma::annuli_report(annuli_a, count).dump(2) + "\n");
            return 0;
        }
        if (*otsuki) {
            const nlohmann::json j = fbma::otsuki_report(p, q, phi0_case);
            emit(out, j.dump(2) + "\n");
            return j["count"].get<int>() >= j["guarantee"].get<int>() ? 0 : 1;
        }
        if (*verify) {
            const auto suite = fbma::parse_suite(suite_name);
            if (!suite) {
                std::cerr << "unknown suite: " << suite_name << "\n";
                return 2;
            }
            if (tol_opt->count() > 0) tol_override = tol_value;
            const auto reports = fbma::run_suite(*suite, tol_override);
            emit(out, fbma::verification_to_json(suite_name, reports).dump(2) + "\n");
            int failed = 0;
            for (const auto& rep : reports)
                if (!rep.skipped() && !rep.passed()) ++failed;
            if (failed > 0)
                std::cerr << failed << " of " << reports.size() << " checks failed\n";
            return failed == 0 ? 0 : 1;
        }
        if (*figure) {
            emit(out, fbma::figure_svg(figure_id, parse_projection(projection_text), size));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
