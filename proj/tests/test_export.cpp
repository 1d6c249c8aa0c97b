#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbma/export.hpp"

using namespace fbma;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}
}  // namespace

TEST_CASE("curve CSV: header, Clifford z column, bit round-trip") {
    std::ostringstream os;
    write_curve_csv(os, SurfaceParams(0.0, 0.0), 0.0, kPi, 5);
    const auto rows = parse_csv(os.str());
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"s", "phi", "x", "y", "z", "dx", "dy", "dz", "f"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 9);
        CHECK(rows[i][4] == "0.70710678118654757");  // constant z at 17 digits
    }

    // Reparsing reproduces the doubles bit-identically.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double s = std::strtod(rows[i][0].c_str(), nullptr);
        const double x = std::strtod(rows[i][2].c_str(), nullptr);
        const CurvePoint pt = generating_curve(SurfaceParams(0.0, 0.0), s);
        CHECK(x == pt.pos[0]);
    }

    std::ostringstream bad;
    CHECK_THROWS_AS(write_curve_csv(bad, SurfaceParams(0.0, 0.0), 0.0, 1.0, 1),
                    std::invalid_argument);
}

TEST_CASE("curve CSV: orthogonality column changes sign once before pi/2") {
    std::ostringstream os;
    write_curve_csv(os, SurfaceParams(0.29, 0.0), -2.0, 2.0, 100);
    const auto rows = parse_csv(os.str());
    int changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double s = std::strtod(rows[i][0].c_str(), nullptr);
        if (s < 0.0 || s > 0.5 * kPi) continue;
        const double f = std::strtod(rows[i][8].c_str(), nullptr);
        if (have_prev && prev * f < 0.0) ++changes;
        prev = f;
        have_prev = true;
    }
    CHECK(changes == 1);
}

TEST_CASE("annuli report: nested bands and radii") {
    const nlohmann::json j = annuli_report(0.29, 4);
    CHECK(j["schema"] == 1);
    REQUIRE(j["bands"].size() == 4);
    double prev = 0.0;
    for (const auto& band : j["bands"]) {
        CHECK(band["s_hi"].get<double>() > prev);
        prev = band["s_hi"].get<double>();
        CHECK(band["contained_north"].get<bool>());
        CHECK(band["geometry"]["area"].get<double>() > 0.0);
    }
    CHECK(j["bands"][0]["embedded"].get<bool>());

    const nlohmann::json cl = annuli_report(0.0, 1);
    CHECK(std::abs(cl["bands"][0]["radius"].get<double>() - 0.5 * kPi) < 1e-10);

    const nlohmann::json neg = annuli_report(-0.29, 1);
    CHECK(neg["bands"][0]["radius"].get<double>() < 0.5 * kPi);
}

TEST_CASE("otsuki report: counts, guarantees and witnesses") {
    const nlohmann::json j23 = otsuki_report(2, 3, "0");
    CHECK(j23["count"].get<int>() >= 4);
    CHECK(j23["guarantee"] == 4);
    CHECK(j23["pairing"].is_null());

    const nlohmann::json half = otsuki_report(2, 3, "half_pi");
    CHECK(half["count"] == 2);
    CHECK(half["guarantee"] == 2);
    CHECK(half["pairing"]["type"] == "mirror");
    CHECK(half["pairing"]["ok"].get<bool>());
    for (const auto& band : half["bands"])
        CHECK(std::abs(band["sphere_x1"].get<double>()) < 1e-10);

    const nlohmann::json piq = otsuki_report(5, 8, "pi_over_q");
    CHECK(piq["count"].get<int>() >= 10);
    CHECK(piq["pairing"]["type"] == "rotation");
    CHECK(piq["pairing"]["ok"].get<bool>());
    CHECK(piq["pairing"]["set_equality"].get<bool>());
    CHECK(piq["pairing"]["modular_inverse"] == 13);

    CHECK_THROWS_AS(otsuki_report(2, 3, "nope"), std::invalid_argument);
}

TEST_CASE("verification JSON: pass flag and tolerance override") {
    const auto reports = run_suite(Suite::Surface);
    const nlohmann::json j = verification_to_json("surface", reports);
    CHECK(j["schema"] == 1);
    CHECK(j["passed"].get<bool>());
    bool has_c0 = false;
    for (const auto& rep : j["reports"])
        has_c0 = has_c0 || rep["claim"] == "surface.c0_sqrt2pi";
    CHECK(has_c0);

    const auto tampered = run_suite(Suite::Surface, 1e-20);
    CHECK_FALSE(all_passed(tampered));
}

TEST_CASE("figures: well-formed SVG with the expected panel counts") {
    for (int id : {1, 3}) {
        const std::string svg = figure_svg(id);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find("#cc0000") != std::string::npos);
    }

    // One panel (outline circle) per band.
    const std::string f1 = figure_svg(1);
    std::size_t panels = 0;
    for (std::size_t at = f1.find("<circle"); at != std::string::npos;
         at = f1.find("<circle", at + 1))
        ++panels;
    CHECK(panels == 4);

    const std::string f3 = figure_svg(3);
    panels = 0;
    for (std::size_t at = f3.find("<circle"); at != std::string::npos;
         at = f3.find("<circle", at + 1))
        ++panels;
    CHECK(panels == 2);

    CHECK_THROWS_AS(figure_svg(0), std::invalid_argument);
    CHECK_THROWS_AS(figure_svg(6), std::invalid_argument);
    CHECK_THROWS_AS(figure_svg(1, Vec3{0.0, 0.0, 0.0}), std::invalid_argument);
}
