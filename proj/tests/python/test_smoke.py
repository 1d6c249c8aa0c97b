"""Smoke tests for the python bindings."""

import math

import pytest

import fbma


SQRT2_PI = math.sqrt(2.0) * math.pi


def test_angle_per_period_clifford():
    assert abs(fbma.angle_per_period(0.0) - SQRT2_PI) < 1e-10


def test_period_integral_identity():
    a = 0.2
    assert abs(fbma.otsuki_period(1 - 4 * a * a) - fbma.angle_per_period(a)) < 1e-8


def test_generating_curve_clifford():
    pt = fbma.generating_curve(fbma.SurfaceParams(0.0, 0.0), 0.7)
    x, y, z = pt["pos"]
    assert abs(x * x + y * y - 0.5) < 1e-12
    assert abs(z - 1 / math.sqrt(2)) < 1e-12


def test_first_band_geometry():
    band = fbma.symmetric_band(0.29, 1)
    assert band.contained_north and not band.contained_south
    assert band.radius > math.pi / 2
    assert fbma.radius_trichotomy(-0.29) == -1
    report = fbma.geometric_report(band)
    assert report["area"] > 0
    assert report["same_side"]
    assert report["negative_directions"] >= 3


def test_clifford_index_matrix():
    band = fbma.symmetric_band(0.0, 1)
    m = fbma.index_form_matrix(band)
    assert fbma.negative_eigen_count(m) == 4
    assert abs(m[0][0] + math.pi**2 / 2) < 1e-8


def test_otsuki_counts():
    spec = fbma.solve_parameter(2, 3)
    assert abs(fbma.angle_per_period(spec.a) - 4 * math.pi / 3) < 1e-10
    bands = fbma.enumerate_annuli(spec, fbma.OtsukiCase.PHI0_ZERO)
    assert len(bands) >= 4
    assert fbma.mirror_map_check(spec)


def test_rejects_bad_ratio():
    with pytest.raises(Exception):
        fbma.solve_parameter(1, 2)


def test_figure_svg():
    svg = fbma.figure_svg(3)
    assert svg.startswith("<?xml")
    assert "</svg>" in svg


def test_verify_surface_suite():
    reports = fbma.verify("surface")
    assert reports
    assert all(r["status"] in {"pass", "fail", "skipped"} for r in reports)
    assert all(r["status"] == "pass" for r in reports if r["status"] != "skipped")
