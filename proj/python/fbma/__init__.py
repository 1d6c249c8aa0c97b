"""Minimal surfaces of revolution in the 3-sphere and their free boundary annuli."""

from ._fbma import (
    AnnulusBand,
    OtsukiCase,
    OtsukiSpec,
    SurfaceParams,
    angle_per_period,
    area,
    azimuth,
    band_from_zero_pair,
    boundary_length,
    boundary_moment,
    detect_rational_period,
    embeddedness_check,
    enumerate_annuli,
    figure_svg,
    first_positive_zero,
    generating_curve,
    geometric_report,
    immersion,
    index_form_matrix,
    mirror_map_check,
    negative_eigen_count,
    orthogonality,
    otsuki_period,
    phi_rate,
    radius_trichotomy,
    rotation_map_check,
    same_side_check,
    second_fundamental_norm_sq,
    set_equality_check,
    solve_parameter,
    steklov_boundary_check,
    symmetric_band,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusBand",
    "OtsukiCase",
    "OtsukiSpec",
    "SurfaceParams",
    "angle_per_period",
    "area",
    "azimuth",
    "band_from_zero_pair",
    "boundary_length",
    "boundary_moment",
    "detect_rational_period",
    "embeddedness_check",
    "enumerate_annuli",
    "figure_svg",
    "first_positive_zero",
    "generating_curve",
    "geometric_report",
    "immersion",
    "index_form_matrix",
    "mirror_map_check",
    "negative_eigen_count",
    "orthogonality",
    "otsuki_period",
    "phi_rate",
    "radius_trichotomy",
    "rotation_map_check",
    "same_side_check",
    "second_fundamental_norm_sq",
    "set_equality_check",
    "solve_parameter",
    "steklov_boundary_check",
    "symmetric_band",
    "verify",
]
