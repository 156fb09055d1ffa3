"""Exact geometry of simplices: medians, enclosure bounds, and bisection."""

from .apollonius import (
    MedianReport,
    apollonius_residual,
    carnot_regular_check,
    commandino_ratio,
    median_length,
    median_sums,
    pythagoras_regular_residual,
)
from .bisection import (
    BUILTIN_SYSTEMS,
    BisectionStep,
    BisectionTrace,
    SystemFunction,
    bisect,
    containment_bound,
    error_estimate,
    kearfott_bound,
    solve,
)
from .core import (
    EdgeProfile,
    Simplex,
    barycenter,
    edge_profile,
    face_centroid,
    regular_simplex,
    sub_face,
    validate_simplex,
    volume,
)
from .enclosing import (
    EnclosureReport,
    barycentric_circumradius,
    blumenthal_wahlin_check,
    combined_enclosure,
    exact_meb,
    exact_meb_support,
    fermat_sum_regular,
    jung_bound,
    regular_circumradius,
    set_barycentric_circumradius,
)
from .metrics import (
    MetricsReport,
    barycentric_inradius,
    barycentric_inradius_estimate,
    distance_point_to_face,
    eggleston_suite,
    exact_inradius_fulldim,
    gale_diameter_check,
    metrics_report,
    regular_width,
    steinhagen_bound,
    thickness,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_SYSTEMS",
    "BisectionStep",
    "BisectionTrace",
    "EdgeProfile",
    "EnclosureReport",
    "MedianReport",
    "MetricsReport",
    "Simplex",
    "SystemFunction",
    "apollonius_residual",
    "barycenter",
    "barycentric_circumradius",
    "barycentric_inradius",
    "barycentric_inradius_estimate",
    "bisect",
    "blumenthal_wahlin_check",
    "carnot_regular_check",
    "combined_enclosure",
    "commandino_ratio",
    "containment_bound",
    "distance_point_to_face",
    "edge_profile",
    "eggleston_suite",
    "error_estimate",
    "exact_inradius_fulldim",
    "exact_meb",
    "exact_meb_support",
    "face_centroid",
    "fermat_sum_regular",
    "gale_diameter_check",
    "jung_bound",
    "kearfott_bound",
    "median_length",
    "median_sums",
    "metrics_report",
    "pythagoras_regular_residual",
    "regular_circumradius",
    "regular_simplex",
    "regular_width",
    "set_barycentric_circumradius",
    "solve",
    "steinhagen_bound",
    "sub_face",
    "thickness",
    "validate_simplex",
    "volume",
]
