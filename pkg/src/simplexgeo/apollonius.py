"""Median lengths and related identities computed from edge lengths alone.

The central quantity is the per-vertex radicand

    m * sum of squared edges at vertex i
      - sum of squared edges of the face opposite vertex i

whose square root yields, after scaling, the median length, the distance
from the barycenter to vertex i, and the distance from the barycenter to
the opposite face centroid.  Every function that reports a residual
evaluates the two sides through independent routes: one through edge
lengths only, the other through direct vertex coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    Simplex,
    barycenter,
    check_index,
    face_centroid,
    require_regular,
    squared_distance_matrix,
)
from .errors import IndexOutOfRange, NegativeRadicand

# Radicands more negative than this fraction of their constituent terms
# signal genuinely inconsistent input; smaller negatives are rounding.
RADICAND_RTOL = 1e-9


@dataclass(frozen=True)
class MedianReport:
    """Median lengths plus the squared-sum identities of one simplex.

    ``median_lengths`` come from the edge-length formula while the three
    sums are accumulated from direct coordinates, so comparing them
    exercises two independent computation routes.
    """

    median_lengths: list
    apollonius_residuals: list
    sum_squares_medians: float
    sum_squares_center_to_vertices: float
    sum_squares_edges: float


def _radicand_terms(sq: np.ndarray, i: int) -> tuple[float, float]:
    """Vertex-star and opposite-face squared-edge sums for vertex i."""
    m = sq.shape[0] - 1
    star = float(sq[i].sum())
    total = float(sq[np.triu_indices(m + 1, 1)].sum())
    return m * star, total - star


def vertex_radicand(s: Simplex, i: int, sq: np.ndarray | None = None) -> float:
    """Edge-length radicand for vertex i, floored at zero within tolerance."""
    check_index(s, i)
    if sq is None:
        sq = squared_distance_matrix(s)
    star_term, face_term = _radicand_terms(sq, i)
    radicand = star_term - face_term
    if radicand < 0.0:
        scale = star_term + face_term
        if radicand < -RADICAND_RTOL * max(scale, 1e-300):
            raise NegativeRadicand(
                f"radicand {radicand:.6e} at vertex {i} is negative beyond "
                f"rounding tolerance (scale {scale:.6e})"
            )
        radicand = 0.0
    return radicand


def median_length(s: Simplex, i: int) -> float:
    """Length of the median from vertex i to the opposite face centroid.

    Computed from edge lengths only; no coordinate differences against the
    face centroid are taken.
    """
    return math.sqrt(vertex_radicand(s, i)) / s.m


def apollonius_residual(s: Simplex, i: int) -> float:
    """Defect of the squared-median identity at vertex i.

    The median term is measured directly from coordinates, so a residual
    near zero certifies the edge-length route against an independent one.
    """
    check_index(s, i)
    sq = squared_distance_matrix(s)
    star_term, face_term = _radicand_terms(sq, i)
    median = s.vertices[i] - face_centroid(s, i)
    return star_term - face_term - s.m**2 * float(median @ median)


def commandino_ratio(s: Simplex, i: int) -> tuple[float, float]:
    """Distances (barycenter to face centroid i, barycenter to vertex i).

    Both are measured from coordinates; the second equals m times the
    first, and the three points are collinear.
    """
    check_index(s, i)
    center = barycenter(s)
    to_face = center - face_centroid(s, i)
    to_vertex = center - s.vertices[i]
    return float(np.linalg.norm(to_face)), float(np.linalg.norm(to_vertex))


def median_sums(s: Simplex) -> MedianReport:
    """Assemble the per-vertex medians and the aggregate squared sums."""
    sq = squared_distance_matrix(s)
    center = barycenter(s)
    lengths = []
    residuals = []
    sum_medians = 0.0
    sum_center = 0.0
    for i in range(s.m + 1):
        lengths.append(math.sqrt(vertex_radicand(s, i, sq)) / s.m)
        residuals.append(apollonius_residual(s, i))
        med = s.vertices[i] - face_centroid(s, i)
        sum_medians += float(med @ med)
        gap = center - s.vertices[i]
        sum_center += float(gap @ gap)
    sum_edges = float(sq[np.triu_indices(s.m + 1, 1)].sum())
    return MedianReport(lengths, residuals, sum_medians, sum_center, sum_edges)


def pythagoras_regular_residual(s: Simplex, i: int, j: int) -> float:
    """Right-angle defect at the face centroid of a regular simplex.

    For equal edge lengths the segment from vertex i to its opposite face
    centroid and the segment from that centroid to any other vertex j form
    the legs of a right triangle whose hypotenuse is the edge (i, j).
    """
    check_index(s, i)
    check_index(s, j)
    if i == j:
        raise IndexOutOfRange("vertex indices i and j must differ")
    require_regular(s)
    centroid = face_centroid(s, i)
    leg_a = s.vertices[i] - centroid
    leg_b = s.vertices[j] - centroid
    hyp = s.vertices[i] - s.vertices[j]
    return float(leg_a @ leg_a) + float(leg_b @ leg_b) - float(hyp @ hyp)


def carnot_regular_check(s: Simplex) -> tuple[float, float]:
    """Both sides of the centroid-distance sum identity for regular simplices.

    Returns (sum over i of |barycenter - face centroid i|, circumradius +
    inradius), where the radii are the barycenter-to-vertex and
    barycenter-to-face-centroid distances of the regular simplex.
    """
    require_regular(s)
    center = barycenter(s)
    total = 0.0
    for i in range(s.m + 1):
        total += float(np.linalg.norm(center - face_centroid(s, i)))
    circum = float(np.linalg.norm(center - s.vertices[0]))
    inr = float(np.linalg.norm(center - face_centroid(s, 0)))
    return total, circum + inr
