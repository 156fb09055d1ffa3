"""Enclosing-ball bounds: barycentric circumradius, Jung, and exact MEB.

The barycentric circumradius is the distance from the barycenter to the
farthest vertex, computable from edge lengths alone.  Centered at the
barycenter it encloses the simplex, so the exact minimum enclosing ball
radius never exceeds it; Jung's bound provides a second cap in terms of
the diameter.  The exact ball comes from a randomized incremental
move-to-front search with a deterministic seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .apollonius import vertex_radicand
from .core import (
    Simplex,
    barycenter,
    edge_profile,
    require_regular,
    squared_distance_matrix,
    validate_simplex,
)
from .errors import (
    AllDegenerate,
    CapExceeded,
    Degenerate,
    DimensionMismatch,
    EmptyInput,
    InvalidDimension,
    TooFewPoints,
)

MEB_MAX_DIM = 10
MEB_MAX_POINTS = 10000
SUBSET_MAX_POINTS = 15

# Relative slack for the in-ball test inside the incremental search; the
# final radius is inflated to cover every input point exactly.
_IN_BALL_RTOL = 1e-12


@dataclass(frozen=True)
class EnclosureReport:
    """Side-by-side enclosure bounds and the exact ball for one simplex."""

    barycentric_circumradius: float
    jung_bound: float
    combined_bound: float
    meb_radius: float
    meb_center: np.ndarray
    barycenter: np.ndarray
    argmax_vertex: int


def barycentric_circumradius(s: Simplex) -> tuple[float, int]:
    """Distance from the barycenter to its farthest vertex, from edges only.

    Returns the radius and the index of the attaining vertex; ties resolve
    to the smallest index.
    """
    sq = squared_distance_matrix(s)
    best = -1.0
    argmax = 0
    for i in range(s.m + 1):
        rad = vertex_radicand(s, i, sq)
        if rad > best:
            best, argmax = rad, i
    return math.sqrt(best) / (s.m + 1), argmax


def jung_bound(diam: float, n: int) -> float:
    """Jung's enclosing radius sqrt(n / (2n + 2)) * diam for sets in R^n."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidDimension(f"n must be a positive integer, got {n!r}")
    if not (diam > 0 and math.isfinite(diam)):
        raise ValueError(f"diam must be a positive finite real, got {diam!r}")
    return math.sqrt(n / (2.0 * n + 2.0)) * diam


def _coerce_points(points) -> np.ndarray:
    pts = [np.asarray(p, dtype=float) for p in points]
    if not pts:
        raise EmptyInput("point list is empty")
    n = pts[0].size
    for p in pts:
        if p.ndim != 1 or p.size != n or not np.all(np.isfinite(p)):
            raise DimensionMismatch(
                "points must share one finite coordinate dimension"
            )
    return np.vstack(pts)


def _support_ball(pts: np.ndarray) -> tuple[np.ndarray, float]:
    """Smallest ball with every given point on its boundary.

    Solves the Gram system for the circumcenter within the affine hull of
    the points; a least-squares fallback covers affinely dependent sets.
    """
    if pts.shape[0] == 1:
        return pts[0].copy(), 0.0
    rel = pts[1:] - pts[0]
    gram = rel @ rel.T
    rhs = 0.5 * np.einsum("ij,ij->i", rel, rel)
    try:
        coef = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        coef, *_ = np.linalg.lstsq(gram, rhs, rcond=None)
    center = pts[0] + coef @ rel
    return center, float(np.linalg.norm(center - pts[0]))


def _welzl(pts: np.ndarray, order: list, end: int, support: tuple):
    """Minimum ball of pts[order[:end]] with ``support`` pinned to the boundary."""
    n = pts.shape[1]
    if support:
        center, radius = _support_ball(pts[list(support)])
    else:
        center, radius = None, -1.0
    best_support = support
    if len(support) == n + 1:
        return center, radius, best_support
    i = 0
    while i < end:
        idx = order[i]
        outside = center is None
        if not outside:
            gap = pts[idx] - center
            outside = gap @ gap > radius * radius * (1.0 + _IN_BALL_RTOL)
        if outside:
            center, radius, best_support = _welzl(pts, order, i, support + (idx,))
            # Move-to-front keeps frequently-binding points early.
            order.pop(i)
            order.insert(0, idx)
        i += 1
    return center, radius, best_support


def exact_meb_support(points) -> tuple[np.ndarray, float, tuple]:
    """Exact minimum enclosing ball plus the boundary support indices."""
    pts = _coerce_points(points)
    count, n = pts.shape
    if n > MEB_MAX_DIM:
        raise CapExceeded(f"exact ball supports dimension <= {MEB_MAX_DIM}, got {n}")
    if count > MEB_MAX_POINTS:
        raise CapExceeded(
            f"exact ball supports <= {MEB_MAX_POINTS} points, got {count}"
        )
    order = list(np.random.default_rng(0).permutation(count))
    center, radius, support = _welzl(pts, order, count, ())
    # Cover every point exactly; the inflation is at rounding scale.
    radius = max(radius, float(np.sqrt(((pts - center) ** 2).sum(axis=1).max())))
    return center, radius, support


def exact_meb(points) -> tuple[np.ndarray, float]:
    """Center and radius of the exact minimum enclosing ball."""
    center, radius, _ = exact_meb_support(points)
    return center, radius


def combined_enclosure(s: Simplex) -> EnclosureReport:
    """Compare the exact ball against the barycentric and Jung bounds.

    Jung's bound is applied with the intrinsic dimension m of the simplex,
    which is valid because the exact ball lives in the affine hull.
    """
    profile = edge_profile(s)
    radius_bc, argmax = barycentric_circumradius(s)
    jung = jung_bound(profile.diam, s.m)
    combined = min(radius_bc, jung)
    center, radius = exact_meb(list(s.vertices))
    if radius > combined + 1e-12 * profile.diam:
        raise ArithmeticError(
            f"exact ball radius {radius!r} exceeds enclosure bound {combined!r}"
        )
    return EnclosureReport(
        barycentric_circumradius=radius_bc,
        jung_bound=jung,
        combined_bound=combined,
        meb_radius=radius,
        meb_center=center,
        barycenter=barycenter(s),
        argmax_vertex=argmax,
    )


def _check_subset_input(points, n: int) -> np.ndarray:
    pts = _coerce_points(points)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidDimension(f"n must be a positive integer, got {n!r}")
    if pts.shape[1] != n:
        raise DimensionMismatch(
            f"points live in R^{pts.shape[1]} but n={n} was requested"
        )
    if pts.shape[0] < n + 1:
        raise TooFewPoints(f"need at least {n + 1} points in R^{n}")
    if pts.shape[0] > SUBSET_MAX_POINTS:
        raise CapExceeded(
            f"subset enumeration capped at {SUBSET_MAX_POINTS} points, "
            f"got {pts.shape[0]}"
        )
    return pts


def set_barycentric_circumradius(points, n: int) -> float:
    """Largest barycentric circumradius over all full-dimensional subsets.

    Enumerates every affinely independent (n+1)-subset of the points; the
    exact enclosing radius of the whole set never exceeds the result.
    """
    pts = _check_subset_input(points, n)
    best = -1.0
    for combo in itertools.combinations(range(pts.shape[0]), n + 1):
        try:
            simplex = validate_simplex(pts[list(combo)])
        except Degenerate:
            continue
        radius, _ = barycentric_circumradius(simplex)
        best = max(best, radius)
    if best < 0.0:
        raise AllDegenerate("every (n+1)-subset failed the rank test")
    return best


def blumenthal_wahlin_check(points, n: int) -> tuple[float, float]:
    """(max exact ball radius over (n+1)-subsets, exact ball radius of all).

    The two radii agree: enclosability of every (n+1)-subset by a given
    radius extends to the whole set, and conversely.
    """
    pts = _check_subset_input(points, n)
    worst = 0.0
    for combo in itertools.combinations(range(pts.shape[0]), n + 1):
        _, radius = exact_meb(pts[list(combo)])
        worst = max(worst, radius)
    _, full = exact_meb(pts)
    return worst, full


def regular_circumradius(m: int, diam: float) -> float:
    """Barycenter-to-vertex distance of a regular m-simplex with edge diam."""
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise InvalidDimension(f"m must be a positive integer, got {m!r}")
    if not (diam > 0 and math.isfinite(diam)):
        raise ValueError(f"diam must be a positive finite real, got {diam!r}")
    return math.sqrt(m / (2.0 * m + 2.0)) * diam


def fermat_sum_regular(s: Simplex) -> tuple[float, float]:
    """(sum of barycenter-to-vertex distances, closed form) for regular input.

    The closed form is sqrt(m (m+1) / 2) times the common edge length.
    """
    profile = require_regular(s)
    center = barycenter(s)
    total = float(np.linalg.norm(s.vertices - center, axis=1).sum())
    return total, math.sqrt(s.m * (s.m + 1) / 2.0) * profile.diam
