"""Simplex construction, validation, and edge-length bookkeeping.

An m-simplex is an ordered list of m+1 affinely independent vertices in
R^n with n >= m.  Vertex order is preserved everywhere: faces, children
of a bisection, and reports all index vertices the way the caller
supplied them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    Degenerate,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDimension,
    InvalidPoint,
    NotFullDimensional,
    NotRegular,
    TooFewPoints,
)

# Smallest singular value of the difference matrix must exceed this
# multiple of max(largest singular value, 1) for the rank test to pass.
RANK_RTOL = 1e-9

# Relative edge spread (diam - shor) / diam below which a simplex is
# treated as regular.
REGULAR_RTOL = 1e-9


def as_point(coords) -> np.ndarray:
    """Coerce to a finite 1-D float64 array with at least one coordinate."""
    p = np.asarray(coords, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise InvalidPoint("a point must be a non-empty 1-D coordinate list")
    if not np.all(np.isfinite(p)):
        raise InvalidPoint("point coordinates must be finite")
    return p


@dataclass(frozen=True)
class Simplex:
    """Ordered vertices of a validated m-simplex, stored as an (m+1, n) array."""

    vertices: np.ndarray

    def __post_init__(self):
        arr = np.array(self.vertices, dtype=float)
        arr.flags.writeable = False
        object.__setattr__(self, "vertices", arr)

    @property
    def m(self) -> int:
        return self.vertices.shape[0] - 1

    @property
    def n(self) -> int:
        return self.vertices.shape[1]

    def vertex(self, i: int) -> np.ndarray:
        check_index(self, i)
        return self.vertices[i]


@dataclass(frozen=True)
class EdgeProfile:
    """All pairwise edge lengths of a simplex plus the extremal edges.

    ``lengths`` maps index pairs (i, j) with i < j to Euclidean lengths.
    Ties for the longest or shortest edge resolve to the lexicographically
    smallest index pair so downstream consumers are deterministic.
    """

    lengths: dict = field(repr=False)
    diam: float
    shor: float
    diam_edge: tuple
    shor_edge: tuple


def check_index(s: Simplex, i: int) -> None:
    if not isinstance(i, (int, np.integer)) or not 0 <= i <= s.m:
        raise IndexOutOfRange(f"vertex index {i!r} outside 0..{s.m}")


def validate_simplex(vertices) -> Simplex:
    """Build a Simplex after checking shape, finiteness, and affine rank.

    Raises TooFewPoints for fewer than two vertices, DimensionMismatch for
    mixed coordinate dimensions, and Degenerate when the smallest singular
    value of the difference matrix falls below the rank tolerance.
    """
    pts = [as_point(v) for v in vertices]
    if len(pts) < 2:
        raise TooFewPoints("a simplex needs at least 2 vertices")
    n = pts[0].size
    for p in pts[1:]:
        if p.size != n:
            raise DimensionMismatch(
                f"vertices mix coordinate dimensions {n} and {p.size}"
            )
    arr = np.vstack(pts)
    m = len(pts) - 1
    diffs = arr[1:] - arr[0]
    if n < m:
        raise Degenerate(
            f"{m + 1} points in R^{n} cannot be affinely independent"
        )
    sv = np.linalg.svd(diffs, compute_uv=False)
    if sv[-1] <= RANK_RTOL * max(sv[0], 1.0):
        raise Degenerate(
            "vertices are affinely dependent within tolerance "
            f"(singular values {sv[0]:.3e} .. {sv[-1]:.3e})"
        )
    return Simplex(arr)


def edge_profile(s: Simplex) -> EdgeProfile:
    """Compute every edge length and the extremal edges of a simplex."""
    v = s.vertices
    gaps = v[:, None, :] - v[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", gaps, gaps))
    lengths = {}
    diam_edge = shor_edge = (0, 1)
    diam = shor = dist[0, 1]
    for i in range(s.m + 1):
        for j in range(i + 1, s.m + 1):
            d = float(dist[i, j])
            lengths[(i, j)] = d
            if d > diam:
                diam, diam_edge = d, (i, j)
            if d < shor:
                shor, shor_edge = d, (i, j)
    return EdgeProfile(lengths, float(diam), float(shor), diam_edge, shor_edge)


def squared_distance_matrix(s: Simplex) -> np.ndarray:
    """Symmetric (m+1, m+1) matrix of squared vertex distances."""
    v = s.vertices
    gaps = v[:, None, :] - v[None, :, :]
    return np.einsum("ijk,ijk->ij", gaps, gaps)


def barycenter(s: Simplex) -> np.ndarray:
    """Equal-weight average of all vertices."""
    return s.vertices.mean(axis=0)


def face_centroid(s: Simplex, i: int) -> np.ndarray:
    """Barycenter of the face opposite vertex i."""
    check_index(s, i)
    keep = [k for k in range(s.m + 1) if k != i]
    return s.vertices[keep].mean(axis=0)


def sub_face(s: Simplex, drop) -> Simplex:
    """Face obtained by removing the vertices whose indices are in ``drop``.

    The surviving vertices keep their original relative order.
    """
    dropped = set()
    for i in drop:
        check_index(s, i)
        dropped.add(int(i))
    keep = [k for k in range(s.m + 1) if k not in dropped]
    if len(keep) < 2:
        raise TooFewPoints("a face needs at least 2 surviving vertices")
    return validate_simplex(s.vertices[keep])


def regular_simplex(m: int, n: int, diam: float) -> Simplex:
    """Regular m-simplex with edge length ``diam`` embedded in R^n.

    The m+1 scaled standard basis vectors of R^(m+1) are pairwise
    equidistant; they are re-expressed in an orthonormal basis of their
    affine hull (coordinates in R^m) and zero-padded to R^n.  The result
    is centered at the origin.
    """
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise InvalidDimension(f"m must be a positive integer, got {m!r}")
    if not isinstance(n, (int, np.integer)) or n < m:
        raise InvalidDimension(f"n must be an integer >= m, got {n!r}")
    if not (isinstance(diam, (int, float, np.floating)) and diam > 0 and math.isfinite(diam)):
        raise InvalidDimension(f"diam must be a positive finite real, got {diam!r}")
    scaled = (float(diam) / math.sqrt(2.0)) * np.eye(m + 1)
    centered = scaled - scaled.mean(axis=0)
    # Rows of `centered` span an m-dimensional subspace; the first m right
    # singular vectors form an orthonormal basis of it.
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    coords = centered @ vt[:m].T
    out = np.zeros((m + 1, n))
    out[:, :m] = coords
    return Simplex(out)


def edge_spread(profile: EdgeProfile) -> float:
    """Relative gap between the longest and shortest edge."""
    return (profile.diam - profile.shor) / profile.diam


def require_regular(s: Simplex, rtol: float = REGULAR_RTOL) -> EdgeProfile:
    """Return the edge profile, raising NotRegular on unequal edges."""
    profile = edge_profile(s)
    if edge_spread(profile) > rtol:
        raise NotRegular(
            f"edge spread {edge_spread(profile):.3e} exceeds {rtol:.1e}"
        )
    return profile


def volume(s: Simplex) -> float:
    """Euclidean volume, defined only for full-dimensional simplices."""
    if s.m != s.n:
        raise NotFullDimensional(f"volume needs m == n, got m={s.m}, n={s.n}")
    diffs = s.vertices[1:] - s.vertices[0]
    return abs(float(np.linalg.det(diffs))) / math.factorial(s.m)
