"""Shared corpus builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from simplexgeo.corpus import generate


@pytest.fixture(scope="session")
def mixed_corpus():
    """1000 random simplices, 1 <= m <= 8, m <= n <= 12, coords in [-10, 10]."""
    return generate(20260822, 1000)


@pytest.fixture(scope="session")
def fulldim_corpus():
    """500 random full-dimensional simplices with n <= 6."""
    rng = np.random.default_rng(314159)
    from simplexgeo.corpus import random_simplex

    out = []
    for _ in range(500):
        n = int(rng.integers(1, 7))
        out.append(random_simplex(rng, n, n))
    return out


def random_rigid_motion(rng: np.random.Generator, n: int):
    """Random orthogonal matrix and translation vector."""
    gauss = rng.normal(size=(n, n))
    q, r = np.linalg.qr(gauss)
    q = q * np.sign(np.diag(r))
    shift = rng.uniform(-5.0, 5.0, size=n)
    return q, shift


def brute_force_meb(points) -> float:
    """Smallest enclosing radius by exhaustive support-subset enumeration.

    For every subset of up to n+1 points, the circumcenter within the
    subset's affine hull comes from the min-norm solution of the classic
    equidistance equations; the answer is the smallest candidate ball that
    covers everything.  Independent of the incremental search under test.
    """
    pts = np.asarray(points, dtype=float)
    count, n = pts.shape
    best = np.inf
    for size in range(1, min(count, n + 1) + 1):
        for combo in itertools.combinations(range(count), size):
            sub = pts[list(combo)]
            if size == 1:
                center = sub[0]
            else:
                rows = 2.0 * (sub[1:] - sub[0])
                rhs = np.einsum("ij,ij->i", sub[1:] - sub[0], sub[1:] - sub[0])
                shift, *_ = np.linalg.lstsq(rows, rhs, rcond=None)
                center = sub[0] + shift
            radius = float(np.linalg.norm(pts[list(combo)] - center, axis=1).max())
            if float(np.linalg.norm(pts - center, axis=1).max()) <= radius * (1 + 1e-9):
                best = min(best, radius)
    return best
