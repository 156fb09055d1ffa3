"""Seeded random simplex generation for tests and the CLI corpus command."""

from __future__ import annotations

import numpy as np

from .core import Simplex, validate_simplex
from .errors import Degenerate, InvalidDimension


def random_simplex(rng: np.random.Generator, m: int, n: int, coord_range: float = 10.0) -> Simplex:
    """Uniformly sampled valid m-simplex in R^n with coordinates in [-r, r].

    Degenerate draws are rejected and resampled; at these sizes rejection
    is vanishingly rare.
    """
    if m < 1:
        raise InvalidDimension(f"m must be a positive integer, got {m!r}")
    if n < m:
        raise InvalidDimension(f"n must be an integer >= m, got {n!r}")
    for _ in range(64):
        coords = rng.uniform(-coord_range, coord_range, size=(m + 1, n))
        try:
            return validate_simplex(coords)
        except Degenerate:
            continue
    raise Degenerate("could not sample a nondegenerate simplex in 64 tries")


def generate(
    seed: int,
    count: int,
    m: int | None = None,
    n: int | None = None,
    m_max: int = 8,
    n_max: int = 12,
    coord_range: float = 10.0,
) -> list:
    """Deterministic list of random simplices for a given seed.

    When m or n is None each draw picks its own value, with 1 <= m <= m_max
    and m <= n <= n_max.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        mi = int(m) if m is not None else int(rng.integers(1, m_max + 1))
        ni = int(n) if n is not None else int(rng.integers(mi, n_max + 1))
        if ni < mi:
            raise InvalidDimension(f"n={ni} is incompatible with m={mi}")
        out.append(random_simplex(rng, mi, ni, coord_range))
    return out
