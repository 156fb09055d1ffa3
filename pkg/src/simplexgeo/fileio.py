"""JSON input formats: a single simplex, or a loose point set.

Both formats are an object with one key ("vertices" or "points") whose
value is a list of equal-length coordinate lists.  Non-finite numbers,
including the NaN/Infinity extensions some JSON writers emit, are
rejected at parse time.
"""

from __future__ import annotations

import json

import numpy as np

from .core import Simplex, validate_simplex
from .errors import ParseError


def _reject_constant(token: str):
    raise ParseError(f"non-finite number {token!r} is not allowed")


def _coordinate_rows(doc, key: str) -> np.ndarray:
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f'top-level object must contain the key "{key}"')
    rows = doc[key]
    if not isinstance(rows, list) or not rows:
        raise ParseError(f'"{key}" must be a non-empty list of coordinate lists')
    width = None
    for row in rows:
        if not isinstance(row, list) or not row:
            raise ParseError("every entry must be a non-empty coordinate list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError("coordinate lists must share one length")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ParseError(f"coordinate {x!r} is not a number")
    arr = np.asarray(rows, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ParseError("coordinates must be finite")
    return arr


def parse_simplex_json(text: str) -> Simplex:
    """Parse a {"vertices": [[...], ...]} document into a validated simplex."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return validate_simplex(_coordinate_rows(doc, "vertices"))


def parse_points_json(text: str) -> np.ndarray:
    """Parse a {"points": [[...], ...]} document into an (N, n) array."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return _coordinate_rows(doc, "points")


def load_simplex(path) -> Simplex:
    with open(path, encoding="utf-8") as fh:
        return parse_simplex_json(fh.read())


def load_points(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_points_json(fh.read())
