"""Exact Tukey depth and Tverberg-with-tolerance certificates.

Coordinates may be ints, Fractions, or strings such as "-3/7" or "0.25";
floats are converted through their shortest decimal repr. Rational values in
results come back as fractions.Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _core
from ._core import BudgetExceeded, InputError

__all__ = [
    "BudgetExceeded",
    "InputError",
    "depth",
    "block_depth",
    "depth_oracle",
    "origin_in_hull",
    "hulls_intersect",
    "tolerance",
    "colored_tolerance",
    "reay_tolerance",
    "certified_partition",
    "certified_colored_partition",
    "random_partition",
    "tolerance_from_n",
    "n_for_tolerance",
    "n_for_probability",
    "colored_tolerance_from_n",
    "reay_tolerance_from_m",
    "carath_depth_bound",
    "carath_guaranteed_depth",
    "fixed_point_probability",
    "derangements",
]

DEFAULT_BUDGET = _core.DEFAULT_BUDGET


def _coord(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _rows(points: Iterable[Sequence]) -> tuple[list[list[str]], int]:
    rows = [[_coord(x) for x in p] for p in points]
    if not rows:
        raise ValueError("need at least one point")
    return rows, len(rows[0])


def _decode(obj):
    if isinstance(obj, str) and "/" in obj:
        num, den = obj.split("/")
        return Fraction(int(num), int(den))
    if isinstance(obj, list):
        return [_decode(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _decode(v) for k, v in obj.items()}
    return obj


def _load(text: Optional[str]):
    return None if text is None else _decode(json.loads(text))


def depth(points, center=None) -> dict:
    rows, dim = _rows(points)
    c = [_coord(x) for x in center] if center is not None else ["0"] * dim
    return _load(_core.depth(rows, dim, c))


def block_depth(points, blocks, center=None) -> dict:
    rows, dim = _rows(points)
    c = [_coord(x) for x in center] if center is not None else ["0"] * dim
    return _load(_core.block_depth(rows, dim, [list(b) for b in blocks], c))


def depth_oracle(points, center=None, budget: int = DEFAULT_BUDGET) -> int:
    rows, dim = _rows(points)
    c = [_coord(x) for x in center] if center is not None else ["0"] * dim
    return _core.depth_oracle(rows, dim, c, budget)


def origin_in_hull(points):
    """Convex coefficients [(index, Fraction), ...] writing 0, or None."""
    rows, dim = _rows(points)
    got = _load(_core.origin_in_hull(rows, dim))
    return None if got is None else [(i, a) for i, a in got]


def hulls_intersect(points, parts):
    """A common point of the parts' hulls, or None."""
    rows, dim = _rows(points)
    return _load(_core.hulls_intersect(rows, dim, [list(p) for p in parts]))


def tolerance(points, labels, r: Optional[int] = None, method: str = "lifted", budget: int = DEFAULT_BUDGET) -> dict:
    rows, dim = _rows(points)
    labels = list(labels)
    r = r if r is not None else max(labels) + 1
    return _load(_core.tolerance(rows, dim, r, labels, method, budget))


def colored_tolerance(points, colors, labels, r: int, method: str = "lifted", budget: int = DEFAULT_BUDGET) -> dict:
    rows, dim = _rows(points)
    return _load(_core.colored_tolerance(rows, dim, list(colors), r, list(labels), method, budget))


def reay_tolerance(points, labels, r: int, k: int, method: str = "lifted", budget: int = DEFAULT_BUDGET) -> dict:
    rows, dim = _rows(points)
    return _load(_core.reay_tolerance(rows, dim, r, list(labels), k, method, budget))


def certified_partition(points, r: int, t: int, seed: int = 0, max_trials: int = 1000):
    rows, dim = _rows(points)
    return _load(_core.certified_partition(rows, dim, r, t, seed, max_trials))


def certified_colored_partition(points, colors, r: int, t: int, seed: int = 0, max_trials: int = 1000):
    rows, dim = _rows(points)
    return _load(_core.certified_colored_partition(rows, dim, list(colors), r, t, seed, max_trials))


def random_partition(n: int, r: int, seed: int) -> list[int]:
    return _core.random_partition(n, r, seed)


tolerance_from_n = _core.tolerance_from_n
n_for_tolerance = _core.n_for_tolerance
n_for_probability = _core.n_for_probability
colored_tolerance_from_n = _core.colored_tolerance_from_n
reay_tolerance_from_m = _core.reay_tolerance_from_m
carath_depth_bound = _core.carath_depth_bound
carath_guaranteed_depth = _core.carath_guaranteed_depth


def fixed_point_probability(r: int) -> Fraction:
    return Fraction(_core.fixed_point_probability(r))


def derangements(r: int) -> int:
    return int(_core.derangements(r))
