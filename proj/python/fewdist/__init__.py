"""Exact set algebra and audits for distinct distances on Cartesian products.

Sets are iterables of ints, Fractions or "p/q" strings; results come back as
sorted lists of ints and Fractions.  Audit reports are plain dicts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Union

from . import _core
from ._core import FeasibilityError

Number = Union[int, Fraction, str]

__all__ = [
    "FeasibilityError",
    "sumset",
    "difference_set",
    "product_set",
    "ratio_set",
    "distance_set",
    "product_distance_set",
    "slope_set",
    "rich_line",
    "verify",
    "scan",
    "search",
    "run_cli",
]


def _enc(x: Number) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not set elements")
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if isinstance(x, str):
        return x
    raise TypeError(f"unsupported element {x!r}")


def _dec(s: str) -> Union[int, Fraction]:
    f = Fraction(s)
    return f.numerator if f.denominator == 1 else f


def _set(xs: Iterable[Number]) -> list[str]:
    return [_enc(x) for x in xs]


def _points(ps) -> list[tuple[str, str]]:
    return [(_enc(x), _enc(y)) for x, y in ps]


def sumset(x, y, **limits):
    return [_dec(s) for s in _core.sumset(_set(x), _set(y), **limits)]


def difference_set(x, y, **limits):
    return [_dec(s) for s in _core.difference_set(_set(x), _set(y), **limits)]


def product_set(x, y, **limits):
    return [_dec(s) for s in _core.product_set(_set(x), _set(y), **limits)]


def ratio_set(x, y, **limits):
    return [_dec(s) for s in _core.ratio_set(_set(x), _set(y), **limits)]


def distance_set(points, **limits):
    """Squared distances of a planar point set, including 0."""
    return [_dec(s) for s in _core.distance_set(_points(points), **limits)]


def product_distance_set(a, **limits):
    """Squared distances of A x A, computed as (A-A)^2 + (A-A)^2."""
    return [_dec(s) for s in _core.product_distance_set(_set(a), **limits)]


def slope_set(points, **limits):
    """Finite slopes, plus float('inf') when a vertical pair exists."""
    finite, vertical = _core.slope_set(_points(points), **limits)
    out: list = [_dec(s) for s in finite]
    if vertical:
        out.append(float("inf"))
    return out


def rich_line(a):
    """(d, points) for the richest line x - y = d of A x A, d != 0."""
    d, pts = _core.rich_line(_set(a))
    return _dec(d), [(_dec(x), _dec(y)) for x, y in pts]


def verify(statement: str, a=None, *, points=None, m: int = 1, n: int = 1, full_chain: bool = False, **limits) -> dict:
    """Audit one statement on a set (or on a point set for ungar/solymosi)."""
    if points is not None:
        return json.loads(_core.verify_points(statement, _points(points), **limits))
    return json.loads(_core.verify_set(statement, _set(a), m=m, n=n, full_chain=full_chain, **limits))


def scan(families: Iterable[str], sizes: Iterable[int]) -> list[dict]:
    return [json.loads(r) for r in _core.scan(list(families), list(sizes))]


def search(
    *,
    seed: int,
    n: int = 8,
    universe: int = 1000,
    objective: str = "min-distances",
    iterations: int = 50_000,
    temperature: float = 2.0,
    cooling: float = 0.999,
    restarts: int = 4,
    trace_every: int = 1000,
) -> dict:
    """Simulated annealing; a pure function of its arguments."""
    return json.loads(
        _core.search(n, universe, objective, iterations, temperature, cooling, seed, restarts, trace_every)
    )


def run_cli(*args: str) -> tuple[int, str, str]:
    """Run the command-line front end in-process: (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
