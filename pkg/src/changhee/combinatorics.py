"""Stirling numbers, generalized binomials and falling factorials.

Stirling numbers come from the triangular recurrences, never from generating
functions; the series oracle uses the generating-function route so the two
stay independent.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from changhee import kernels
from changhee.algebra import Polynomial, Scalar


class StirlingTable:
    """Immutable triangular table; ``value(n, l)`` is 0 outside ``0 <= l <= n``."""

    __slots__ = ("kind", "n_max", "values")

    def __init__(self, kind: str, n_max: int):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self.n_max = n_max
        self.values = tuple(kernels.stirling_table(1 if kind == "first" else 2, n_max))

    def value(self, n: int, l: int) -> int:
        if n < 0 or l < 0:
            raise ValueError("Stirling indices must be nonnegative")
        if l > n:
            return 0
        return self.values[n][l]

    def row_polynomial(self, n: int) -> Polynomial:
        return Polynomial(self.values[n])


_tables: dict = {}
_lock = threading.Lock()


def table(kind: str, n: int) -> StirlingTable:
    """Cached table covering at least row ``n``; grows by rebuilding."""
    t = _tables.get(kind)
    if t is None or t.n_max < n:
        with _lock:
            t = _tables.get(kind)
            if t is None or t.n_max < n:
                size = max(n, 2 * t.n_max if t else 16)
                t = StirlingTable(kind, size)
                _tables[kind] = t
    return t


def stirling1(n: int, l: int) -> int:
    """Signed Stirling number of the first kind: coefficient of x^l in (x)_n."""
    if n < 0 or l < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if l > n:
        return 0
    return table("first", n).value(n, l)


def stirling2(n: int, l: int) -> int:
    if n < 0 or l < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if l > n:
        return 0
    return table("second", n).value(n, l)


def falling_factorial(a: Scalar, n: int) -> Fraction:
    """(a)_n = a(a-1)...(a-n+1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


def binomial(a: Scalar, j: int) -> Fraction:
    """Generalized binomial coefficient C(a, j) for rational ``a``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if isinstance(a, int) and 0 <= a < j:
        return Fraction(0)
    return falling_factorial(a, j) / factorial(j)
