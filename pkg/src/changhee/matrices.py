"""Named matrices used by the factorization identities.

Family matrices put the index ``n`` on rows and the order ``k`` on columns.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from changhee import families
from changhee.algebra import ONE, ZERO, Mat, Polynomial
from changhee.combinatorics import binomial, stirling1, stirling2

VARIANTS = ("numbers", "polynomials", "at-negative-x", "at-shifted-x", "at-order")


def _diag(rows, cols, f):
    return Mat.from_function(rows, cols, lambda i, j: f(i) if i == j else ZERO)


def _cfrac(i: int, j: int) -> Fraction:
    if i == 0:
        return Fraction(0)
    return binomial(i - 1, i - j) / factorial(j) if j <= i else Fraction(0)


_STRUCTURAL = {
    "S1": lambda r, c: Mat.from_function(r, c, stirling1),
    "S2": lambda r, c: Mat.from_function(r, c, stirling2),
    "IDENTITY": lambda r, c: _diag(r, c, lambda i: ONE),
    "SIGN_DIAG": lambda r, c: _diag(r, c, lambda i: (-1) ** i),
    "FACT_DIAG": lambda r, c: _diag(r, c, lambda i: Fraction((-1) ** i, factorial(i))),
    "FACT_DIAG_INV": lambda r, c: _diag(r, c, lambda i: (-1) ** i * factorial(i)),
    "CFRAC": lambda r, c: Mat.from_function(r, c, _cfrac),
}

_FAMILY = {
    "CH1": "changhee1",
    "CH2": "changhee2",
    "EULER": "euler",
    "BERNOULLI": "bernoulli",
    "DAEHEE": "daehee",
    "NORLUND2": "norlund2",
}

MATRIX_NAMES = tuple(_STRUCTURAL) + tuple(_FAMILY)


def _family_entry(family: str, n: int, k: int, variant: str) -> Polynomial:
    if variant == "numbers":
        return Polynomial.constant(families.number(family, n, k))
    p = families.value(family, n, k)
    if variant == "polynomials":
        return p
    if variant == "at-negative-x":
        return p.reflect()
    if variant == "at-shifted-x":
        return p.shift(k)
    if variant == "at-order":
        return Polynomial.constant(p(k))
    raise ValueError(f"unknown matrix variant {variant!r}")


def build_matrix(name: str, rows: int, cols: int, variant: str = "numbers") -> Mat:
    """Exact matrix by name.

    ``variant`` only affects family matrices: ``at-negative-x`` substitutes
    ``-x``, ``at-shifted-x`` substitutes ``x + k`` in column ``k``,
    ``at-order`` evaluates column ``k`` at ``x = k``.
    """
    if rows < 1 or cols < 1:
        raise ValueError("matrix dimensions must be positive")
    if variant not in VARIANTS:
        raise ValueError(f"unknown matrix variant {variant!r}")
    if name in _STRUCTURAL:
        return _STRUCTURAL[name](rows, cols)
    if name in _FAMILY:
        family = _FAMILY[name]
        return Mat.from_function(rows, cols, lambda n, k: _family_entry(family, n, k, variant))
    raise KeyError(f"unknown matrix {name!r}")
