"""Closed-form and recurrence evaluation of every number/polynomial family.

Nothing here touches :mod:`changhee.series`.  Order 0 follows the generating
functions: ``changhee1(n, 0) = (x)_n``, ``euler(n, 0) = x^n``,
``daehee(n, 0) = [n == 0]``.

All functions are memoized; returned values are immutable.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from changhee.algebra import ZERO, Polynomial, falling_poly, poly_binom
from changhee.combinatorics import binomial, stirling1, stirling2

FAMILY_NAMES = ("bernoulli", "euler", "daehee", "changhee1", "changhee2", "norlund2")

_HALF = Fraction(-1, 2)


def _check(n: int, order: int = 0) -> None:
    if n < 0 or order < 0:
        raise ValueError("index and order must be nonnegative")


@lru_cache(maxsize=None)
def _euler_inner(i: int, order: int) -> Fraction:
    # j! is required: (e^t - 1)^j = j! sum_i s2(i, j) t^i / i!
    return sum(
        (_HALF ** j * factorial(j) * binomial(order + j - 1, j) * stirling2(i, j) for j in range(i + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def euler(n: int, order: int) -> Polynomial:
    """Euler polynomial of the given order as a double sum over s2 (Luo's form)."""
    _check(n, order)
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        coeffs[n - i] = comb(n, i) * _euler_inner(i, order)
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def bernoulli_number1(n: int) -> Fraction:
    """Order-1 Bernoulli numbers (B_1 = -1/2) from sum_{j<n} C(n,j) B_j = 0."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, j) * bernoulli_number1(j) for j in range(n)), Fraction(0)) / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_number(n: int, order: int) -> Fraction:
    """Order-alpha numbers as the alpha-fold binomial convolution of order 1."""
    _check(n, order)
    if order == 0:
        return Fraction(int(n == 0))
    if order == 1:
        return bernoulli_number1(n)
    return sum(
        (comb(n, j) * bernoulli_number1(j) * bernoulli_number(n - j, order - 1) for j in range(n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def bernoulli(n: int, order: int) -> Polynomial:
    _check(n, order)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * bernoulli_number(j, order)
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def changhee1(n: int, k: int) -> Polynomial:
    """First-kind Changhee polynomial of order k:
    sum_i (-1)^i n!/2^i C(k+i-1, i) C(x, n-i)."""
    _check(n, k)
    out = ZERO
    for i in range(n + 1):
        c = (-1) ** i * Fraction(factorial(n), 2 ** i) * binomial(k + i - 1, i)
        if c:
            out = out + poly_binom(n - i) * c
    return out


@lru_cache(maxsize=None)
def changhee1_number_recurrence(n: int) -> Fraction:
    """Order-1 Changhee numbers from 2 Ch_n + n Ch_{n-1} = 0, Ch_0 = 1."""
    _check(n)
    value = Fraction(1)
    for m in range(1, n + 1):
        value = -m * value / 2
    return value


@lru_cache(maxsize=None)
def changhee2(n: int, k: int) -> Polynomial:
    """Second-kind Changhee polynomial: sum_l (-1)^l s1(n,l) E_l^(k)(-x)."""
    _check(n, k)
    out = ZERO
    for l in range(n + 1):
        s = stirling1(n, l)
        if s:
            out = out + euler(l, k).reflect() * ((-1) ** l * s)
    return out


@lru_cache(maxsize=None)
def changhee2_number(n: int, k: int) -> Fraction:
    """Second-kind Changhee number by the direct double binomial sum."""
    _check(n, k)
    total = sum(
        (Fraction((-1) ** i, 2 ** i) * binomial(k + i - 1, i) * binomial(k, n - i) for i in range(n + 1)),
        Fraction(0),
    )
    return factorial(n) * total


@lru_cache(maxsize=None)
def daehee(n: int, k: int) -> Fraction:
    """Daehee number of order k: s1(n+k, k) / C(n+k, k)."""
    _check(n, k)
    return Fraction(stirling1(n + k, k), comb(n + k, k))


@lru_cache(maxsize=None)
def daehee_poly(n: int, k: int) -> Polynomial:
    """Binomial convolution of Daehee numbers with falling factorials."""
    _check(n, k)
    out = ZERO
    for i in range(n + 1):
        d = daehee(i, k)
        if d:
            out = out + falling_poly(n - i) * (comb(n, i) * d)
    return out


def norlund2(n: int) -> Fraction:
    """Second-kind Norlund number with upper index -1."""
    _check(n)
    return Fraction((-1) ** n, n + 1)


def value(family: str, n: int, k: int) -> Polynomial:
    """Polynomial value of a named family (``norlund2`` ignores ``k``)."""
    if family == "norlund2":
        return Polynomial.constant(norlund2(n))
    if family == "daehee":
        return daehee_poly(n, k)
    try:
        fn = _POLY[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}") from None
    return fn(n, k)


def number(family: str, n: int, k: int) -> Fraction:
    """The number (x = 0 specialization) of a named family."""
    if family == "norlund2":
        return norlund2(n)
    if family == "daehee":
        return daehee(n, k)
    if family == "bernoulli":
        return bernoulli_number(n, k)
    return value(family, n, k).constant_term()


_POLY = {
    "bernoulli": bernoulli,
    "euler": euler,
    "changhee1": changhee1,
    "changhee2": changhee2,
}

__all__ = [
    "FAMILY_NAMES", "bernoulli", "bernoulli_number", "changhee1",
    "changhee1_number_recurrence", "changhee2", "changhee2_number", "daehee",
    "daehee_poly", "euler", "norlund2", "number", "value",
]
