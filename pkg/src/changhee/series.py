"""Truncated power series in ``t`` with polynomial-in-``x`` coefficients.

This module is the independent witness for every family: it expands the
defining generating functions directly and never calls :mod:`changhee.families`.
``(1+t)^x`` enters only as ``exp(x * log(1+t))``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from changhee.algebra import ONE, X, ZERO, Polynomial, Scalar, as_poly


class SeriesDomainError(ValueError):
    """Operation undefined for the given constant term."""


class Series:
    """Coefficients of ``t^0 .. t^trunc``; everything beyond is unknown."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Sequence, trunc: int):
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        cs = [as_poly(c) for c in coeffs[: trunc + 1]]
        cs.extend([ZERO] * (trunc + 1 - len(cs)))
        self.trunc = trunc
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, trunc: int) -> "Series":
        return cls([c], trunc)

    @classmethod
    def t(cls, trunc: int) -> "Series":
        return cls([0, 1], trunc)

    def truncate(self, n: int) -> "Series":
        return Series(self.coeffs, min(n, self.trunc))

    def __add__(self, other):
        other = _coerce(other, self.trunc)
        n = min(self.trunc, other.trunc)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-_coerce(other, self.trunc))

    def __rsub__(self, other):
        return _coerce(other, self.trunc) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return Series([c * other for c in self.coeffs], self.trunc)
        if isinstance(other, Series):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        return series_ipow(self, e)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}], trunc={self.trunc})"


def _coerce(other, trunc: int) -> Series:
    if isinstance(other, Series):
        return other
    if isinstance(other, (int, Fraction, Polynomial)):
        return Series.constant(other, trunc)
    raise TypeError(f"cannot combine Series with {type(other).__name__}")


def series_mul(a: Series, b: Series) -> Series:
    n = min(a.trunc, b.trunc)
    out = []
    for k in range(n + 1):
        acc = ZERO
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x.coeffs and y.coeffs:
                acc = acc + x * y
        out.append(acc)
    return Series(out, n)


def _unit_constant(a: Series) -> Fraction:
    c = a.coeffs[0]
    if c.is_zero() or not c.is_constant():
        raise SeriesDomainError("series inverse needs a nonzero rational constant term")
    return c.coeffs[0]


def series_inv(a: Series) -> Series:
    inv_c = 1 / _unit_constant(a)
    out = [ONE * inv_c]
    for n in range(1, a.trunc + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a.coeffs[k].coeffs:
                acc = acc + a.coeffs[k] * out[n - k]
        out.append(acc * -inv_c)
    return Series(out, a.trunc)


def series_exp(a: Series) -> Series:
    """``exp(a)`` for ``a`` with zero constant term, via n*b_n = sum k*a_k*b_{n-k}."""
    if not a.coeffs[0].is_zero():
        raise SeriesDomainError("series exp needs a zero constant term")
    out = [ONE]
    for n in range(1, a.trunc + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a.coeffs[k].coeffs:
                acc = acc + a.coeffs[k] * out[n - k] * k
        out.append(acc / n)
    return Series(out, a.trunc)


def series_log1p(N: int) -> Series:
    """``log(1+t)`` truncated at ``t^N``."""
    return Series([0] + [Fraction((-1) ** (m + 1), m) for m in range(1, N + 1)], N)


def series_ipow(a: Series, e: int) -> Series:
    if e < 0:
        return series_ipow(series_inv(a), -e)
    out = Series.constant(1, a.trunc)
    base = a
    while e:
        if e & 1:
            out = series_mul(out, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return out


def shift_down(a: Series) -> Series:
    """Divide by ``t``; requires a zero constant term and loses one order."""
    if not a.coeffs[0].is_zero():
        raise SeriesDomainError("cannot divide by t: nonzero constant term")
    if a.trunc == 0:
        raise SeriesDomainError("cannot divide a trunc-0 series by t")
    return Series(a.coeffs[1:], a.trunc - 1)


def egf_coeff(a: Series, n: int) -> Polynomial:
    """``n!`` times the coefficient of ``t^n``."""
    if n < 0 or n > a.trunc:
        raise IndexError(f"coefficient {n} outside truncation {a.trunc}")
    return a.coeffs[n] * factorial(n)


def exp_t(N: int, scale: Scalar | Polynomial = 1) -> Series:
    """``exp(scale * t)``."""
    return series_exp(Series.t(N) * scale)


def one_plus_t_pow_x(N: int, x: Polynomial = X) -> Series:
    """``(1+t)^x = exp(x log(1+t))`` with ``x`` any polynomial in the indeterminate."""
    return series_exp(series_log1p(N) * x)


FAMILIES = ("bernoulli", "euler", "daehee", "changhee1", "changhee2", "norlund2")


@lru_cache(maxsize=512)
def family_gf(family: str, order: int, with_x: bool, N: int) -> Series:
    """Exact truncated generating function of a named family.

    ``with_x=False`` drops the x-dependent factor (numbers); for ``changhee2``
    the ``(1+t)^k`` factor is part of the numbers and stays.  ``norlund2`` is
    an ordinary (not exponential) generating function and ignores ``order``.
    """
    if order < 0 or N < 0:
        raise ValueError("order and N must be nonnegative")
    # one spare order for the series that lose a term in the shift by t
    M = N + 1
    if family == "bernoulli":
        core = series_ipow(shift_down(exp_t(M) - 1), -order)
        xpart = exp_t(M, X) if with_x else None
    elif family == "euler":
        core = series_ipow(series_inv((exp_t(M) + 1) / 2), order)
        xpart = exp_t(M, X) if with_x else None
    elif family == "daehee":
        core = series_ipow(shift_down(series_log1p(M)), order)
        xpart = one_plus_t_pow_x(M) if with_x else None
    elif family == "changhee1":
        core = series_ipow(series_inv(Series([1, Fraction(1, 2)], M)), order)
        xpart = one_plus_t_pow_x(M) if with_x else None
    elif family == "changhee2":
        core = series_ipow(series_inv(Series([1, Fraction(1, 2)], M)), order)
        core = series_mul(core, series_ipow(Series([1, 1], M), order))
        xpart = one_plus_t_pow_x(M) if with_x else None
    elif family == "norlund2":
        core = shift_down(series_log1p(M))
        xpart = None
    else:
        raise KeyError(f"unknown family {family!r}")
    out = core if xpart is None else series_mul(core, xpart)
    return out.truncate(N)
