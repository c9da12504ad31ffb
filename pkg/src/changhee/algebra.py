"""Exact scalars, univariate polynomials in ``x`` and polynomial matrices.

Scalars are :class:`fractions.Fraction` throughout.  Polynomials and matrices
are immutable value objects; all operations return new instances.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from changhee import kernels

Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Matrix operands have incompatible shapes."""


def format_rational(q: Scalar) -> str:
    """Canonical ``p/q`` text (``p`` alone when the denominator is 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a canonical rational: {text!r}")
    value = Fraction(text)
    return value


def _trim(coeffs: Iterable[Scalar]) -> tuple:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Dense polynomial over the rationals; ``coeffs[i]`` multiplies ``x**i``.

    The zero polynomial stores no coefficients and has degree ``None``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = cls.__new__(cls)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        p.coeffs = coeffs
        p._hash = None
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        if len(other.coeffs) == 1:
            return self * other.coeffs[0]
        if len(self.coeffs) == 1:
            return other * self.coeffs[0]
        return Polynomial._raw(kernels.rat_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # substitution ---------------------------------------------------------

    def __call__(self, v: Scalar) -> Fraction:
        return poly_eval(self, v)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """``p(inner(x))`` by Horner's scheme."""
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, c: Scalar) -> "Polynomial":
        """``p(x + c)``."""
        return self.compose(Polynomial((c, 1)))

    def scale(self, c: Scalar) -> "Polynomial":
        """``p(c*x)``."""
        c = Fraction(c)
        out, power = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return Polynomial._raw(tuple(out))

    def reflect(self) -> "Polynomial":
        """``p(-x)``."""
        return Polynomial._raw(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    # text -------------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending powers, e.g. ``x^3 - 3/2*x^2 + 1/4``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"(\d+(?:/\d+)?)?(\*)?(x(?:\^(\d+))?)?")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`.

    Whitespace is ignored, so ``x^2-2*x+1/2`` parses as well.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        m = _TERM.match(s, pos)
        coef_txt, star, mono, exp_txt = m.groups()
        if m.end() == pos or (star and not (coef_txt and mono)) or (coef_txt is None and mono is None):
            raise ValueError(f"cannot parse polynomial: {text!r}")
        if coef_txt and mono and not star:
            raise ValueError(f"missing '*' in polynomial: {text!r}")
        coef = Fraction(coef_txt) if coef_txt else Fraction(1)
        power = 0 if mono is None else (int(exp_txt) if exp_txt else 1)
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial: {text!r}")
    top = max(coeffs)
    return Polynomial(coeffs.get(i, 0) for i in range(top + 1))


def poly_binom(j: int) -> Polynomial:
    """``C(x, j) = x(x-1)...(x-j+1)/j!`` as a polynomial in ``x``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return falling_poly(j) / factorial(j)


def falling_poly(n: int) -> Polynomial:
    """``(x)_n`` expanded."""
    out = ONE
    for i in range(n):
        out = out * Polynomial((-i, 1))
    return out


def poly_eval(p: Polynomial, v: Scalar) -> Fraction:
    return kernels.rat_horner(p.coeffs, v)


def as_poly(v) -> Polynomial:
    return v if isinstance(v, Polynomial) else Polynomial.constant(v)


class Mat:
    """Rectangular matrix with :class:`Polynomial` entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(as_poly(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def from_function(cls, rows: int, cols: int, f) -> "Mat":
        return cls(rows, cols, [f(i, j) for i in range(rows) for j in range(cols)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.from_function(n, n, lambda i, j: ONE if i == j else ZERO)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, f) -> "Mat":
        return Mat(self.rows, self.cols, [f(e) for e in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            acc = ZERO
            for t, x in enumerate(arow):
                if x.is_zero():
                    continue
                y = b.entries[t * b.cols + j]
                if not y.is_zero():
                    acc = acc + x * y
            out.append(acc)
    return Mat(a.rows, b.cols, out)
