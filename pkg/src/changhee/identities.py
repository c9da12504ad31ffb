"""Registry of the Changhee/Daehee/Euler identity lattice and its exact verifier.

Each identity is evaluated on a finite ``(n, k)`` grid; both sides are exact
polynomials (numbers are constants), compared coefficient-wise.  Where a side
is the very formula :mod:`changhee.families` uses to compute a value, the
other side comes from the series oracle so nothing is checked against itself.

Identities whose typeset form does not hold are registered twice: an
``-asprinted`` entry (expected to fail, with a known witness point) and a
``-corrected`` entry (expected to pass).
"""
from __future__ import annotations

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from changhee import families as fam
from changhee import series
from changhee.algebra import ZERO, Mat, Polynomial, as_poly, format_polynomial, mat_mul, poly_binom
from changhee.combinatorics import binomial, falling_factorial, stirling1, stirling2
from changhee.matrices import build_matrix

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    formula: str
    lhs: Callable
    rhs: Callable
    domain: Callable[[int, int], bool] = lambda n, k: True
    domain_note: str = ""
    expected: str = PASS
    kind: str = "scalar"
    witness: Optional[tuple] = None
    counterpart: Optional[str] = None
    row_min: int = 0


@dataclass
class IdentityReport:
    id: str
    formula: str
    kind: str
    expected: str
    grid: tuple
    outcome: str
    points: int
    counterexamples: list = field(default_factory=list)
    note: str = ""
    elapsed: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        d = {
            "id": self.id,
            "formula": self.formula,
            "kind": self.kind,
            "expected": self.expected,
            "grid": {"n_max": self.grid[0], "k_max": self.grid[1]},
            "outcome": self.outcome,
            "points_checked": self.points,
            "counterexamples": [
                {"n": n, "k": k, "lhs": lhs, "rhs": rhs} for n, k, lhs, rhs in self.counterexamples
            ],
            "note": self.note,
        }
        if timings:
            d["elapsed_s"] = f"{self.elapsed:.6f}"
        return d


# -- oracle access ------------------------------------------------------------

def _bucket(n: int) -> int:
    return max(16, -(-n // 8) * 8)


def oracle(family: str, n: int, k: int, with_x: bool = True) -> Polynomial:
    """EGF coefficient of a family's generating function (``norlund2``: plain coefficient)."""
    gf = series.family_gf(family, k, with_x, _bucket(n))
    if family == "norlund2":
        return gf.coeffs[n]
    return series.egf_coeff(gf, n)


@lru_cache(maxsize=None)
def _ch2_gf_via_ch1(k: int, N: int) -> series.Series:
    return series.series_mul(
        series.family_gf("changhee1", k, True, N), series.series_ipow(series.Series([1, 1], N), k)
    )


@lru_cache(maxsize=None)
def _ch1_gf_via_ch2(k: int, N: int) -> series.Series:
    return series.series_mul(
        series.family_gf("changhee2", k, True, N), series.series_ipow(series.Series([1, 1], N), -k)
    )


# -- short names over the closed forms -----------------------------------------

ch1 = fam.changhee1
ch2 = fam.changhee2
E = fam.euler
D = fam.daehee
B = fam.bernoulli_number


def ch1n(n, k):
    return ch1(n, k).constant_term()


def ch2n(n, k):
    return ch2(n, k).constant_term()


def En(n, k):
    return E(n, k).constant_term()


def _sum(terms):
    out = ZERO
    for t in terms:
        out = out + as_poly(t)
    return out


def _inv_factorial(m: int) -> Fraction:
    # 1/m! vanishes at negative integers (reciprocal gamma)
    return Fraction(1, factorial(m)) if m >= 0 else Fraction(0)


def _packed(coeffs) -> Polynomial:
    """Row vector packed as a polynomial (entry l -> coefficient of x^l)."""
    return Polynomial(coeffs)


# -- registry -----------------------------------------------------------------

_REGISTRY: dict = {}


def register(d: IdentityDescriptor) -> IdentityDescriptor:
    if d.id in _REGISTRY:
        raise ValueError(f"duplicate identity {d.id}")
    _REGISTRY[d.id] = d
    return d


def _order_one(n, k):
    return k == 1


def _scalar(id, formula, lhs, rhs, **kw):
    register(IdentityDescriptor(id=id, formula=formula, lhs=lhs, rhs=rhs, **kw))


_scalar("I-2.1", "2^n Ch_n^(k) = (-1)^n sum_l s1(n,l) (k+n-1)^l",
        lambda n, k: 2 ** n * ch1n(n, k),
        lambda n, k: (-1) ** n * sum(stirling1(n, l) * (k + n - 1) ** l for l in range(n + 1)))

_scalar("I-2.2", "D_n^(k) = s1(n+k,k) / C(n+k,k)",
        lambda n, k: oracle("daehee", n, k, False),
        lambda n, k: Fraction(stirling1(n + k, k), comb(n + k, k)))

_scalar("I-2.3-asprinted", "2^n Ch_n^(k) = (-1)^n sum_l C(n,l) n^l D_{n-l}^(l)",
        lambda n, k: 2 ** n * ch1n(n, k),
        lambda n, k: (-1) ** n * sum(comb(n, l) * n ** l * D(n - l, l) for l in range(n + 1)),
        expected=FLAGGED, witness=(1, 2))

_scalar("I-2.3-corrected", "2^n Ch_n^(k) = (-1)^n sum_l C(n,l) (k+n-1)^l D_{n-l}^(l)",
        lambda n, k: 2 ** n * ch1n(n, k),
        lambda n, k: (-1) ** n * sum(comb(n, l) * (k + n - 1) ** l * D(n - l, l) for l in range(n + 1)))

_scalar("I-2.4", "Ch_n = (-1)^n n! / 2^n",
        lambda n, k: ch1n(n, 1),
        lambda n, k: Fraction((-1) ** n * factorial(n), 2 ** n),
        domain=_order_one, domain_note="order-1 numbers: k = 1 only")

_scalar("I-2.5", "D_n = 2^n/(n+1) Ch_n",
        lambda n, k: D(n, 1),
        lambda n, k: Fraction(2 ** n, n + 1) * ch1n(n, 1),
        domain=_order_one, domain_note="order-1 numbers: k = 1 only")

_scalar("I-2.6", "2 Ch_n + n Ch_{n-1} = 0",
        lambda n, k: 2 * ch1n(n, 1) + n * ch1n(n - 1, 1),
        lambda n, k: 0,
        domain=lambda n, k: k == 1 and n >= 1, domain_note="k = 1, n >= 1")

_scalar("I-2.7", "b_n^(-1) = (-1)^n/(n+1)",
        lambda n, k: oracle("norlund2", n, 0),
        lambda n, k: fam.norlund2(n),
        domain=lambda n, k: k == 0, domain_note="no order index: k = 0 only")

_scalar("I-2.8", "Ch_n = (n+1)!/2^n b_n^(-1)",
        lambda n, k: ch1n(n, 1),
        lambda n, k: Fraction(factorial(n + 1), 2 ** n) * fam.norlund2(n),
        domain=_order_one, domain_note="order-1 numbers: k = 1 only")

_scalar("I-2.9", "Ch_n^(k) = sum_l s1(n,l) E_l^(k)",
        lambda n, k: ch1n(n, k),
        lambda n, k: sum(stirling1(n, l) * En(l, k) for l in range(n + 1)))

_scalar("I-2.11-asprinted", "E_m^(k) = sum_n s2(n,m) Ch_n^(k)",
        lambda m, k: En(m, k),
        lambda m, k: sum(stirling2(n, m) * ch1n(n, k) for n in range(m + 1)),
        expected=FLAGGED, witness=(2, 1))

_scalar("I-2.11-corrected", "E_m^(k) = sum_n s2(m,n) Ch_n^(k)",
        lambda m, k: En(m, k),
        lambda m, k: sum(stirling2(m, n) * ch1n(n, k) for n in range(m + 1)))

_scalar("I-2.14", "Ch_n(x) = sum_i (-1)^i n!/2^i C(x, n-i)",
        lambda n, k: oracle("changhee1", n, 1),
        lambda n, k: _sum(poly_binom(n - i) * Fraction((-1) ** i * factorial(n), 2 ** i) for i in range(n + 1)),
        domain=_order_one, domain_note="order-1 polynomials: k = 1 only")

_scalar("I-2.17", "Ch_n^(k)(x) = sum_i (-1)^i n!/2^i C(k+i-1,i) C(x,n-i)",
        lambda n, k: oracle("changhee1", n, k),
        lambda n, k: ch1(n, k))

_scalar("I-2.20", "Ch_n^(k)(x) = sum_l s1(n,l) E_l^(k)(x)",
        lambda n, k: ch1(n, k),
        lambda n, k: _sum(E(l, k) * stirling1(n, l) for l in range(n + 1)))

_scalar("I-2.22", "E_m^(k)(x) = sum_n Ch_n^(k)(x) s2(m,n)",
        lambda m, k: E(m, k),
        lambda m, k: _sum(ch1(n, k) * stirling2(m, n) for n in range(m + 1)))

_scalar("I-2.24-asprinted", "s1(n,l) = C(n,l) D_{n-k}^(l), all l packed as x^l",
        lambda n, k: _packed(stirling1(n, l) for l in range(n + 1)),
        lambda n, k: _packed(comb(n, l) * D(n - k, l) for l in range(n + 1)),
        domain=lambda n, k: k <= n, domain_note="k <= n (subscript n-k)",
        expected=FLAGGED, witness=(1, 0))

_scalar("I-2.24-corrected", "s1(n,l) = C(n,l) D_{n-l}^(l), all l packed as x^l",
        lambda n, k: _packed(stirling1(n, l) for l in range(n + 1)),
        lambda n, k: _packed(comb(n, l) * D(n - l, l) for l in range(n + 1)))

_scalar("I-2.25", "Ch_n^(k)(x) = sum_l C(n,l) D_{n-l}^(l) E_l^(k)(x)",
        lambda n, k: ch1(n, k),
        lambda n, k: _sum(E(l, k) * (comb(n, l) * D(n - l, l)) for l in range(n + 1)))

_scalar("I-2.26", "D_{n-k}^(k) = sum_m s1(n-k,m) B_m^(k)",
        lambda n, k: D(n - k, k),
        lambda n, k: sum(stirling1(n - k, m) * B(m, k) for m in range(n - k + 1)),
        domain=lambda n, k: n >= k, domain_note="n >= k")

_scalar("I-2.27", "Ch_n^(k)(x) = sum_l sum_m C(n,l) s1(n-l,m) B_m^(l) E_l^(k)(x)",
        lambda n, k: ch1(n, k),
        lambda n, k: _sum(
            E(l, k) * (comb(n, l) * sum(stirling1(n - l, m) * B(m, l) for m in range(n - l + 1)))
            for l in range(n + 1)))

_scalar("I-3.2", "Ch^_n^(k) = sum_l (-1)^l s1(n,l) E_l^(k)",
        lambda n, k: oracle("changhee2", n, k, False),
        lambda n, k: sum((-1) ** l * stirling1(n, l) * En(l, k) for l in range(n + 1)))

_scalar("I-3.4", "sum Ch^_n^(k) t^n/n! = (2/(2+t))^k (1+t)^k",
        lambda n, k: ch2n(n, k),
        lambda n, k: oracle("changhee2", n, k, False))

_scalar("I-3.5", "Ch^_n^(k) = n! sum_i (-1)^i/2^i C(k+i-1,i) C(k,n-i)",
        lambda n, k: oracle("changhee2", n, k, False),
        lambda n, k: fam.changhee2_number(n, k))

_scalar("I-3.6", "E_m^(k)(k) = sum_n Ch^_n^(k) s2(m,n)",
        lambda m, k: E(m, k)(k),
        lambda m, k: sum(ch2n(n, k) * stirling2(m, n) for n in range(m + 1)))

_scalar("I-3.8", "sum Ch^_n^(k)(x) t^n/n! = (2/(2+t))^k (1+t)^(x+k)",
        lambda n, k: ch2(n, k),
        lambda n, k: oracle("changhee2", n, k))

_scalar("I-3.9", "Ch^_n^(k)(x) = sum_l (-1)^l s1(n,l) E_l^(k)(-x)",
        lambda n, k: oracle("changhee2", n, k),
        lambda n, k: _sum(E(l, k).reflect() * ((-1) ** l * stirling1(n, l)) for l in range(n + 1)))

_scalar("I-3.11", "E_m^(k)(x+k) = sum_n Ch^_n^(k)(x) s2(m,n)",
        lambda m, k: E(m, k).shift(k),
        lambda m, k: _sum(ch2(n, k) * stirling2(m, n) for n in range(m + 1)))

_scalar("I-3.13", "(-1)^n/n! Ch^_n^(k)(x) = sum_{m=1}^n C(n-1,n-m)/m! Ch_m^(k)(-x)",
        lambda n, k: ch2(n, k) * Fraction((-1) ** n, factorial(n)),
        lambda n, k: _sum(ch1(m, k).reflect() * Fraction(comb(n - 1, n - m), factorial(m)) for m in range(1, n + 1)),
        domain=lambda n, k: n >= 1, domain_note="n >= 1 (sum starts at m = 1)")

_scalar("I-3.15", "(-1)^n Ch_n^(k)(x)/n! = sum_{m=1}^n C(n-1,n-m)/m! Ch^_m^(k)(-x)",
        lambda n, k: ch1(n, k) * Fraction((-1) ** n, factorial(n)),
        lambda n, k: _sum(ch2(m, k).reflect() * Fraction(comb(n - 1, n - m), factorial(m)) for m in range(1, n + 1)),
        domain=lambda n, k: n >= 1, domain_note="n >= 1 (sum starts at m = 1)")

_scalar("I-3.17", "sum Ch^_n^(k)(x) t^n/n! = (1+t)^x (2/(2+t))^k (1+t)^k",
        lambda n, k: ch2(n, k),
        lambda n, k: series.egf_coeff(_ch2_gf_via_ch1(k, _bucket(n)), n))

_scalar("I-3.18", "Ch^_j^(k)(x) = sum_n C(j,n) (k)_{j-n} Ch_n^(k)(x)",
        lambda j, k: ch2(j, k),
        lambda j, k: _sum(ch1(n, k) * (comb(j, n) * falling_factorial(k, j - n)) for n in range(j + 1)))

_scalar("I-3.19", "Ch^_j^(k)(x) = sum_n C(k,j-n) j!/n! Ch_n^(k)(x)",
        lambda j, k: ch2(j, k),
        lambda j, k: _sum(ch1(n, k) * (comb(k, j - n) * Fraction(factorial(j), factorial(n))) for n in range(j + 1)))

_scalar("I-3.20", "Ch^_m^(k) = sum_n C(m,n) k!/(k+n-m)! Ch_n^(k)",
        lambda m, k: ch2n(m, k),
        lambda m, k: sum(comb(m, n) * factorial(k) * _inv_factorial(k + n - m) * ch1n(n, k) for n in range(m + 1)))

_scalar("I-3.21", "Ch^_m = sum_n C(m,n) 1/(n+1-m)! Ch_n",
        lambda m, k: ch2n(m, 1),
        lambda m, k: sum(comb(m, n) * _inv_factorial(n + 1 - m) * ch1n(n, 1) for n in range(m + 1)),
        domain=_order_one, domain_note="order-1 numbers: k = 1 only")

_scalar("I-3.22", "sum Ch_n^(k)(x) t^n/n! = (2/(2+t))^k (1+t)^(x+k) (1+t)^(-k)",
        lambda n, k: ch1(n, k),
        lambda n, k: series.egf_coeff(_ch1_gf_via_ch2(k, _bucket(n)), n))

_scalar("I-3.23", "Ch_m^(k)(x) = sum_n (-1)^(m-n) C(m,n) (k+m-n-1)!/(k-1)! Ch^_n^(k)(x)",
        lambda m, k: ch1(m, k),
        lambda m, k: _sum(
            ch2(n, k) * ((-1) ** (m - n) * comb(m, n) * Fraction(factorial(k + m - n - 1), factorial(k - 1)))
            for n in range(m + 1)),
        domain=lambda m, k: k >= 1, domain_note="k >= 1 ((k-1)! factor)")

_scalar("I-3.24", "Ch_m^(k)(x) = sum_n (-1)^(m-n) m!/n! C(k+m-n-1,m-n) Ch^_n^(k)(x)",
        lambda m, k: ch1(m, k),
        lambda m, k: _sum(
            ch2(n, k) * ((-1) ** (m - n) * Fraction(factorial(m), factorial(n)) * binomial(k + m - n - 1, m - n))
            for n in range(m + 1)))

_scalar("I-3.25", "Ch_m^(k) = sum_n (-1)^(m-n) C(m,n) (k+m-n-1)!/(k-1)! Ch^_n^(k)",
        lambda m, k: ch1n(m, k),
        lambda m, k: sum(
            (-1) ** (m - n) * comb(m, n) * Fraction(factorial(k + m - n - 1), factorial(k - 1)) * ch2n(n, k)
            for n in range(m + 1)),
        domain=lambda m, k: k >= 1, domain_note="k >= 1 ((k-1)! factor)")

_scalar("I-3.26", "Ch_m = sum_n (-1)^(m-n) m!/n! Ch^_n",
        lambda m, k: ch1n(m, 1),
        lambda m, k: sum((-1) ** (m - n) * Fraction(factorial(m), factorial(n)) * ch2n(n, 1) for n in range(m + 1)),
        domain=_order_one, domain_note="order-1 numbers: k = 1 only")

_scalar("I-3.27", "Ch^_n^(k)(x) = sum_l (-1)^l C(n,l) D_{n-l}^(l) E_l^(k)(-x)",
        lambda n, k: ch2(n, k),
        lambda n, k: _sum(E(l, k).reflect() * ((-1) ** l * comb(n, l) * D(n - l, l)) for l in range(n + 1)))

_scalar("I-3.28", "Ch^_n^(k)(x) = sum_l sum_m (-1)^l C(n,l) s1(n-l,m) B_m^(l) E_l^(k)(-x)",
        lambda n, k: ch2(n, k),
        lambda n, k: _sum(
            E(l, k).reflect() * ((-1) ** l * comb(n, l) * sum(stirling1(n - l, m) * B(m, l) for m in range(n - l + 1)))
            for l in range(n + 1)))

_scalar("P-SHIFT", "Ch^_n^(k)(x) = Ch_n^(k)(x+k)",
        lambda n, k: ch2(n, k),
        lambda n, k: ch1(n, k).shift(k))


# matrix forms: evaluators take (rows, cols) = (n_max+1, k_max+1)

def _sq(name):
    return lambda r, c: build_matrix(name, r, r)


def _fm(name, variant="numbers"):
    return lambda r, c: build_matrix(name, r, c, variant)


def _prod(*factors):
    def ev(r, c):
        out = factors[0](r, c)
        for f in factors[1:]:
            out = mat_mul(out, f(r, c))
        return out
    return ev


def _matrix(id, formula, lhs, rhs, counterpart, row_min=0):
    register(IdentityDescriptor(id=id, formula=formula, lhs=lhs, rhs=rhs, kind="matrix",
                                counterpart=counterpart, row_min=row_min,
                                domain_note="rows n >= 1" if row_min else ""))


_matrix("M-2.10", "Ch = S1 E (numbers)",
        _fm("CH1"), _prod(_sq("S1"), _fm("EULER")), "I-2.9")
_matrix("M-2.12", "E = S2 Ch (numbers)",
        _fm("EULER"), _prod(_sq("S2"), _fm("CH1")), "I-2.11-corrected")
_matrix("M-2.21", "Ch(x) = S1 E(x)",
        _fm("CH1", "polynomials"), _prod(_sq("S1"), _fm("EULER", "polynomials")), "I-2.20")
_matrix("M-2.23", "E(x) = S2 Ch(x)",
        _fm("EULER", "polynomials"), _prod(_sq("S2"), _fm("CH1", "polynomials")), "I-2.22")
_matrix("M-3.3", "Ch^ = S1 SIGN_DIAG E (numbers)",
        _fm("CH2"), _prod(_sq("S1"), _sq("SIGN_DIAG"), _fm("EULER")), "I-3.2")
_matrix("M-3.7", "E(k) = S2 Ch^ (numbers)",
        _fm("EULER", "at-order"), _prod(_sq("S2"), _fm("CH2")), "I-3.6")
_matrix("M-3.10", "Ch^(x) = S1 SIGN_DIAG E(-x)",
        _fm("CH2", "polynomials"), _prod(_sq("S1"), _sq("SIGN_DIAG"), _fm("EULER", "at-negative-x")), "I-3.9")
_matrix("M-3.12", "E(x+k) = S2 Ch^(x)",
        _fm("EULER", "at-shifted-x"), _prod(_sq("S2"), _fm("CH2", "polynomials")), "I-3.11")
_matrix("M-3.14", "FACT_DIAG Ch^(x) = CFRAC Ch(-x)",
        _prod(_sq("FACT_DIAG"), _fm("CH2", "polynomials")), _prod(_sq("CFRAC"), _fm("CH1", "at-negative-x")),
        "I-3.13", row_min=1)
_matrix("M-3.16", "Ch(x) = FACT_DIAG^-1 CFRAC Ch^(-x)",
        _fm("CH1", "polynomials"), _prod(_sq("FACT_DIAG_INV"), _sq("CFRAC"), _fm("CH2", "at-negative-x")),
        "I-3.15", row_min=1)


# -- verification ---------------------------------------------------------------

def _id_key(identity: str):
    prefix, _, rest = identity.partition("-")
    nums = re.match(r"[\d.]*", rest).group(0)
    suffix = rest[len(nums):]
    return ({"I": 0, "M": 1, "P": 2}.get(prefix, 3), tuple(int(p) for p in nums.split(".") if p), suffix)


def registered_ids() -> list:
    return sorted(_REGISTRY, key=_id_key)


def get(identity: str) -> IdentityDescriptor:
    try:
        return _REGISTRY[identity]
    except KeyError:
        raise UnknownIdentityError(identity) from None


def _text(v) -> str:
    return format_polynomial(as_poly(v))


def verify_identity(identity: str, n_max: int, k_max: int,
                    domain: Optional[Callable[[int, int], bool]] = None) -> IdentityReport:
    """Evaluate both sides on every in-domain grid point; collect every mismatch.

    ``domain`` overrides the registered domain predicate (for scalar
    identities) or the first checked row (matrix identities use
    ``domain(n, k)`` per entry when given).
    """
    d = get(identity)
    if n_max < 0 or k_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    start = time.perf_counter()
    cex = []
    points = 0
    note = d.domain_note
    if d.kind == "matrix":
        rows, cols = n_max + 1, k_max + 1
        inside = domain or (lambda n, k: n >= d.row_min)
        left, right = d.lhs(rows, cols), d.rhs(rows, cols)
        for n in range(rows):
            for k in range(cols):
                if not inside(n, k):
                    continue
                points += 1
                a, b = left[n, k], right[n, k]
                if a != b:
                    cex.append((n, k, _text(a), _text(b)))
    else:
        inside = domain or d.domain
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                if not inside(n, k):
                    continue
                points += 1
                a, b = as_poly(d.lhs(n, k)), as_poly(d.rhs(n, k))
                if a != b:
                    cex.append((n, k, _text(a), _text(b)))
    if points == 0:
        note = (note + "; " if note else "") + "empty grid after domain filter (vacuous pass)"
    return IdentityReport(
        id=d.id, formula=d.formula, kind=d.kind, expected=d.expected, grid=(n_max, k_max),
        outcome=FAIL if cex else PASS, points=points, counterexamples=cex, note=note,
        elapsed=time.perf_counter() - start,
    )


def behaved_as_recorded(report: IdentityReport) -> bool:
    """Expected-pass identities must pass; flagged ones must fail whenever
    their known witness lies inside the grid."""
    if report.expected == PASS:
        return report.outcome == PASS
    w = get(report.id).witness
    if w is None or w[0] > report.grid[0] or w[1] > report.grid[1]:
        return True
    return report.outcome == FAIL


@dataclass
class SuiteReport:
    grid: tuple
    reports: list
    inconsistencies: list

    @property
    def summary(self) -> dict:
        out = {PASS: {PASS: 0, FAIL: 0}, FLAGGED: {PASS: 0, FAIL: 0}}
        for r in self.reports:
            out[r.expected][r.outcome] += 1
        return {
            "expected_pass": out[PASS],
            "flagged": out[FLAGGED],
            "deviations": sorted(r.id for r in self.reports if not behaved_as_recorded(r)),
        }

    @property
    def ok(self) -> bool:
        return not self.summary["deviations"] and not self.inconsistencies

    def as_dict(self, timings: bool = False) -> dict:
        return {
            "grid": {"n_max": self.grid[0], "k_max": self.grid[1]},
            "identities": [r.as_dict(timings) for r in self.reports],
            "summary": self.summary,
            "consistency": self.inconsistencies,
            "ok": self.ok,
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), indent=2) + "\n"

    def to_text(self, timings: bool = False) -> str:
        lines = [f"grid n<={self.grid[0]} k<={self.grid[1]}"]
        for r in self.reports:
            flag = "" if behaved_as_recorded(r) else "  <-- UNEXPECTED"
            extra = f" [{r.expected}]" if r.expected != PASS else ""
            t = f" ({r.elapsed:.3f}s)" if timings else ""
            lines.append(f"{r.id:<18} {r.outcome.upper():<4} {r.points:>4} pts{extra}{t}{flag}")
            if r.note:
                lines.append(f"    note: {r.note}")
            for n, k, a, b in r.counterexamples[:5]:
                lines.append(f"    n={n} k={k}: lhs {a}  rhs {b}")
            if len(r.counterexamples) > 5:
                lines.append(f"    ... {len(r.counterexamples) - 5} more")
        s = self.summary
        lines.append(
            f"expected-pass: {s['expected_pass'][PASS]} pass, {s['expected_pass'][FAIL]} fail; "
            f"flagged: {s['flagged'][FAIL]} fail, {s['flagged'][PASS]} pass"
        )
        for msg in self.inconsistencies:
            lines.append(f"inconsistent: {msg}")
        lines.append("OK" if self.ok else "DEVIATIONS: " + ", ".join(s["deviations"] or ["consistency"]))
        return "\n".join(lines) + "\n"


def _verify_task(args):
    return verify_identity(*args)


def verify_all(n_max: int, k_max: int, ids: Optional[list] = None, jobs: int = 1) -> SuiteReport:
    """Run the registry (or ``ids``) and cross-check matrix/scalar pairs."""
    selected = registered_ids() if ids is None else sorted(ids, key=_id_key)
    for i in selected:
        get(i)
    tasks = [(i, n_max, k_max) for i in selected]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [verify_identity(*t) for t in tasks]
    by_id = {r.id: r for r in reports}
    inconsistencies = []
    for r in reports:
        cp = get(r.id).counterpart
        if cp and cp in by_id and by_id[cp].outcome != r.outcome:
            inconsistencies.append(f"{r.id} {r.outcome} but {cp} {by_id[cp].outcome}")
    return SuiteReport(grid=(n_max, k_max), reports=reports, inconsistencies=inconsistencies)
