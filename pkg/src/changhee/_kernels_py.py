"""Pure-Python hot kernels.

Every function here has a twin of the same name and signature in the
compiled ``_kernels`` extension; :mod:`changhee.kernels` picks one at import.
Inputs are sequences of :class:`fractions.Fraction` (or ints); outputs are
tuples of normalized Fractions.
"""
from fractions import Fraction
from math import gcd


def _lcm_denominator(values):
    d = 1
    for v in values:
        q = v.denominator
        d = d // gcd(d, q) * q
    return d


def _scaled_numerators(values, d):
    return [v.numerator * (d // v.denominator) for v in values]


def rat_convolve(a, b, limit=-1):
    """Cauchy product of two rational coefficient vectors.

    Both inputs are lifted to integer vectors over a common denominator so the
    inner loop is pure integer multiply-add; each output coefficient is
    normalized once.  ``limit >= 0`` drops every index above ``limit``.
    """
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return ()
    n = la + lb - 1
    if limit >= 0 and n > limit + 1:
        n = limit + 1
    da = _lcm_denominator(a)
    db = _lcm_denominator(b)
    ia = _scaled_numerators(a, da)
    ib = _scaled_numerators(b, db)
    out = [0] * n
    for i in range(min(la, n)):
        ai = ia[i]
        if ai == 0:
            continue
        top = min(lb, n - i)
        for j in range(top):
            out[i + j] += ai * ib[j]
    den = da * db
    return tuple(Fraction(c, den) for c in out)


def rat_horner(coeffs, v):
    """Evaluate sum(coeffs[i] * v**i) exactly.

    Works on integer numerators: with v = p/q and a common denominator D,
    the value is (sum A_i p^i q^(d-i)) / (D q^d).
    """
    if not coeffs:
        return Fraction(0)
    v = Fraction(v)
    p = v.numerator
    q = v.denominator
    d = _lcm_denominator(coeffs)
    ints = _scaled_numerators(coeffs, d)
    deg = len(ints) - 1
    acc = 0
    qpow = 1
    for c in reversed(ints):
        acc = acc * p + c * qpow
        qpow *= q
    # qpow is now q^(deg+1); the value needs q^deg
    return Fraction(acc, d * (qpow // q))


def stirling_table(kind, n_max):
    """Triangular table of signed first-kind (kind=1) or second-kind (kind=2)
    Stirling numbers, rows 0..n_max, row n holding entries l = 0..n."""
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    rows = [[1]]
    for n in range(n_max):
        prev = rows[n]
        row = [0] * (n + 2)
        for l in range(1, n + 2):
            left = prev[l - 1]
            here = prev[l] if l <= n else 0
            if kind == 1:
                row[l] = left - n * here
            else:
                row[l] = left + l * here
        rows.append(row)
    return [tuple(r) for r in rows]
