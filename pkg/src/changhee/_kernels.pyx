# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``: identical algorithms, typed loop indices.

Coefficient values stay Python ints (arbitrary precision); the speedup comes
from removing interpreter overhead around the integer multiply-add loops.
"""
from fractions import Fraction
from math import gcd


cdef object _lcm_denominator(values):
    cdef object d = 1
    cdef object q
    for v in values:
        q = v.denominator
        d = d // gcd(d, q) * q
    return d


cdef list _scaled_numerators(values, object d):
    return [v.numerator * (d // v.denominator) for v in values]


def rat_convolve(a, b, Py_ssize_t limit=-1):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t n, i, j, top
    cdef object ai
    if la == 0 or lb == 0:
        return ()
    n = la + lb - 1
    if limit >= 0 and n > limit + 1:
        n = limit + 1
    cdef object da = _lcm_denominator(a)
    cdef object db = _lcm_denominator(b)
    cdef list ia = _scaled_numerators(a, da)
    cdef list ib = _scaled_numerators(b, db)
    cdef list out = [0] * n
    for i in range(min(la, n)):
        ai = ia[i]
        if ai == 0:
            continue
        top = min(lb, n - i)
        for j in range(top):
            out[i + j] = out[i + j] + ai * ib[j]
    cdef object den = da * db
    return tuple([Fraction(c, den) for c in out])


def rat_horner(coeffs, v):
    if not coeffs:
        return Fraction(0)
    v = Fraction(v)
    cdef object p = v.numerator
    cdef object q = v.denominator
    cdef object d = _lcm_denominator(coeffs)
    cdef list ints = _scaled_numerators(coeffs, d)
    cdef object acc = 0
    cdef object qpow = 1
    cdef Py_ssize_t i
    for i in range(len(ints) - 1, -1, -1):
        acc = acc * p + ints[i] * qpow
        qpow = qpow * q
    return Fraction(acc, d * (qpow // q))


def stirling_table(int kind, Py_ssize_t n_max):
    if kind != 1 and kind != 2:
        raise ValueError("kind must be 1 or 2")
    cdef list rows = [[1]]
    cdef list prev, row
    cdef Py_ssize_t n, l
    cdef object left, here
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
