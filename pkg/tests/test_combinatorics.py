from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from changhee.algebra import ONE, Polynomial, falling_poly, mat_mul
from changhee.combinatorics import StirlingTable, binomial, falling_factorial, stirling1, stirling2
from changhee.matrices import build_matrix
from changhee.series import egf_coeff, exp_t, series_ipow


def expand_falling(n):
    # plain integer list multiplication, independent of Polynomial
    coeffs = [1]
    for i in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] -= i * c
        coeffs = nxt
    return coeffs


def count_partitions(n, blocks):
    # restricted growth strings over {0..blocks-1} using every block
    count = 0
    for rgs in product(range(blocks), repeat=n):
        if rgs and rgs[0] != 0:
            continue
        ok = all(rgs[i] <= max(rgs[:i], default=-1) + 1 for i in range(n))
        if ok and len(set(rgs)) == blocks:
            count += 1
    return count


def test_stirling1_examples():
    assert stirling1(4, 2) == 11
    assert stirling1(4, 1) == -6 and stirling1(4, 3) == -6
    assert stirling1(6, 3) == expand_falling(6)[3] == -225
    assert stirling1(3, 5) == 0
    assert stirling1(0, 0) == 1 and stirling1(5, 0) == 0


def test_stirling2_examples():
    assert stirling2(4, 2) == 7 and stirling2(4, 3) == 6
    assert all(stirling2(n, n) == 1 for n in range(20))
    assert stirling2(5, 3) == count_partitions(5, 3) == 25
    assert stirling2(2, 4) == 0


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        stirling1(-1, 0)
    with pytest.raises(ValueError):
        StirlingTable("third", 3)


def test_binomial_examples():
    assert binomial(4, 3) == 4
    assert binomial(Fraction(-1, 2), 2) == Fraction(-1, 2) * Fraction(-3, 2) / 2 == Fraction(3, 8)
    assert binomial(3, 5) == 0
    assert binomial(-1, 0) == 1


def test_falling_factorial_examples():
    assert falling_factorial(7, 4) == 840
    assert Fraction((-1) ** 4 * falling_factorial(4 + 4 - 1, 4), 2 ** 4) == Fraction(105, 2)
    assert falling_factorial(Fraction(5, 3), 0) == 1
    assert falling_factorial(-2, 3) == (-2) * (-3) * (-4)


@given(a=st.fractions(max_denominator=20), j=st.integers(0, 10))
def test_binomial_times_factorial_is_falling(a, j):
    assert binomial(a, j) * factorial(j) == falling_factorial(a, j)


@pytest.mark.parametrize("size", range(1, 14))
def test_s2_inverts_s1(size):
    assert mat_mul(build_matrix("S2", size, size), build_matrix("S1", size, size)) == build_matrix(
        "IDENTITY", size, size)


@pytest.mark.parametrize("n", range(16))
def test_first_kind_row_is_falling_factorial(n):
    assert Polynomial([stirling1(n, l) for l in range(n + 1)]) == Polynomial(expand_falling(n))


@pytest.mark.parametrize("n", range(16))
def test_powers_expand_in_falling_factorials(n):
    total = Polynomial()
    for k in range(n + 1):
        total = total + falling_poly(k) * stirling2(n, k)
    assert total == Polynomial([0] * n + [1])


@pytest.mark.parametrize("m", range(9))
def test_second_kind_generating_function(m):
    gf = series_ipow(exp_t(16) - 1, m)
    for l in range(17):
        assert egf_coeff(gf, l) == ONE * (factorial(m) * stirling2(l, m))


def test_tables_grow_and_stay_consistent():
    small = stirling1(5, 2)
    stirling1(90, 45)
    assert stirling1(5, 2) == small
