"""Acceptance gate: one test per criterion, each logging a PASS/FAIL line."""
import io
import time
from contextlib import contextmanager

import pytest

import reference_displays as D
from changhee import cli, families, series
from changhee.algebra import Mat, mat_mul, parse_polynomial
from changhee.fixtures import shipped
from changhee.identities import FAIL, PASS, verify_identity
from changhee.matrices import build_matrix


@contextmanager
def criterion(log, label, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < budget
        log.append(f"[{'PASS' if ok else 'FAIL'}] {label}  ({elapsed:.2f} s, budget {budget:g} s)")
    assert elapsed < budget, f"{label} took {elapsed:.2f} s"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli.main(list(argv), out=out, err=err), out.getvalue()


def shown(name, errata=True):
    rows = getattr(D, name)
    m = Mat.from_rows([[parse_polynomial(c) for c in r] for r in rows])
    if not errata:
        return m
    fixes = {(i, j): parse_polynomial(v) for (n, i, j), v in D.ERRATA.items() if n == name}
    return Mat.from_function(m.rows, m.cols, lambda i, j: fixes.get((i, j), m[i, j]))


def differences(a, b, col_min=1, row_min=0):
    return [(i, j) for i in range(row_min, a.rows) for j in range(col_min, a.cols) if a[i, j] != b[i, j]]


FAMILY_DISPLAYS = [
    ("CH1_NUMBERS_5", "CH1", "numbers"),
    ("EULER_NUMBERS_5", "EULER", "numbers"),
    ("EULER_POLY_5", "EULER", "polynomials"),
    ("CH1_POLY_4", "CH1", "polynomials"),
    ("CH2_NUMBERS_4", "CH2", "numbers"),
    ("EULER_AT_ORDER_4", "EULER", "at-order"),
    ("CH2_POLY_4", "CH2", "polynomials"),
    ("EULER_NEG_X_4", "EULER", "at-negative-x"),
    ("EULER_SHIFTED_4", "EULER", "at-shifted-x"),
    ("CH1_NEG_X_4", "CH1", "at-negative-x"),
    ("CH2_NEG_X_4", "CH2", "at-negative-x"),
]
STRUCTURAL_DISPLAYS = [
    ("S1_5", "S1"), ("S2_5", "S2"), ("SIGN_DIAG_4", "SIGN_DIAG"), ("FACT_DIAG_4", "FACT_DIAG"), ("CFRAC_4", "CFRAC"),
]


def _s(name, size):
    return build_matrix(name, size, size)


def _corner(m, size):
    return Mat.from_function(size, size, lambda i, j: m[i, j])


def _product_checks():
    """(label, displayed left side, product of displayed factors, first row compared)."""
    s1_4 = _corner(shown("S1_5"), 4)
    s2_4 = _corner(shown("S2_5"), 4)
    mm = mat_mul
    return [
        ("Ch = S1 E", shown("CH1_NUMBERS_5"), mm(shown("S1_5"), shown("EULER_NUMBERS_5")), 0),
        ("E = S2 Ch", shown("EULER_NUMBERS_5"), mm(shown("S2_5"), shown("CH1_NUMBERS_5")), 0),
        ("Ch(x) = S1 E(x)", shown("CH1_POLY_4"),
         mm(s1_4, _corner(shown("EULER_POLY_5"), 4)), 0),
        ("E(x) = S2 Ch(x)", _corner(shown("EULER_POLY_5"), 4),
         mm(s2_4, shown("CH1_POLY_4")), 0),
        ("Ch^ = S1 D E", shown("CH2_NUMBERS_4"),
         mm(mm(s1_4, shown("SIGN_DIAG_4")), _corner(shown("EULER_NUMBERS_5"), 4)), 0),
        ("E(k) = S2 Ch^", shown("EULER_AT_ORDER_4"), mm(s2_4, shown("CH2_NUMBERS_4")), 0),
        ("Ch^(x) = S1 D E(-x)", shown("CH2_POLY_4"), mm(mm(s1_4, shown("SIGN_DIAG_4")), shown("EULER_NEG_X_4")), 0),
        ("E(x+k) = S2 Ch^(x)", shown("EULER_SHIFTED_4"), mm(s2_4, shown("CH2_POLY_4")), 0),
        ("F Ch^(x) = C Ch(-x)", mm(shown("FACT_DIAG_4"), shown("CH2_POLY_4_ROW0_ZERO")),
         mm(shown("CFRAC_4"), shown("CH1_NEG_X_4")), 1),
        ("Ch(x) = F^-1 C Ch^(-x)", shown("CH1_POLY_4_ROW0_ZERO"),
         mm(mm(_s("FACT_DIAG_INV", 4), shown("CFRAC_4")), shown("CH2_NEG_X_4")), 0),
    ]


def test_criterion_1_reference_matrices(acceptance_log):
    with criterion(acceptance_log, "1 reference-matrix reproduction (exact, k >= 1)", 1.0):
        for name, matrix, variant in FAMILY_DISPLAYS:
            want = shown(name)
            got = build_matrix(matrix, want.rows, want.cols, variant)
            assert differences(want, got) == [], name
            # column 0 is typeset as zeros; the generating functions give (x)_n, x^n or 1 there
            assert all(want[i, 0].is_zero() for i in range(want.rows)), name
        for name, matrix in STRUCTURAL_DISPLAYS:
            want = shown(name)
            assert differences(want, _s(matrix, want.rows), col_min=0) == [], name
        for label, lhs, rhs, row_min in _product_checks():
            assert differences(lhs, rhs, row_min=row_min) == [], label
        # the recorded errata are exactly the raw display's disagreements
        raw = shown("EULER_SHIFTED_4", errata=False)
        assert differences(raw, build_matrix("EULER", 4, 4, "at-shifted-x")) == [(3, 2)]
        typo = shown("S2_4_AS_PRINTED_IN_EK")
        assert differences(typo, _s("S2", 4), col_min=0) == [(3, 1)]


ORACLE_FAMILIES = ("bernoulli", "euler", "daehee", "changhee1", "changhee2")


def test_criterion_2_oracle_equivalence(acceptance_log):
    with criterion(acceptance_log, "2 oracle equivalence (n <= 20, order <= 8)", 30.0):
        bad = []
        for family in ORACLE_FAMILIES:
            for k in range(9):
                gf = series.family_gf(family, k, True, 20)
                bad += [(family, n, k) for n in range(21)
                        if series.egf_coeff(gf, n) != families.value(family, n, k)]
        assert bad == []


def test_criterion_3_identity_suite(acceptance_log):
    with criterion(acceptance_log, "3 identity suite (verify --n-max 12 --k-max 6)", 60.0):
        code, out = run("verify", "--n-max", "12", "--k-max", "6")
        assert code == 0, out


def test_criterion_4_flagged_behavior(acceptance_log):
    with criterion(acceptance_log, "4 flagged-identity behavior", 30.0):
        r = verify_identity("I-2.3-asprinted", 12, 6)
        assert r.outcome == FAIL and (1, 2, "-2", "-1") in r.counterexamples
        for ident in ("I-2.3-corrected", "I-2.24-corrected"):
            assert verify_identity(ident, 12, 6).outcome == PASS, ident
        for ident in ("I-3.13", "I-3.15"):
            assert verify_identity(ident, 12, 6).outcome == PASS, ident
            wide = verify_identity(ident, 12, 6, domain=lambda n, k: True)
            assert wide.outcome == FAIL
            assert {(n, lhs, rhs) for n, _, lhs, rhs in wide.counterexamples} == {(0, "1", "0")}, ident


def test_criterion_5_structural_inversions(acceptance_log):
    with criterion(acceptance_log, "5 structural inversions (S2 S1 = I, recurrence, bridges, shift law)", 30.0):
        for size in range(1, 14):
            assert mat_mul(_s("S2", size), _s("S1", size)) == _s("IDENTITY", size)
            assert mat_mul(_s("S1", size), _s("S2", size)) == _s("IDENTITY", size)
        for ident in ("I-2.6", "I-2.5", "I-2.8", "P-SHIFT"):
            r = verify_identity(ident, 20, 6)
            assert r.outcome == PASS and r.points > 0, ident


def test_criterion_6_cli_round_trip(acceptance_log, tmp_path):
    with criterion(acceptance_log, "6 CLI round-trip (table -> crosscheck, fixtures, corruption)", 30.0):
        for family in families.FAMILY_NAMES:
            code, table = run("table", family, "--n-max", "10", "--k-max", "5", "--format", "csv")
            assert code == 0
            path = tmp_path / f"{family}.csv"
            path.write_text(table)
            code, out = run("crosscheck", str(path), "--family", family)
            assert code == 0, out
        code, out = run("crosscheck", "--shipped")
        assert code == 0 and out.count("all match") == len(shipped())
        bad = tmp_path / "corrupt.fix"
        bad.write_text(shipped()["changhee1_5x5"].read_text().replace("2,3,3\n", "2,3,4\n"))
        code, out = run("crosscheck", str(bad))
        assert code == cli.EXIT_FAIL and "expected 4, computed 3" in out
