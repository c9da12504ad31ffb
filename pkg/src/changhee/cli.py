"""Command-line front end.

Exit codes:
    0  success
    1  verification failure or fixture value mismatch
    2  usage error (bad arguments, unknown family / identity / matrix)
    3  fixture parse failure
    4  fixture family does not match the requested family
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from changhee import families, fixtures, identities, series
from changhee.algebra import Mat, Polynomial, format_polynomial, format_rational, parse_rational, poly_eval
from changhee.matrices import MATRIX_NAMES, VARIANTS, build_matrix

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_FAMILY = 4

ORACLE_FAMILIES = ("bernoulli", "euler", "daehee", "changhee1", "changhee2", "norlund2")


class UsageError(Exception):
    pass


def _family(name: str) -> str:
    if name not in families.FAMILY_NAMES:
        raise UsageError(f"unknown family {name!r} (choose from {', '.join(families.FAMILY_NAMES)})")
    return name


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _grid_table(family: str, n_max: int, k_max: int):
    ks = [0] if family == "norlund2" else list(range(k_max + 1))
    body = [[format_rational(families.number(family, n, k)) for k in ks] for n in range(n_max + 1)]
    return ks, body


def cmd_table(args, out) -> int:
    family = _family(args.family)
    ks, body = _grid_table(family, args.n_max, args.k_max)
    header = ["n"] + (["value"] if family == "norlund2" else [f"k={k}" for k in ks])
    if args.format == "csv":
        out.write(_csv([header] + [[str(n)] + row for n, row in enumerate(body)]))
    elif args.format == "json":
        doc = {
            "family": family,
            "n_max": args.n_max,
            "k_max": None if family == "norlund2" else args.k_max,
            "columns": header[1:],
            "rows": [{"n": n, "values": row} for n, row in enumerate(body)],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        cells = [header] + [[str(n)] + row for n, row in enumerate(body)]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def cmd_poly(args, out) -> int:
    family = _family(args.family)
    p = families.value(family, args.n, args.k)
    if args.at is not None:
        try:
            v = parse_rational(args.at)
        except ValueError as e:
            raise UsageError(str(e)) from None
        out.write(format_rational(poly_eval(p, v)) + "\n")
    else:
        out.write(format_polynomial(p) + "\n")
    return EXIT_OK


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def format_latex(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{{{i}}}")
        coef = _latex_rational(mag) if (mag != 1 or i == 0) else ""
        body = f"{coef} {mono}".strip() if coef and mono else coef + mono
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _render_matrix(m: Mat, fmt: str) -> str:
    rows = m.to_rows()
    if fmt == "json":
        return json.dumps({"rows": m.rows, "cols": m.cols,
                           "entries": [[format_polynomial(e) for e in r] for r in rows]}, indent=2) + "\n"
    if fmt == "latex":
        lines = [r"\left(", r"\begin{array}{" + "c" * m.cols + "}"]
        for r in rows:
            lines.append(" & ".join(format_latex(e) for e in r) + r" \\")
        lines += [r"\end{array}", r"\right)"]
        return "\n".join(lines) + "\n"
    return _csv([[format_polynomial(e) for e in r] for r in rows])


def cmd_matrix(args, out) -> int:
    if args.name not in MATRIX_NAMES:
        raise UsageError(f"unknown matrix {args.name!r} (choose from {', '.join(MATRIX_NAMES)})")
    if args.rows < 1 or args.cols < 1:
        raise UsageError("rows and cols must be positive")
    out.write(_render_matrix(build_matrix(args.name, args.rows, args.cols, args.variant), args.format))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = None
    if args.ids:
        ids = [i for chunk in args.ids for i in chunk.split(",") if i]
        known = set(identities.registered_ids())
        unknown = [i for i in ids if i not in known]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    suite = identities.verify_all(args.n_max, args.k_max, ids=ids, jobs=args.jobs)
    if args.format == "json":
        out.write(suite.to_json(timings=args.timings))
    else:
        out.write(suite.to_text(timings=args.timings))
    return EXIT_OK if suite.ok else EXIT_FAIL


def cmd_crosscheck(args, out, err) -> int:
    fams = {args.family} if args.family else set()
    if args.family:
        _family(args.family)
    targets = []
    if args.shipped:
        targets = [(stem, path) for stem, path in fixtures.shipped().items()]
    elif args.fixture is None:
        raise UsageError("give a fixture path, a shipped fixture name, or --shipped")
    else:
        bundled = fixtures.shipped()
        targets = [(args.fixture, bundled.get(args.fixture, args.fixture))]
    worst = EXIT_OK
    for label, path in targets:
        try:
            text = path.read_text() if hasattr(path, "read_text") else open(path).read()
        except OSError as e:
            raise UsageError(f"cannot read fixture {label}: {e.strerror}") from None
        try:
            fx = fixtures.parse_fixture(text, args.family)
        except fixtures.FixtureError as e:
            err.write(f"{label}: parse error: {e}\n")
            return EXIT_PARSE
        if fams and fx.family not in fams:
            err.write(f"{label}: fixture family {fx.family!r} does not match {args.family!r}\n")
            return EXIT_FAMILY
        if fx.family not in families.FAMILY_NAMES:
            err.write(f"{label}: unknown family {fx.family!r} in fixture\n")
            return EXIT_FAMILY
        bad = fixtures.crosscheck(fx)
        checked = len(fx.entries)
        if bad:
            for n, k, expected, computed in bad:
                out.write(f"{label}: mismatch at n={n} k={k}: expected {expected}, computed {computed}\n")
            out.write(f"{label}: {len(bad)} of {checked} entries differ\n")
            worst = EXIT_FAIL
        else:
            out.write(f"{label}: {checked} entries checked, all match\n")
    return worst


def cmd_oracle_diff(args, out) -> int:
    family = args.family
    if family not in ORACLE_FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    ks = [0] if family == "norlund2" else range(args.k_max + 1)
    diffs = []
    points = 0
    for k in ks:
        gf = series.family_gf(family, k, family != "norlund2", args.n_max)
        for n in range(args.n_max + 1):
            points += 1
            if family == "norlund2":
                oracle, closed = gf.coeffs[n], Polynomial.constant(families.norlund2(n))
            else:
                oracle, closed = series.egf_coeff(gf, n), families.value(family, n, k)
            if oracle != closed:
                diffs.append((n, k, format_polynomial(closed), format_polynomial(oracle)))
    if args.format == "json":
        doc = {"family": family, "grid": {"n_max": args.n_max, "k_max": args.k_max},
               "points_checked": points, "outcome": "fail" if diffs else "pass",
               "differences": [{"n": n, "k": k, "closed_form": a, "oracle": b} for n, k, a, b in diffs]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for n, k, a, b in diffs:
            out.write(f"n={n} k={k}: closed form {a}  oracle {b}\n")
        out.write(f"{family}: {points} points, {'FAIL' if diffs else 'PASS'}\n")
    return EXIT_FAIL if diffs else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="changhee", description="Exact higher-order Changhee/Daehee/Euler tables and identity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="number table, rows n, columns k")
    t.add_argument("family")
    t.add_argument("--n-max", type=int, default=4)
    t.add_argument("--k-max", type=int, default=4)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")

    q = sub.add_parser("poly", help="one polynomial value")
    q.add_argument("family")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, default=1)
    q.add_argument("--at", help="evaluate at this rational, e.g. 1/2")

    m = sub.add_parser("matrix", help="export a named matrix")
    m.add_argument("name")
    m.add_argument("--rows", type=int, required=True)
    m.add_argument("--cols", type=int, required=True)
    m.add_argument("--variant", choices=VARIANTS, default="numbers")
    m.add_argument("--format", choices=("csv", "json", "latex"), default="csv")

    v = sub.add_parser("verify", help="verify registered identities")
    v.add_argument("--ids", nargs="+", help="identity ids (space or comma separated)")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--k-max", type=int, default=6)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include per-identity wall time (not byte-stable)")

    c = sub.add_parser("crosscheck", help="recompute a fixture and diff exactly")
    c.add_argument("fixture", nargs="?", help="fixture path or shipped fixture name")
    c.add_argument("--family")
    c.add_argument("--shipped", action="store_true", help="check every bundled fixture")

    o = sub.add_parser("oracle-diff", help="closed forms vs generating-function oracle")
    o.add_argument("family")
    o.add_argument("--n-max", type=int, default=20)
    o.add_argument("--k-max", type=int, default=8)
    o.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _glue_at(argv: list) -> list:
    # argparse takes "-1/2" for a flag; bind it to --at explicitly
    glued, i = [], 0
    while i < len(argv):
        if argv[i] == "--at" and i + 1 < len(argv):
            glued.append(f"--at={argv[i + 1]}")
            i += 2
        else:
            glued.append(argv[i])
            i += 1
    return glued


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _glue_at(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        for name in ("n_max", "k_max", "n", "k"):
            if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "poly":
            return cmd_poly(args, out)
        if args.command == "matrix":
            return cmd_matrix(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "crosscheck":
            return cmd_crosscheck(args, out, err)
        return cmd_oracle_diff(args, out)
    except UsageError as e:
        err.write(f"changhee: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
