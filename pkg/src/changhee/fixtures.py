"""Golden-table fixtures: a ``family=<name>`` header line, then ``n,k,value`` rows.

The header may carry ``variant=polynomials``; otherwise values are the
numbers (x = 0).  Lines starting with ``#`` and blank lines are ignored.
A table CSV as printed by ``changhee table --format csv`` is accepted too;
its family then comes from the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from changhee import families
from changhee.algebra import Polynomial, format_polynomial, parse_polynomial


class FixtureError(ValueError):
    """Malformed fixture text."""


@dataclass(frozen=True)
class Fixture:
    family: str
    variant: str
    entries: tuple  # ((n, k, Polynomial), ...)


def _parse_header(line: str) -> tuple:
    fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
    if "family" not in fields:
        raise FixtureError(f"header must start with family=<name>: {line!r}")
    variant = fields.get("variant", "numbers")
    if variant not in ("numbers", "polynomials"):
        raise FixtureError(f"unknown variant {variant!r}")
    return fields["family"], variant


def _value(text: str, where: str) -> Polynomial:
    try:
        return parse_polynomial(text)
    except ValueError:
        raise FixtureError(f"{where}: unparseable value {text!r}") from None


def parse_fixture(text: str, family: str | None = None) -> Fixture:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        if family is None:
            raise FixtureError("empty fixture: missing family header")
        return Fixture(family, "numbers", ())
    head = lines[0]
    if head.startswith("family="):
        fam, variant = _parse_header(head)
        entries = []
        seen = set()
        for i, ln in enumerate(lines[1:], start=2):
            parts = ln.split(",")
            if len(parts) != 3:
                raise FixtureError(f"line {i}: expected n,k,value")
            try:
                n, k = int(parts[0]), int(parts[1])
            except ValueError:
                raise FixtureError(f"line {i}: bad index") from None
            if n < 0 or k < 0:
                raise FixtureError(f"line {i}: negative index")
            if (n, k) in seen:
                raise FixtureError(f"line {i}: duplicate entry ({n}, {k})")
            seen.add((n, k))
            entries.append((n, k, _value(parts[2], f"line {i}")))
        return Fixture(fam, variant, tuple(entries))
    if head.startswith("n,"):
        if family is None:
            raise FixtureError("table CSV carries no family; pass one explicitly")
        return _from_table(lines, family)
    raise FixtureError(f"unrecognized header {head!r}")


def _from_table(lines: list, family: str) -> Fixture:
    cols = lines[0].split(",")[1:]
    if cols == ["value"]:
        ks = [0]
    else:
        try:
            ks = [int(c.removeprefix("k=")) for c in cols]
        except ValueError:
            raise FixtureError(f"bad table header {lines[0]!r}") from None
    entries = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != len(ks) + 1:
            raise FixtureError(f"line {i}: expected {len(ks) + 1} cells")
        try:
            n = int(parts[0])
        except ValueError:
            raise FixtureError(f"line {i}: bad index") from None
        for k, cell in zip(ks, parts[1:]):
            entries.append((n, k, _value(cell, f"line {i}")))
    return Fixture(family, "numbers", tuple(entries))


def load_fixture(path, family: str | None = None) -> Fixture:
    return parse_fixture(Path(path).read_text(), family)


def dump_fixture(fx: Fixture) -> str:
    head = f"family={fx.family}" + (" variant=polynomials" if fx.variant == "polynomials" else "")
    rows = [f"{n},{k},{format_polynomial(v)}" for n, k, v in fx.entries]
    return "\n".join([head] + rows) + "\n"


def compute(family: str, variant: str, n: int, k: int) -> Polynomial:
    if variant == "polynomials":
        return families.value(family, n, k)
    return Polynomial.constant(families.number(family, n, k))


def crosscheck(fx: Fixture) -> list:
    """Recompute every entry; return ``(n, k, expected, computed)`` mismatches."""
    bad = []
    for n, k, expected in fx.entries:
        got = compute(fx.family, fx.variant, n, k)
        if got != expected:
            bad.append((n, k, format_polynomial(expected), format_polynomial(got)))
    return bad


def shipped() -> dict:
    """Transcribed reference fixtures bundled with the package, by stem."""
    out = {}
    root = resources.files("changhee") / "fixtures"
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".fix"):
            out[entry.name[:-4]] = entry
    return out
