"""Fixture replay, formula-vs-oracle sweeps, ratio classification and b-file comparison."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from . import graph
from .formulas import (
    FERMAT_PRIMES,
    classify_ratio,
    fermat_l,
    fermat_l_square,
    l_carmichael,
    l_of,
    l_prime,
)

FIXTURE_NAMES = (
    "prime-L",
    "composite-L",
    "prime-square-L",
    "prime-power-L",
    "fermat",
    "lcm-examples",
    "ratio-classes",
    "golden-cycles",
)


@dataclass(frozen=True)
class TableFixture:
    name: str
    description: str
    rows: tuple[dict, ...]


@dataclass
class Mismatch:
    input: Any
    expected: Any
    got: Any


@dataclass
class MismatchReport:
    subject: str
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def add(self, input: Any, expected: Any, got: Any) -> None:
        self.mismatches.append(Mismatch(input, expected, got))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checked": self.checked,
            "mismatches": [vars(m) for m in self.mismatches],
            "notes": list(self.notes),
        }


def load_fixture(name: str) -> TableFixture:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    text = resources.files("sqcycles.fixtures").joinpath(f"{name}.json").read_text("utf-8")
    data = json.loads(text)
    return TableFixture(data["name"], data["description"], tuple(data["rows"]))


# ---------------------------------------------------------------------------
# fixture checks


def _check_l_rows(fixture: TableFixture, report: MismatchReport) -> None:
    cap = graph.oracle_cap()
    for row in fixture.rows:
        m, want = row["modulus"], row["expected"]
        report.checked += 1
        got = l_of(m).value
        if got != want:
            report.add(m, want, {"route": "formula", "value": got})
        if m <= cap:
            brute = graph.l_bruteforce(m)
            if brute != want:
                report.add(m, want, {"route": "brute-force", "value": brute})
        elif "witness" in row:
            period = graph.cycle_period(row["witness"], m)
            if period != want:
                report.add(m, want, {"route": "cycle-period", "value": period})
            report.notes.append(
                f"{m} exceeds the oracle cap; checked cycle_period({row['witness']}) instead"
            )
        else:
            report.notes.append(f"{m} exceeds the oracle cap; formula only")
        if "printed" in row and row["printed"].count("×"):
            product = math.prod(int(t) for t in row["printed"].split("×"))
            if product != want:
                report.add(m, row["printed"], product)
        if "k" in row:
            k = row["k"]
            closed = fermat_l(k) if m == FERMAT_PRIMES[k] else fermat_l_square(k)
            if closed != want:
                report.add(m, want, {"route": "fermat-special", "value": closed})


def _check_golden(fixture: TableFixture, report: MismatchReport) -> None:
    for row in fixture.rows:
        m, elems = row["modulus"], row["elements"]
        report.checked += 1
        want = elems + [elems[0]]
        got = graph.trajectory(elems[0], m, len(elems))
        if got != want:
            report.add([m, elems[0]], want, got)
        elif graph.cycle_period(elems[0], m) != len(elems):
            report.add([m, elems[0]], len(elems), graph.cycle_period(elems[0], m))


def _check_ratio_classes(fixture: TableFixture, report: MismatchReport, limit: int) -> None:
    groups = classify_sweep(limit)
    for row in fixture.rows:
        k = row["k"]
        listed = [p for p in row["primes"] if p <= limit]
        report.checked += 1
        got = groups.get(k, [])[: len(listed)]
        if got != listed:
            report.add({"k": k}, listed, got)
        bad = [(a, b) for a, b in zip(listed, listed[1:]) if (b - a) % k]
        if bad:
            report.add({"k": k, "check": "adjacent-difference"}, [], bad)
    listed_ks = {row["k"] for row in fixture.rows}
    for k in sorted(set(groups) - listed_ks):
        report.notes.append(f"computed class k={k} is not listed: {groups[k]}")


def check_fixture(name: str, classify_limit: int = 360) -> MismatchReport:
    """Replay one embedded table against the formulas and, where feasible, the oracle."""
    fixture = load_fixture(name)
    report = MismatchReport(f"fixture {name}")
    if name == "golden-cycles":
        _check_golden(fixture, report)
    elif name == "ratio-classes":
        _check_ratio_classes(fixture, report, classify_limit)
    else:
        _check_l_rows(fixture, report)
    return report


# ---------------------------------------------------------------------------
# sweeps


def _sweep_chunk(args: tuple[int, int, bool]) -> list[tuple[int, int, int]]:
    lo, hi, use_oracle = args
    bad = []
    for m in range(lo, hi + 1):
        formula = l_of(m).value
        other = graph.l_bruteforce(m) if use_oracle else l_carmichael(m)
        if formula != other:
            bad.append((m, other, formula))
    return bad


def sweep(lo: int, hi: int, use_oracle: bool = True, jobs: int = 1, chunk: int = 1000) -> MismatchReport:
    """Compare ``l_of`` over ``[lo, hi]`` with the brute-force oracle.

    With ``use_oracle=False`` the reference is the unit-group-exponent
    formula instead, which has no size cap.  Results are identical for any
    ``jobs``/``chunk`` choice.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if use_oracle:
        graph.check_cap(hi)
    pieces = [(a, min(hi, a + chunk - 1), use_oracle) for a in range(lo, hi + 1, chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, pieces))
    else:
        results = [_sweep_chunk(p) for p in pieces]
    reference = "brute-force" if use_oracle else "carmichael"
    report = MismatchReport(f"sweep {lo}..{hi} vs {reference}", checked=hi - lo + 1)
    for m, expected, got in sorted(b for part in results for b in part):
        report.add(m, expected, got)
    return report


# ---------------------------------------------------------------------------
# ratio classes


def classify_sweep(limit: int) -> dict[int, list[int]]:
    """Group the primes ``p <= limit`` by their ratio class k."""
    if limit > 10**5:
        raise ValueError("classify_sweep is limited to 10**5")
    groups: dict[int, list[int]] = {}
    for p in primes_upto(limit):
        groups.setdefault(classify_ratio(p).k, []).append(p)
    return dict(sorted(groups.items()))


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, f in enumerate(sieve) if f]


def first_primes(n: int) -> list[int]:
    if n < 1:
        return []
    limit = max(16, int(n * (math.log(n) + math.log(math.log(n + 2)) + 3)))
    while True:
        ps = primes_upto(limit)
        if len(ps) >= n:
            return ps[:n]
        limit *= 2


def nth_prime(n: int) -> int:
    """The n-th prime, 1-based."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return first_primes(n)[-1]


# ---------------------------------------------------------------------------
# b-files


class BFileError(ValueError):
    pass


def parse_bfile(path) -> list[tuple[int, int]]:
    """Read ``index value`` pairs; blank lines and ``#`` comments are skipped."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise BFileError(f"{path}:{lineno}: expected 'index value', got {text!r}")
            try:
                rows.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise BFileError(f"{path}:{lineno}: non-integer field in {text!r}") from None
    return rows


def oeis_compare(path, offset: int = 1) -> MismatchReport:
    """Check a b-file of L(p) values; index ``offset`` corresponds to the prime 2."""
    rows = parse_bfile(path)
    report = MismatchReport(f"b-file {Path(path).name} (offset {offset})")
    if not rows:
        return report
    ps = first_primes(max(i for i, _ in rows) - offset + 1)
    for index, value in rows:
        rank = index - offset + 1
        if rank < 1:
            raise BFileError(f"index {index} precedes the offset {offset}")
        p = ps[rank - 1]
        report.checked += 1
        got = l_prime(p).value
        if got != value:
            report.add({"index": index, "prime": p}, value, got)
    if report.mismatches:
        first = report.mismatches[0]
        report.notes.append(f"first divergence at index {first.input['index']}")
    return report
