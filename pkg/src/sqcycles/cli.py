"""Command-line entry point: ``sqcycles <command> ...``.

Exit codes: 0 success, 1 mismatches found, 2 usage or input error,
3 overflow or oracle-cap violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import graph, harness
from .formulas import LValue, Route, l_of

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, fixed indent, integers only."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cell(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def _lvalue_dict(lv: LValue) -> dict:
    return {"modulus": lv.modulus, "L": lv.value, "route": lv.route.value}


def _cycle_dict(c: graph.CycleRecord) -> dict:
    out = {"representative": c.representative, "length": c.length}
    if c.elements is not None:
        out["elements"] = list(c.elements)
    return out


def render_report(report: harness.MismatchReport, fmt: str) -> str:
    if fmt == "json":
        return dump_json(report.to_dict())
    if fmt == "csv":
        return _csv(
            ["input", "expected", "got"],
            [[_cell(m.input), _cell(m.expected), _cell(m.got)] for m in report.mismatches],
        )
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} {report.subject}: {report.checked} checked, {len(report.mismatches)} mismatches"]
    for m in report.mismatches:
        lines.append(f"  input={_cell(m.input)} expected={_cell(m.expected)} got={_cell(m.got)}")
    lines.extend(f"  note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_l(args) -> int:
    m = args.m
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if args.route == "oracle":
        lv = LValue(m, graph.l_bruteforce(m), Route.BRUTE_FORCE)
    else:
        lv = l_of(m)
    d = _lvalue_dict(lv)
    if args.format == "json":
        out = dump_json(d)
    elif args.format == "csv":
        out = _csv(["modulus", "L", "route"], [[d["modulus"], d["L"], d["route"]]])
    else:
        out = f"L({m}) = {lv.value}  [{lv.route.value}]\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_cycles(args) -> int:
    m = args.m
    if args.largest:
        cycles = graph.largest_cycles(m)
        summary = None
    else:
        summary = graph.enumerate_cycles(m, elements=args.elements)
        cycles = list(summary.cycles)
    if args.largest and not args.elements:
        cycles = [graph.CycleRecord(c.representative, c.length) for c in cycles]
    if args.format == "json":
        doc = {"modulus": m, "cycles": [_cycle_dict(c) for c in cycles]}
        if summary is not None:
            doc["max_length"] = summary.max_length
            doc["on_cycle_count"] = summary.on_cycle_count
        out = dump_json(doc)
    elif args.format == "csv":
        out = _csv(
            ["representative", "length", "elements"],
            [
                [c.representative, c.length, ";".join(map(str, c.elements or ()))]
                for c in cycles
            ],
        )
    else:
        lines = []
        if summary is not None:
            lines.append(
                f"modulus {m}: {len(cycles)} cycles, L = {summary.max_length},"
                f" {summary.on_cycle_count} residues on cycles"
            )
        for c in cycles:
            tail = "" if c.elements is None else "  " + " ".join(map(str, c.elements))
            lines.append(f"{c.representative}\tlength {c.length}{tail}")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def _finish(report: harness.MismatchReport, fmt: str) -> int:
    sys.stdout.write(render_report(report, fmt))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_table(args) -> int:
    return _finish(harness.check_fixture(args.name), args.format)


def cmd_classify(args) -> int:
    groups = harness.classify_sweep(args.limit)
    report = harness.check_fixture("ratio-classes", classify_limit=args.limit)
    if args.format == "json":
        doc = {
            "limit": args.limit,
            "groups": [{"k": k, "primes": ps} for k, ps in groups.items()],
            "report": report.to_dict(),
        }
        sys.stdout.write(dump_json(doc))
    elif args.format == "csv":
        sys.stdout.write(_csv(["k", "primes"], [[k, ";".join(map(str, ps))] for k, ps in groups.items()]))
    else:
        for k, ps in groups.items():
            sys.stdout.write(f"k={k}: {', '.join(map(str, ps))}\n")
        sys.stdout.write(render_report(report, "text"))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_verify(args) -> int:
    report = harness.sweep(args.min, args.max, use_oracle=args.oracle, jobs=args.jobs)
    return _finish(report, args.format)


def cmd_oeis(args) -> int:
    return _finish(harness.oeis_compare(args.path, offset=args.offset_rule), args.format)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqcycles", description="Longest cycles of the squaring map modulo m."
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("l", parents=[fmt], help="compute L(m)")
    p.add_argument("m", type=_positive)
    p.add_argument("--route", choices=("auto", "formula", "oracle"), default="auto")
    p.set_defaults(func=cmd_l)

    p = sub.add_parser("cycles", parents=[fmt], help="list cycles of the squaring map")
    p.add_argument("m", type=_positive)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--largest", action="store_true", help="only cycles of maximum length")
    which.add_argument("--all", action="store_true", help="every cycle (default)")
    p.add_argument("--elements", action="store_true", help="print full orbits")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("table", parents=[fmt], help="replay an embedded table")
    p.add_argument("name", choices=harness.FIXTURE_NAMES)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", parents=[fmt], help="group primes by the L(p^2) ratio class")
    p.add_argument("--limit", type=_positive, default=360)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[fmt], help="sweep formula against a reference")
    p.add_argument("--min", type=_positive, default=1)
    p.add_argument("--max", type=_positive, default=2000)
    p.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", parents=[fmt], help="compare a b-file of L(p) values")
    p.add_argument("path")
    p.add_argument("--offset-rule", type=int, default=1, help="b-file index of the prime 2")
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (graph.OracleCapError, OverflowError) as exc:
        print(f"sqcycles: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError, OSError) as exc:
        print(f"sqcycles: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
