"""``distough`` command line.

Exit status: 0 when every verdict passed, 1 on any fail/violation/error
record, 3 when the only problem is an incomplete (budget-capped or
spectral-only) result, 2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, TextIO

from .errors import DistoughError
from .extremal import FAMILIES, FamilyParams, build_family
from .graph import format_graph6, min_degree, parse_graph6
from .inequalities import DEFAULT_GRIDS, Grid, proof_inequality_suite
from .spectral import COMPARE_SLACK
from .verify import (
    LEMMAS,
    CheckRecord,
    check_theorem_graph,
    cmd_check_lemma,
    cmd_check_theorem,
    cmd_metrics,
    cmd_search_counterexample,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3


def _cell(v):
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, default=str)
    return "" if v is None else v


class Writer:
    def __init__(self, fmt: str, out: TextIO):
        self.fmt, self.out = fmt, out
        self._csv: csv.DictWriter | None = None

    def write(self, row: dict) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(row, default=str) + "\n")
            return
        if self._csv is None:
            self._csv = csv.DictWriter(self.out, fieldnames=list(row), lineterminator="\n")
            self._csv.writeheader()
        self._csv.writerow({k: _cell(v) for k, v in row.items()})


def _lines(path: str | None) -> Iterable[str]:
    if path is None or path == "-":
        return sys.stdin
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        return fh.readlines()


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--input", default=d(None), help="graph6 file, or - for stdin")
    p.add_argument("--format", choices=("csv", "jsonl"), default=d("csv"))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget", type=int, default=d(None), help="evaluation budget")
    p.add_argument("--tolerance", type=float, default=d(COMPARE_SLACK), help="slack for radius comparisons")
    p.add_argument("--warn-incomplete", action="store_true", default=d(False), help="exit 0 on incomplete results")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="distough", description="Distance spectral radius and toughness checks.")
    _add_globals(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kw)
        _add_globals(p, suppress=True)
        return p

    add("metrics", help="per-graph metrics for a graph6 stream")

    p = add("check-lemma", help="run a lemma property suite")
    p.add_argument("lemma", choices=LEMMAS)

    for name in ("check-theorem", "search"):
        p = add(name, help="check a theorem on input graphs" if name == "check-theorem" else "counterexample search")
        p.add_argument("theorem", type=int, choices=(1, 2, 3))
        p.add_argument("--tau", type=int, help="integer tau for theorem 2")
        p.add_argument("--tau-den", type=int, help="integer 1/tau for theorem 3")
        p.add_argument("--n", type=int, help="graph order (default: smallest admissible)")
        if name == "search":
            p.add_argument("--strategy", choices=("random", "exhaustive"), default="random")
            p.add_argument("--samples", type=int, default=10_000)

    p = add("inequalities", help="sweep the auxiliary inequalities of a theorem")
    p.add_argument("theorem", type=int, choices=(1, 2, 3))
    p.add_argument("--param-min", type=int, help="smallest delta / tau / 1/tau")
    p.add_argument("--param-max", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int, default=200)

    p = add("construct", help="build a named family and print its graph6")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--tau-num", type=int, default=1)
    p.add_argument("--tau-den", type=int, default=1)
    p.add_argument("--parts", type=lambda t: tuple(int(x) for x in t.split(",")), default=(), help="comma-separated part sizes")
    return ap


def _theorem_param(args) -> int | None:
    if args.theorem == 2:
        return args.tau
    if args.theorem == 3:
        return args.tau_den
    return None


def _status(fail: bool, incomplete: bool, args) -> int:
    if fail:
        return EXIT_FAIL
    if incomplete and not args.warn_incomplete:
        return EXIT_INCOMPLETE
    return EXIT_OK


def _run(args, out: Writer) -> int:
    cmd = args.command
    if cmd == "metrics":
        fail = False
        for rec in cmd_metrics(_lines(args.input)):
            fail |= rec.verdict == "error"
            out.write(rec.row())
        return _status(fail, False, args)

    if cmd == "check-lemma":
        graphs = None
        if args.lemma == "le1" and args.input is not None:
            graphs = [parse_graph6(line) for line in _lines(args.input) if line.strip()]
        reports = cmd_check_lemma(args.lemma, graphs, seed=args.seed, budget=args.budget)
        for r in reports:
            out.write(r.row())
        return _status(any(r.violations for r in reports), any(r.incomplete for r in reports), args)

    if cmd == "check-theorem":
        param = _theorem_param(args)
        fail = incomplete = False
        if args.input is None:
            records: Iterable[CheckRecord] = cmd_check_theorem(args.theorem, None, param, args.n, args.tolerance)
        else:
            records = _check_stream(args.theorem, _lines(args.input), param, args.tolerance)
        for rec in records:
            out.write(rec.row())
            if rec.verdict == "error":
                fail = True
            elif rec.verdict == "fail":
                fail = True
                print(f"counterexample: {rec.repro}", file=sys.stderr)
                break
            incomplete |= rec.verdict == "spectral-only"
        return _status(fail, incomplete, args)

    if cmd == "search":
        rep = cmd_search_counterexample(
            args.theorem,
            args.strategy,
            param=_theorem_param(args),
            n=args.n,
            samples=args.samples,
            seed=args.seed,
            slack=args.tolerance,
            budget=args.budget,
        )
        for rec in rep.violations + rep.spectral_only_records:
            out.write(rec.row())
        print(json.dumps(rep.row()), file=sys.stderr)
        return _status(not rep.ok, not rep.complete, args)

    if cmd == "inequalities":
        base = DEFAULT_GRIDS[args.theorem]
        grid = Grid(
            base.param_min if args.param_min is None else args.param_min,
            base.param_max if args.param_max is None else args.param_max,
            args.n_max,
            args.n_min,
        )
        rep = proof_inequality_suite(args.theorem, grid)
        for row in rep.rows():
            out.write(row)
        return _status(not rep.ok, not rep.complete, args)

    if cmd == "construct":
        p = FamilyParams(args.family, args.n, args.delta, args.s, args.c, args.tau_num, args.tau_den, args.parts)
        g = build_family(p)
        out.write({"family": args.family, "graph6": format_graph6(g), "n": g.n, "m": g.m, "min_degree": min_degree(g)})
        return EXIT_OK
    raise AssertionError(cmd)


def _check_stream(theorem: int, lines: Iterable[str], param, slack) -> Iterable[CheckRecord]:
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except (DistoughError, ValueError) as exc:
            yield CheckRecord(text, f"theorem{theorem}", "error", detail=f"line {lineno}: {exc}")
            continue
        yield check_theorem_graph(theorem, g, param, slack)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args, Writer(args.format, sys.stdout))
    except DistoughError as exc:
        print(f"distough: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
