"""Command-line front end.

    wedgelab build simplex:3 --k 2
    wedgelab homology complete:5 --k 2
    wedgelab homology simplex:3 --k 2 --unordered
    wedgelab verify --max-n 6 --with-homology --format csv
    wedgelab egf --max-degree 12
    wedgelab table --max-n 8

Data goes to stdout (or --out), diagnostics to stderr. Integers in JSON are
decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .config import build_ordered, build_unordered
from .formulas import betti_closed, euler_from_cells, euler_from_formula
from .homology import MalformedComplexError, complex_homology
from .series import MAX_EGF_DEGREE, egf_series, euler_from_egf
from .simplicial import SimplicialComplex, complete_graph, full_simplex, read_facets, skeleton
from .verify import default_jobs, run_verification

log = logging.getLogger("wedgelab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceSpec:
    kind: str
    args: tuple
    text: str

    def build(self) -> SimplicialComplex:
        if self.kind == "simplex":
            return full_simplex(self.args[0])
        if self.kind == "complete":
            return complete_graph(self.args[0])
        if self.kind == "skeleton":
            return skeleton(full_simplex(self.args[0]), self.args[1])
        return read_facets(self.args[0])


def parse_space(text: str) -> SpaceSpec:
    """Parse ``simplex:n``, ``complete:m``, ``skeleton:n:d`` or ``file:path``."""
    kind, _, rest = text.partition(":")
    if kind == "file":
        path = Path(rest)
        if not rest or not path.is_file():
            raise SpecError(f"no such file: {rest!r}")
        return SpaceSpec(kind, (path,), text)
    arity = {"simplex": 1, "complete": 1, "skeleton": 2}.get(kind)
    if arity is None:
        raise SpecError(f"unknown space kind {kind!r} (use simplex, complete, skeleton or file)")
    parts = rest.split(":") if rest else []
    if len(parts) != arity:
        raise SpecError(f"{kind} takes {arity} parameter(s), got {text!r}")
    try:
        nums = tuple(int(p) for p in parts)
    except ValueError:
        raise SpecError(f"non-integer parameter in {text!r}") from None
    if any(v < 0 for v in nums):
        raise SpecError(f"parameters must be non-negative in {text!r}")
    if kind == "complete" and nums[0] < 1:
        raise SpecError("complete graph needs at least one vertex")
    return SpaceSpec(kind, nums, text)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _complex(args):
    X = args.space.build()
    return build_unordered(X, args.k) if args.unordered else build_ordered(X, args.k)


def cmd_build(args) -> int:
    C = _complex(args)
    summary = {
        "space": args.space.text,
        "k": str(args.k),
        "ordered": not args.unordered,
        "f_vector": [str(c) for c in C.f_vector()],
        "dim": str(C.dim),
        "euler": str(C.euler()),
    }
    _emit(json.dumps(summary, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_homology(args) -> int:
    C = _complex(args)
    H = complex_homology(C, args.degrees)
    log.info("%s k=%d %s: %s", args.space.text, args.k, "UD" if args.unordered else "D", H)
    _emit(json.dumps(H.to_json(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    table = run_verification(
        args.max_n,
        args.max_k,
        args.with_homology,
        jobs=args.jobs,
        fault=[tuple(args.inject_fault)] if args.inject_fault else (),
    )
    text = table.to_csv() if args.format == "csv" else table.to_json() + "\n"
    _emit(text, args.out)
    for row in table.failures():
        for p in row.problems:
            print(f"FAIL k={row.k} n={row.n}: {p}", file=sys.stderr)
    return EXIT_OK if table.passed else EXIT_FAIL


def _write_rows(fields: list[str], rows: list[dict], fmt: str, out: str | None) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue(), out)
    else:
        _emit(json.dumps({"rows": rows}, indent=2) + "\n", out)


def cmd_egf(args) -> int:
    D = args.max_degree
    if not 0 <= D <= MAX_EGF_DEGREE:
        print(f"error: --max-degree must lie in [0, {MAX_EGF_DEGREE}]", file=sys.stderr)
        return EXIT_USAGE
    series = egf_series(D)
    rows = []
    ok = True
    for k in range(D + 1):
        for m in range(D - k + 1):
            chi = euler_from_egf(series, k, m)
            cells = euler_from_cells(k, m - 1)
            ok &= chi == cells
            rows.append({"k": str(k), "n": str(m - 1), "euler_egf": str(chi), "euler_cells": str(cells)})
    _write_rows(["k", "n", "euler_egf", "euler_cells"], rows, args.format, args.out)
    if not ok:
        print("FAIL: series coefficients disagree with cell counts", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args) -> int:
    rows = []
    for n in range(1, args.max_n + 1):
        for k in range(1, n + 2):
            rows.append(
                {
                    "k": str(k),
                    "n": str(n),
                    "sphere_dim": str(n - k + 1),
                    "betti": str(betti_closed(k, n)),
                    "euler": str(euler_from_formula(k, n)),
                }
            )
    _write_rows(["k", "n", "sphere_dim", "betti", "euler"], rows, args.format, args.out)
    return EXIT_OK


def _space_arg(text: str) -> SpaceSpec:
    try:
        return parse_space(text)
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _pair(text: str) -> tuple[int, int]:
    try:
        k, n = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected K,N") from None
    return k, n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedgelab", description=__doc__.split("\n\n")[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def complex_opts(sp):
        sp.add_argument("space", type=_space_arg, help="simplex:N | complete:M | skeleton:N:D | file:PATH")
        sp.add_argument("--k", type=_nonneg, required=True, help="number of points")
        sp.add_argument("--unordered", action="store_true", help="use the quotient UD_k")
        sp.add_argument("--out", help="output path (default stdout)")

    sp = sub.add_parser("build", help="cell counts of D_k(X) or UD_k(X)")
    complex_opts(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("homology", help="integer homology of D_k(X) or UD_k(X)")
    complex_opts(sp)
    sp.add_argument("--degrees", type=_nonneg, nargs="+", help="only these degrees")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("verify", help="cross-check formulas, recurrence and homology")
    sp.add_argument("--max-n", type=_nonneg, default=6)
    sp.add_argument("--max-k", type=_nonneg)
    sp.add_argument("--with-homology", action="store_true")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (env WEDGELAB_JOBS overrides)")
    sp.add_argument("--out")
    sp.add_argument("--inject-fault", type=_pair, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("egf", help="Euler characteristics from the two-variable EGF")
    sp.add_argument("--max-degree", type=int, default=12)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_egf)

    sp = sub.add_parser("table", help="closed-form Betti numbers and Euler characteristics")
    sp.add_argument("--max-n", type=_nonneg, default=8)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "verify" and (args.jobs is None or os.environ.get("WEDGELAB_JOBS")):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except MalformedComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
