"""Cross-check of closed forms, recurrences, cell counts and computed homology.

One row per (k, n) with 2 <= k <= n. Each row compares

* the closed-form Betti number against the recurrence (base beta(j, j-1) = j!),
* the Euler characteristic from cell counts against 1 + (-1)^(n-k+1) beta,
* optionally, SNF homology of the built complex against the wedge-of-spheres
  shape with the closed-form number of spheres.

The recurrence under the alternative base j! - 1 is recorded next to it but
never affects the status.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .config import build_ordered, corrupt
from .formulas import (
    betti_closed,
    betti_recurrence,
    euler_from_cells,
    euler_from_formula,
    reduced_factorial_base,
)
from .homology import MalformedComplexError, complex_homology
from .simplicial import full_simplex

__all__ = ["BettiRow", "BettiTable", "run_verification", "homology_check", "default_jobs", "CSV_FIELDS"]

CSV_FIELDS = [
    "k",
    "n",
    "betti_formula",
    "betti_recurrence",
    "betti_homology",
    "euler_cells",
    "euler_formula",
    "status",
    "betti_recurrence_alt",
]


@dataclass
class BettiRow:
    k: int
    n: int
    betti_formula: int
    betti_recurrence: int
    betti_recurrence_alt: int
    euler_cells: int
    euler_formula: int
    betti_homology: Optional[int] = None
    problems: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.problems else "pass"

    def as_record(self) -> dict[str, str]:
        rec = {}
        for name in CSV_FIELDS:
            v = getattr(self, name)
            rec[name] = "" if v is None else str(v)
        return rec


@dataclass
class BettiTable:
    rows: list[BettiRow]
    with_homology: bool

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows)

    def __getitem__(self, kn: tuple[int, int]) -> BettiRow:
        for r in self.rows:
            if (r.k, r.n) == kn:
                return r
        raise KeyError(kn)

    def failures(self) -> list[BettiRow]:
        return [r for r in self.rows if r.problems]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            w.writerow(r.as_record())
        return buf.getvalue()

    def to_json(self) -> str:
        recs = []
        for r in self.rows:
            rec: dict = r.as_record()
            if r.betti_homology is None:
                rec["betti_homology"] = None
            recs.append(rec)
        return json.dumps({"rows": recs, "passed": self.passed}, indent=2)


def homology_check(k: int, n: int, fault: bool = False) -> tuple[Optional[int], int | None, list[str]]:
    """Build D_k(Delta^n), compute its homology and test the wedge shape.

    Returns ``(top_rank, cell_euler, problems)``.
    """
    C = build_ordered(full_simplex(n), k)
    if fault:
        C = corrupt(C, min(2, C.dim) or 1)
    problems = []
    try:
        H = complex_homology(C)
    except MalformedComplexError as exc:
        return None, C.euler(), [f"malformed chain complex: {exc}"]
    top = n - k + 1
    expected = betti_closed(k, n)
    for h in H.degrees:
        if h.torsion:
            problems.append(f"torsion {list(h.torsion)} in degree {h.d}")
    if top > 0:
        if H[0].rank != 1:
            problems.append(f"H0 has rank {H[0].rank}, expected 1")
        for d in range(1, top):
            if H[d].rank:
                problems.append(f"H{d} has rank {H[d].rank}, expected 0")
    elif H[0].rank != expected + 1:
        problems.append(f"H0 has rank {H[0].rank}, expected {expected + 1}")
    top_rank = H[top].rank if top > 0 else H[0].rank - 1
    if top_rank != expected:
        problems.append(f"rank H{top} = {top_rank}, closed form gives {expected}")
    return top_rank, C.euler(), problems


def _homology_job(args: tuple[int, int, bool]):
    return homology_check(*args)


def default_jobs() -> int:
    env = os.environ.get("WEDGELAB_JOBS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def run_verification(
    max_n: int,
    max_k: int | None = None,
    with_homology: bool = False,
    *,
    jobs: int | None = None,
    fault: Iterable[tuple[int, int]] = (),
) -> BettiTable:
    """Fill the table for 2 <= k <= min(n, max_k), 2 <= n <= max_n.

    ``fault`` names (k, n) cells whose boundary gets a flipped sign before the
    homology step; it exists for negative tests.
    """
    max_k = max_n if max_k is None else max_k
    faulty = set(fault)
    pairs = [(k, n) for n in range(2, max_n + 1) for k in range(2, min(n, max_k) + 1)]
    rows = []
    for k, n in pairs:
        b = betti_closed(k, n)
        rec = betti_recurrence(k, n)
        row = BettiRow(
            k=k,
            n=n,
            betti_formula=b,
            betti_recurrence=rec,
            betti_recurrence_alt=betti_recurrence(k, n, reduced_factorial_base),
            euler_cells=euler_from_cells(k, n),
            euler_formula=euler_from_formula(k, n),
        )
        if rec != b:
            row.problems.append(f"recurrence gives {rec}, closed form {b}")
        if row.euler_cells != row.euler_formula:
            row.problems.append(f"Euler from cells {row.euler_cells} != from formula {row.euler_formula}")
        rows.append(row)

    if with_homology:
        jobs = jobs or default_jobs()
        args = [(k, n, (k, n) in faulty) for k, n in pairs]
        if jobs > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_homology_job, args))
        else:
            results = [_homology_job(a) for a in args]
        for row, (top_rank, cell_euler, problems) in zip(rows, results):
            row.betti_homology = top_rank
            row.problems.extend(problems)
            if cell_euler != row.euler_cells:
                row.problems.append(f"alternating f-vector sum {cell_euler} != {row.euler_cells}")
    return BettiTable(rows, with_homology)
