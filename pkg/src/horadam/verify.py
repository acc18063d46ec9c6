"""Grid verification: run identity checks over parameter boxes in a fixed order."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import DegenerateRootsError, PoleError
from .horadam_octonion import og_binet_check, og_cassini, og_genfun_check, og_norm, og_sum
from .report import (
    EQUAL,
    MISMATCH,
    SKIPPED_DEGENERATE,
    SKIPPED_POLE,
    IdentityReport,
)
from .sequence import (
    HoradamParams,
    w_binet_check,
    w_cassini_check,
    w_genfun_check,
    w_sum_check,
)

_CHECKS = {
    "binet": og_binet_check,
    "cassini_left": lambda params, n: og_cassini(params, n, "left"),
    "cassini_right": lambda params, n: og_cassini(params, n, "right"),
    "genfun": og_genfun_check,
    "norm": og_norm,
    "sum": og_sum,
    "w_binet": w_binet_check,
    "w_cassini": w_cassini_check,
    "w_genfun": w_genfun_check,
    "w_sum": w_sum_check,
}
IDENTITIES = tuple(sorted(_CHECKS))
_NEEDS_N_GE_1 = {"cassini_left", "cassini_right", "w_cassini"}


@dataclass(frozen=True)
class GridSpec:
    """Inclusive integer intervals for each parameter plus an index bound."""

    a_range: tuple[int, int] = (-2, 2)
    b_range: tuple[int, int] = (-2, 2)
    p_range: tuple[int, int] = (-2, 2)
    q_range: tuple[int, int] = (-2, 2)
    n_max: int = 15
    identities: tuple[str, ...] = IDENTITIES

    def __post_init__(self):
        for name in ("a_range", "b_range", "p_range", "q_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo} > {hi}")
        if self.n_max < 0:
            raise ValueError("n_max must be non-negative")
        unknown = set(self.identities) - set(IDENTITIES)
        if unknown:
            raise ValueError(f"unknown identities: {', '.join(sorted(unknown))}")
        if not self.identities:
            raise ValueError("at least one identity is required")
        object.__setattr__(self, "identities", tuple(sorted(set(self.identities))))

    def points(self) -> Iterator[HoradamParams]:
        """Parameter points in lexicographic (a, b, p, q) order."""
        ranges = [range(lo, hi + 1) for lo, hi in (self.a_range, self.b_range, self.p_range, self.q_range)]
        for a, b, p, q in product(*ranges):
            yield HoradamParams(a, b, p, q)


def check(identity: str, params: HoradamParams, n: int) -> IdentityReport:
    """Run one identity at one point, turning excluded parameters into skips."""
    try:
        return _CHECKS[identity](params, n)
    except DegenerateRootsError:
        return IdentityReport.skipped(identity, params, n, SKIPPED_DEGENERATE)
    except PoleError:
        return IdentityReport.skipped(identity, params, n, SKIPPED_POLE)


def evaluate_point(params: HoradamParams, n_max: int, identities: Iterable[str]) -> list[IdentityReport]:
    reports = []
    for n in range(n_max + 1):
        for identity in identities:
            if n == 0 and identity in _NEEDS_N_GE_1:
                continue
            reports.append(check(identity, params, n))
    return reports


def _evaluate(args):
    return evaluate_point(*args)


def run_grid(grid: GridSpec, jobs: int = 1) -> Iterator[IdentityReport]:
    """Yield reports ordered by (a, b, p, q, n, identity) whatever ``jobs`` is."""
    tasks = ((params, grid.n_max, grid.identities) for params in grid.points())
    if jobs <= 1:
        for task in tasks:
            yield from _evaluate(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # Executor.map yields in submission order
        for reports in pool.map(_evaluate, tasks, chunksize=8):
            yield from reports


class Tally:
    def __init__(self):
        self.counts = Counter()

    def add(self, report: IdentityReport) -> None:
        self.counts[report.verdict] += 1

    @property
    def mismatches(self) -> int:
        return self.counts[MISMATCH]

    def summary_line(self) -> str:
        total = sum(self.counts.values())
        return (
            f"summary total={total} equal={self.counts[EQUAL]} mismatch={self.counts[MISMATCH]} "
            f"skipped_degenerate={self.counts[SKIPPED_DEGENERATE]} skipped_pole={self.counts[SKIPPED_POLE]}"
        )


def write_report(grid: GridSpec, out, jobs: int = 1) -> Tally:
    """Stream one line per report plus the summary footer to ``out``."""
    tally = Tally()
    for report in run_grid(grid, jobs=jobs):
        tally.add(report)
        out.write(report.to_line() + "\n")
    out.write(tally.summary_line() + "\n")
    return tally
