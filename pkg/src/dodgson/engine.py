"""The condensation pipeline: repeated 2x2 shrinking with exact division.

Starting from the n x n input, each step replaces the current k x k level
by the (k-1) x (k-1) matrix of its adjacent 2x2 determinants; from the
step that produces the level of size n-2 onward, every entry is then
divided -- exactly -- by the matching interior entry of the level two
sizes up.  The final 1x1 level is the determinant (a polynomial when the
matrix carries symbolic entries; its value at the limit point otherwise).

Entries within one level are independent of one another, so a level could
be condensed in parallel; levels themselves are strictly sequential.

An identically-zero divisor aborts the run with InteriorZeroError carrying
a ZeroReport (which level held the zero and where), plus the partial trace
so the repair layer can decide what to edit.  A divisor that is a nonzero
polynomial is never a problem even if it vanishes at the limit point: the
division is polynomial division and stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping

from .matrix import SymMatrix
from .oracle import all_minors_level
from .poly import DivisorZeroError, Poly

if TYPE_CHECKING:
    from .repair import RepairPlan


@dataclass(frozen=True)
class ZeroReport:
    """An identically-zero divisor: the size of the level holding it and
    its 1-based position within that level."""

    level: int
    position: tuple[int, int]


class InteriorZeroError(DivisorZeroError):
    """Condensation hit an identically-zero interior entry."""

    def __init__(self, report: ZeroReport, trace: "CondensationTrace | None" = None):
        i, j = report.position
        super().__init__(
            f"zero interior entry at ({i},{j}) of the {report.level}x{report.level} level"
        )
        self.report = report
        self.trace = trace


class LevelUnavailableError(ValueError):
    """A requested condensation level was never produced by the run."""


@dataclass
class CondensationTrace:
    """Everything a run did: the levels from size n down to 1 (as far as
    they were produced), and instrumented operation counts."""

    levels: list[SymMatrix] = field(default_factory=list)
    mult_count: int = 0
    div_count: int = 0
    repairs: "RepairPlan | None" = None

    def level_of_size(self, size: int) -> SymMatrix:
        for m in self.levels:
            if m.n == size:
                return m
        raise LevelUnavailableError(f"no level of size {size} in this trace")

    def final(self) -> Poly:
        last = self.levels[-1]
        if last.n != 1:
            raise LevelUnavailableError("run did not reach the 1x1 level")
        return last.at(1, 1)

    def to_dict(self) -> dict:
        return {
            "levels": [m.to_json_dict() for m in self.levels],
            "mult_count": self.mult_count,
            "div_count": self.div_count,
            "repairs": self.repairs.to_dict() if self.repairs else None,
        }


@dataclass(frozen=True)
class RunResult:
    value: Fraction
    trace: CondensationTrace


def condense_once(cur: SymMatrix, trace: CondensationTrace | None = None) -> SymMatrix:
    """One condensation step: entry (i,j) = 2x2 determinant of the block at
    (i,j).  Two multiplications per entry are added to the trace."""
    n = cur.n
    if n < 2:
        raise ValueError("cannot condense a 1x1 matrix")
    rows = cur.rows()
    out: list[list[Poly]] = []
    for i in range(n - 1):
        out_row: list[Poly] = []
        for j in range(n - 1):
            out_row.append(rows[i][j] * rows[i + 1][j + 1] - rows[i][j + 1] * rows[i + 1][j])
            if trace is not None:
                trace.mult_count += 2
        out.append(out_row)
    return SymMatrix(out)


def divide_by_interior(
    raw: SymMatrix, prev_prev: SymMatrix, trace: CondensationTrace | None = None
) -> SymMatrix:
    """Divide each entry of raw by the matching interior entry of the level
    two sizes up.  Zero divisors raise InteriorZeroError located in
    prev_prev's coordinates; inexact division propagates untouched."""
    if prev_prev.n != raw.n + 2:
        raise ValueError(
            f"divisor level must be {raw.n + 2}x{raw.n + 2}, got {prev_prev.n}x{prev_prev.n}"
        )
    divisors = prev_prev.interior()
    for i in range(1, raw.n + 1):
        for j in range(1, raw.n + 1):
            if divisors.at(i, j).is_zero():
                raise InteriorZeroError(
                    ZeroReport(level=prev_prev.n, position=(i + 1, j + 1))
                )
    out: list[list[Poly]] = []
    for i in range(1, raw.n + 1):
        out_row: list[Poly] = []
        for j in range(1, raw.n + 1):
            out_row.append(raw.at(i, j).exact_div(divisors.at(i, j)))
            if trace is not None:
                trace.div_count += 1
        out.append(out_row)
    return SymMatrix(out)


def run(
    a: SymMatrix, limit_point: Mapping[int, Fraction] | None = None
) -> RunResult:
    """Condense a all the way down and evaluate the 1x1 level.

    limit_point must bind every symbolic variable of a (it may be omitted
    for constant matrices).  On an interior zero the raised
    InteriorZeroError carries the partial trace.
    """
    point = dict(limit_point or {})
    trace = CondensationTrace(levels=[a])
    while trace.levels[-1].n > 1:
        raw = condense_once(trace.levels[-1], trace)
        if raw.n <= a.n - 2:
            try:
                raw = divide_by_interior(raw, trace.levels[-2], trace)
            except InteriorZeroError as exc:
                raise InteriorZeroError(exc.report, trace) from None
        trace.levels.append(raw)
    return RunResult(value=trace.final().evaluate(point), trace=trace)


def predicted_mult_count(n: int) -> int:
    """Closed-form multiplication count of a clean run: 2 per 2x2
    determinant, (k-1)^2 determinants per step, summed over all levels."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return (2 * n**3 - 3 * n**2 + n) // 3


def verify_minor_grid(a: SymMatrix, k: int) -> bool:
    """Check that after k condensations every entry of the level of size
    n-k equals the corresponding (k+1)x(k+1) contiguous minor of a.

    Runs the engine fresh (no repairs); raises LevelUnavailableError when
    the run dies before that level exists.
    """
    if not 1 <= k <= a.n - 1:
        raise ValueError(f"k must be in 1..{a.n - 1}, got {k}")
    try:
        trace = run(a).trace
    except InteriorZeroError as exc:
        if exc.trace is None:
            raise
        trace = exc.trace
    level = trace.level_of_size(a.n - k)
    return level == all_minors_level(a, k)
