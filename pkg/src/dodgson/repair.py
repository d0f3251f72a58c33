"""Detection and repair of the zero divisors that stall condensation.

A zero interior entry at the level of size m is, by the minor
characterization of condensation levels, a vanishing (n-m+1)x(n-m+1)
contiguous minor of the original matrix; ``trace_window`` recovers that
block.  All sound strategies edit the ORIGINAL matrix, restart the run,
and finally evaluate the symbolic result at a limit point that restores
the original entries:

* perturb  -- add a fresh variable to one entry of the traced block
              (deterministically its top-left corner), bound to 0.
* replace  -- swap a nonzero constant entry of the traced block for a
              fresh variable bound to its original value.
* zeros    -- swap every identically-zero interior entry of the original
              for a fresh variable bound to 0, all in one round.
* rowops   -- add an adjacent row onto the row of a literal interior
              zero (determinant-preserving); after a bounded number of
              additions, or for zeros that only appear at deeper levels,
              fall back to perturbation.
* shift    -- cyclically rotate rows/columns until the interior is
              zero-free, tracking the permutation sign; purely a
              relabeling, no symbolic variables.

``intermediate_replace_unsound`` deliberately breaks the rule and edits
the zero inside the intermediate level instead.  Many different matrices
share one intermediate, so the polynomial it produces belongs to the
whole family rather than to the input; the result is returned together
with a soundness flag instead of being trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .engine import (
    CondensationTrace,
    InteriorZeroError,
    ZeroReport,
    condense_once,
    divide_by_interior,
    run,
)
from .matrix import SymMatrix, Window
from .oracle import det_bareiss
from .poly import Poly


class Strategy(str, Enum):
    """Repair strategies; values double as the CLI/service spelling."""

    FAIL = "fail"
    CYCLIC_SHIFT = "shift"
    ROW_OP_CLEAR = "rowops"
    PERTURB_ORIGINAL = "perturb"
    REPLACE_ENTRY = "replace"
    REPLACE_ZEROS = "zeros"
    INTERMEDIATE_REPLACE = "intermediate-unsound"


SOUND_STRATEGIES = (
    Strategy.CYCLIC_SHIFT,
    Strategy.ROW_OP_CLEAR,
    Strategy.PERTURB_ORIGINAL,
    Strategy.REPLACE_ENTRY,
    Strategy.REPLACE_ZEROS,
)


class RoundsExhaustedError(RuntimeError):
    """The repair loop hit its round cap without a clean run."""


class StrategyInapplicableError(RuntimeError):
    """The chosen strategy has no move left for this matrix."""


@dataclass
class Edit:
    """One entry rewrite: where, what it was, what it became.  level is the
    size of the condensation level that was edited; None means the
    original matrix."""

    position: tuple[int, int]
    before: Poly
    after: Poly
    level: int | None = None

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "position": list(self.position),
            "before": self.before.to_text(),
            "after": self.after.to_text(),
        }


@dataclass
class RepairPlan:
    strategy: Strategy
    edits: list[Edit] = field(default_factory=list)
    sign: int = 1
    limit_point: dict[int, Fraction] = field(default_factory=dict)
    rounds: int = 0
    row_shift: int = 0
    col_shift: int = 0

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "edits": [e.to_dict() for e in self.edits],
            "sign": self.sign,
            "bindings": {f"x{v}": str(val) for v, val in self.limit_point.items()},
            "rounds": self.rounds,
            "row_shift": self.row_shift,
            "col_shift": self.col_shift,
        }


@dataclass(frozen=True)
class UnsoundResult:
    """Outcome of the intermediate-replacement experiment."""

    value: Fraction
    sound: bool
    plan: RepairPlan
    trace: CondensationTrace


# -- primitive edits ----------------------------------------------------------


def find_interior_zeros(m: SymMatrix) -> list[tuple[int, int]]:
    """Positions (1-based, row-major) of identically-zero interior entries."""
    inner = m.interior()
    return [
        (i + 1, j + 1)
        for i in range(1, inner.n + 1)
        for j in range(1, inner.n + 1)
        if inner.at(i, j).is_zero()
    ]


def trace_window(zero: ZeroReport, n: int) -> Window:
    """Map a zero at a condensation level back to the block of the original
    matrix whose minor vanished.  A zero in the original itself (level n)
    maps to the 1x1 window holding that entry."""
    k = n - zero.level
    if k < 0:
        raise ValueError(f"level {zero.level} is impossible for an {n}x{n} matrix")
    window = Window(zero.position[0], zero.position[1], k + 1)
    if not window.fits(n):
        raise ValueError(f"zero report {zero} is inconsistent with n={n}")
    return window


def perturb_entry(a: SymMatrix, pos: tuple[int, int], fresh: int) -> SymMatrix:
    """Add the fresh variable onto the entry at pos."""
    i, j = pos
    return a.with_entry(i, j, a.at(i, j) + Poly.variable(fresh))


def perturb_original(
    a: SymMatrix, window: Window, fresh: int
) -> tuple[SymMatrix, dict[int, Fraction]]:
    """Nudge the top-left entry of the window by a fresh variable bound to 0.

    Any entry of the block would do (the limits agree); fixing the corner
    keeps runs reproducible.
    """
    edited = perturb_entry(a, (window.row_start, window.col_start), fresh)
    return edited, {fresh: Fraction(0)}


def replace_zeros_with_variables(
    a: SymMatrix, first_fresh: int = 0
) -> tuple[SymMatrix, dict[int, Fraction]]:
    """Swap every identically-zero interior entry for a fresh variable
    (reading order), each bound to 0."""
    cur = a
    bindings: dict[int, Fraction] = {}
    index = first_fresh
    for pos in find_interior_zeros(a):
        cur = cur.with_entry(pos[0], pos[1], Poly.variable(index))
        bindings[index] = Fraction(0)
        index += 1
    return cur, bindings


def replace_entry_symbolic(
    a: SymMatrix, pos: tuple[int, int], fresh: int = 0
) -> tuple[SymMatrix, dict[int, Fraction]]:
    """Swap a nonzero constant entry for a fresh variable bound to the
    value it replaced."""
    entry = a.at(pos[0], pos[1])
    if not entry.is_constant():
        raise ValueError(f"entry {pos} is already symbolic")
    if entry.is_zero():
        raise ValueError(
            f"entry {pos} is zero; use replace_zeros_with_variables for zeros"
        )
    edited = a.with_entry(pos[0], pos[1], Poly.variable(fresh))
    return edited, {fresh: entry.constant_value()}


def cyclic_shift(
    a: SymMatrix, row_shift: int, col_shift: int
) -> tuple[SymMatrix, int]:
    """Rotate rows up by row_shift and columns left by col_shift (mod n).

    Returns the rotated matrix and the permutation sign: each unit
    rotation of n lines is an n-cycle of parity (-1)^(n-1).
    """
    n = a.n
    r, c = row_shift % n, col_shift % n
    rows = a.rows()
    shifted = [
        [rows[(i + r) % n][(j + c) % n] for j in range(n)] for i in range(n)
    ]
    sign = -1 if n % 2 == 0 and (r + c) % 2 == 1 else 1
    return SymMatrix(shifted), sign


# -- the repair loop -----------------------------------------------------------


def default_round_cap(n: int) -> int:
    # Generous: a run can report at most one new zero divisor per round and
    # there are fewer than 2n^2 interior entries across all levels.
    return 2 * n * n


def auto_repair(
    a: SymMatrix,
    strategy: Strategy | str = Strategy.PERTURB_ORIGINAL,
    max_rounds: int | None = None,
) -> tuple[Fraction, RepairPlan, CondensationTrace]:
    """Run condensation, repairing zero divisors with the chosen strategy.

    Each round edits the original matrix and restarts; the returned value
    is the final polynomial evaluated at the accumulated limit point,
    corrected by the permutation sign for shifts.  The trace's counters
    are cumulative over every attempted run.
    """
    strategy = Strategy(strategy)
    if not a.is_constant():
        raise ValueError("auto_repair expects a constant matrix")
    if strategy is Strategy.INTERMEDIATE_REPLACE:
        result = intermediate_replace_unsound(a, max_rounds)
        return result.value, result.plan, result.trace
    cap = default_round_cap(a.n) if max_rounds is None else max_rounds
    if strategy is Strategy.CYCLIC_SHIFT:
        return _repair_by_shifting(a, cap)

    plan = RepairPlan(strategy=strategy)
    cur = a
    fresh = itertools.count()
    tried_replacements: set[tuple[int, int]] = set()
    row_ops_used = 0
    spent_mults = spent_divs = 0
    while True:
        try:
            result = run(cur, plan.limit_point)
        except InteriorZeroError as exc:
            if strategy is Strategy.FAIL:
                raise
            if exc.trace is not None:
                spent_mults += exc.trace.mult_count
                spent_divs += exc.trace.div_count
            if plan.rounds >= cap:
                raise RoundsExhaustedError(
                    f"{plan.rounds} repair rounds did not clear every zero divisor"
                ) from exc
            window = trace_window(exc.report, cur.n)
            if strategy is Strategy.PERTURB_ORIGINAL:
                cur = _perturb_round(cur, window, plan, next(fresh))
            elif strategy is Strategy.REPLACE_ENTRY:
                cur = _replace_round(cur, window, plan, fresh, tried_replacements)
            elif strategy is Strategy.REPLACE_ZEROS:
                cur = _replace_zeros_round(cur, exc.report, plan, fresh)
            elif strategy is Strategy.ROW_OP_CLEAR:
                cur, row_ops_used = _row_op_round(
                    cur, window, plan, fresh, row_ops_used
                )
            plan.rounds += 1
            continue
        trace = result.trace
        trace.mult_count += spent_mults
        trace.div_count += spent_divs
        trace.repairs = plan
        return plan.sign * result.value, plan, trace


def _perturb_round(
    cur: SymMatrix, window: Window, plan: RepairPlan, fresh: int
) -> SymMatrix:
    pos = (window.row_start, window.col_start)
    before = cur.at(*pos)
    edited, bindings = perturb_original(cur, window, fresh)
    plan.edits.append(Edit(pos, before, edited.at(*pos)))
    plan.limit_point.update(bindings)
    return edited


def _replace_round(
    cur: SymMatrix,
    window: Window,
    plan: RepairPlan,
    fresh: Iterator[int],
    tried: set[tuple[int, int]],
) -> SymMatrix:
    for i in range(window.row_start, window.row_start + window.size):
        for j in range(window.col_start, window.col_start + window.size):
            if (i, j) in tried:
                continue
            entry = cur.at(i, j)
            if entry.is_constant() and not entry.is_zero():
                tried.add((i, j))
                index = next(fresh)
                edited, bindings = replace_entry_symbolic(cur, (i, j), index)
                plan.edits.append(Edit((i, j), entry, edited.at(i, j)))
                plan.limit_point.update(bindings)
                return edited
    raise StrategyInapplicableError(
        f"no nonzero constant entry left to replace in rows "
        f"{window.row_start}..{window.row_start + window.size - 1}, cols "
        f"{window.col_start}..{window.col_start + window.size - 1}"
    )


def _replace_zeros_round(
    cur: SymMatrix, report: ZeroReport, plan: RepairPlan, fresh: Iterator[int]
) -> SymMatrix:
    zeros = find_interior_zeros(cur) if cur.n >= 3 else []
    if not zeros:
        if plan.rounds == 0:
            raise StrategyInapplicableError(
                "the interior of the original matrix has no zero entries to replace"
            )
        raise StrategyInapplicableError(
            f"a zero divisor persists at the {report.level}x{report.level} "
            "level after replacing all original interior zeros"
        )
    edited = cur
    for pos in zeros:
        index = next(fresh)
        before = edited.at(*pos)
        edited = edited.with_entry(pos[0], pos[1], Poly.variable(index))
        plan.edits.append(Edit(pos, before, edited.at(*pos)))
        plan.limit_point[index] = Fraction(0)
    return edited


def _row_op_round(
    cur: SymMatrix,
    window: Window,
    plan: RepairPlan,
    fresh: Iterator[int],
    used: int,
) -> tuple[SymMatrix, int]:
    # Row additions only target zeros sitting literally in the matrix; a
    # vanishing deeper minor goes straight to perturbation.
    if window.size == 1 and used < cur.n:
        i, j = window.row_start, window.col_start
        for src in (i + 1, i - 1):
            if 1 <= src <= cur.n and not cur.at(src, j).is_zero():
                rows = [list(row) for row in cur.rows()]
                for col in range(cur.n):
                    before = rows[i - 1][col]
                    after = before + rows[src - 1][col]
                    if after != before:
                        plan.edits.append(Edit((i, col + 1), before, after))
                    rows[i - 1][col] = after
                return SymMatrix(rows), used + 1
    return _perturb_round(cur, window, plan, next(fresh)), used


def _repair_by_shifting(
    a: SymMatrix, cap: int
) -> tuple[Fraction, RepairPlan, CondensationTrace]:
    n = a.n
    candidates: list[tuple[int, int, SymMatrix, int]] = []
    for r in range(n):
        for c in range(n):
            shifted, sign = cyclic_shift(a, r, c)
            if n >= 3 and find_interior_zeros(shifted):
                continue
            candidates.append((r, c, shifted, sign))
    if not candidates:
        raise StrategyInapplicableError(
            "every cyclic row/column shift leaves a zero in the interior"
        )
    spent_mults = spent_divs = 0
    rounds = 0
    for r, c, shifted, sign in candidates:
        if rounds >= cap:
            raise RoundsExhaustedError(
                f"{rounds} shift attempts did not produce a clean run"
            )
        rounds += 1
        try:
            result = run(shifted)
        except InteriorZeroError as exc:
            if exc.trace is not None:
                spent_mults += exc.trace.mult_count
                spent_divs += exc.trace.div_count
            continue
        plan = RepairPlan(
            strategy=Strategy.CYCLIC_SHIFT,
            sign=sign,
            rounds=rounds,
            row_shift=r,
            col_shift=c,
        )
        trace = result.trace
        trace.mult_count += spent_mults
        trace.div_count += spent_divs
        trace.repairs = plan
        return sign * result.value, plan, trace
    raise StrategyInapplicableError(
        "no cyclic shift yields a pipeline free of zero divisors"
    )


# -- the deliberate anti-pattern ------------------------------------------------


def intermediate_replace_unsound(
    a: SymMatrix, max_rounds: int | None = None
) -> UnsoundResult:
    """Replace zero divisors inside the intermediate levels themselves and
    push on, evaluating the result at 0.

    This keeps the machinery humming but answers for the whole family of
    matrices sharing the edited intermediate, so the value is generally
    wrong; ``sound`` records whether it happens to agree with the Bareiss
    oracle here.  Inexact division, if the broken pipeline produces one,
    propagates to the caller.
    """
    if not a.is_constant():
        raise ValueError("the experiment expects a constant matrix")
    cap = default_round_cap(a.n) if max_rounds is None else max_rounds
    plan = RepairPlan(strategy=Strategy.INTERMEDIATE_REPLACE)
    edits: dict[tuple[int, int, int], Poly] = {}
    fresh = itertools.count()
    spent_mults = spent_divs = 0
    while True:
        try:
            trace = _run_with_level_edits(a, edits)
            break
        except InteriorZeroError as exc:
            if exc.trace is not None:
                spent_mults += exc.trace.mult_count
                spent_divs += exc.trace.div_count
            if plan.rounds >= cap:
                raise RoundsExhaustedError(
                    f"{plan.rounds} intermediate replacements did not clear "
                    "every zero divisor"
                ) from exc
            index = next(fresh)
            level, (i, j) = exc.report.level, exc.report.position
            edits[(level, i, j)] = Poly.variable(index)
            plan.edits.append(
                Edit((i, j), Poly.zero(), Poly.variable(index), level=level)
            )
            plan.limit_point[index] = Fraction(0)
            plan.rounds += 1
    value = trace.final().evaluate(plan.limit_point)
    trace.mult_count += spent_mults
    trace.div_count += spent_divs
    trace.repairs = plan
    return UnsoundResult(
        value=value,
        sound=value == det_bareiss(a),
        plan=plan,
        trace=trace,
    )


def _run_with_level_edits(
    a: SymMatrix, edits: dict[tuple[int, int, int], Poly]
) -> CondensationTrace:
    """One condensation pass with sticky per-level entry replacements.

    Each edit is applied when its level is formed, so a restarted pass
    reproduces the paths of earlier rounds exactly and then runs further.
    """

    def edited(m: SymMatrix) -> SymMatrix:
        for (level, i, j), replacement in edits.items():
            if level == m.n:
                m = m.with_entry(i, j, replacement)
        return m

    trace = CondensationTrace(levels=[edited(a)])
    while trace.levels[-1].n > 1:
        raw = condense_once(trace.levels[-1], trace)
        if raw.n <= a.n - 2:
            try:
                raw = divide_by_interior(raw, trace.levels[-2], trace)
            except InteriorZeroError as exc:
                raise InteriorZeroError(exc.report, trace) from None
        trace.levels.append(edited(raw))
    return trace
