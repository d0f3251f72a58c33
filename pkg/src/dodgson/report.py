"""The machine-readable result of one determinant computation.

Both the CLI and the HTTP service produce the same Report model, built by
``build_report``: exact values as canonical strings, instrumented
operation counts, the repair plan if one ran, and optionally the full
level-by-level trace.
"""

from __future__ import annotations

import hashlib
import json

from pydantic import BaseModel

from .engine import predicted_mult_count
from .matrix import SymMatrix
from .oracle import det_bareiss
from .rational import format_rational
from .repair import Strategy, auto_repair, intermediate_replace_unsound


class MatrixModel(BaseModel):
    n: int
    rows: list[list[str]]


class EditModel(BaseModel):
    level: int | None = None
    position: tuple[int, int]
    before: str
    after: str


class RepairPlanModel(BaseModel):
    strategy: str
    edits: list[EditModel]
    sign: int
    bindings: dict[str, str]
    rounds: int
    row_shift: int = 0
    col_shift: int = 0


class Report(BaseModel):
    input_digest: str
    n: int
    strategy: str
    determinant: str
    oracle_determinant: str | None = None
    match: bool | None = None
    mult_count: int
    div_count: int
    predicted_mult_count: int
    repair: RepairPlanModel | None = None
    final_polynomial: str
    levels: list[MatrixModel] | None = None


def matrix_digest(m: SymMatrix) -> str:
    """sha256 of the canonical JSON form; stable across CSV/JSON inputs."""
    canonical = json.dumps(m.to_json_dict(), separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()


def _matrix_model(m: SymMatrix) -> MatrixModel:
    d = m.to_json_dict()
    return MatrixModel(n=d["n"], rows=d["rows"])


def build_report(
    matrix: SymMatrix,
    strategy: Strategy | str = Strategy.PERTURB_ORIGINAL,
    verify: bool = False,
    include_levels: bool = False,
) -> Report:
    """Compute the determinant under the chosen strategy and assemble the
    report.

    The intermediate-replacement strategy always verifies (its whole point
    is the soundness flag); otherwise the Bareiss oracle runs only when
    verify is set.  Repair errors propagate to the caller.
    """
    strategy = Strategy(strategy)
    oracle_text: str | None = None
    match: bool | None = None
    if strategy is Strategy.INTERMEDIATE_REPLACE:
        result = intermediate_replace_unsound(matrix)
        value, plan, trace = result.value, result.plan, result.trace
        oracle_text = format_rational(det_bareiss(matrix))
        match = result.sound
    else:
        value, plan, trace = auto_repair(matrix, strategy)
        if verify:
            oracle_text = format_rational(det_bareiss(matrix))
            match = format_rational(value) == oracle_text
    plan_dict = plan.to_dict()
    return Report(
        input_digest=matrix_digest(matrix),
        n=matrix.n,
        strategy=strategy.value,
        determinant=format_rational(value),
        oracle_determinant=oracle_text,
        match=match,
        mult_count=trace.mult_count,
        div_count=trace.div_count,
        predicted_mult_count=predicted_mult_count(matrix.n),
        repair=RepairPlanModel(
            strategy=plan_dict["strategy"],
            edits=[EditModel(**e) for e in plan_dict["edits"]],
            sign=plan_dict["sign"],
            bindings=plan_dict["bindings"],
            rounds=plan_dict["rounds"],
            row_shift=plan_dict["row_shift"],
            col_shift=plan_dict["col_shift"],
        ),
        final_polynomial=trace.final().to_text(),
        levels=[_matrix_model(m) for m in trace.levels] if include_levels else None,
    )
