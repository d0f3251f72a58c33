"""HTTP front end for the condensation engine.

The engine is pure and stateless, so one app instance serves concurrent
clients safely.  Run with:

    uvicorn dodgson.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..corpus import corpus_entries, corpus_entry
from ..matrix import MatrixFormatError, matrix_from_json_dict
from ..poly import InexactDivisionError
from ..rational import format_rational
from ..repair import (
    RoundsExhaustedError,
    Strategy,
    StrategyInapplicableError,
)
from ..report import Report, build_report
from .schemas import CorpusEntryOut, DeterminantRequest, HealthOut, MatrixIn


def _entry_out(name: str) -> CorpusEntryOut:
    entry = corpus_entry(name)
    d = entry.matrix.to_json_dict()
    return CorpusEntryOut(
        name=entry.name,
        n=d["n"],
        rows=d["rows"],
        expected_determinant=format_rational(entry.expected()),
        derived=entry.derived,
        provenance=entry.provenance,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="condensation determinant service",
        version=__version__,
        description="Exact determinants by condensation with symbolic repair "
        "of zero divisors, verified against an independent oracle.",
    )

    @app.get("/health", response_model=HealthOut)
    def health() -> HealthOut:
        return HealthOut(status="ok")

    @app.get("/corpus", response_model=list[CorpusEntryOut])
    def corpus() -> list[CorpusEntryOut]:
        return [_entry_out(e.name) for e in corpus_entries()]

    @app.get("/corpus/{name}", response_model=CorpusEntryOut)
    def corpus_by_name(name: str) -> CorpusEntryOut:
        try:
            return _entry_out(name)
        except KeyError:
            raise HTTPException(404, f"no corpus entry named {name!r}") from None

    @app.post("/determinant", response_model=Report, response_model_exclude_none=True)
    def determinant(request: DeterminantRequest) -> Report:
        try:
            strategy = Strategy(request.strategy)
        except ValueError:
            raise HTTPException(
                400,
                f"unknown strategy {request.strategy!r}; one of: "
                + ", ".join(s.value for s in Strategy),
            ) from None
        payload: MatrixIn = request.matrix
        try:
            matrix = matrix_from_json_dict(
                {"n": payload.n, "rows": [[str(c) for c in row] for row in payload.rows]},
                constant_only=True,
            )
        except MatrixFormatError as exc:
            raise HTTPException(400, str(exc)) from None
        try:
            return build_report(
                matrix,
                strategy=strategy,
                verify=request.verify,
                include_levels=request.include_levels,
            )
        except (
            RoundsExhaustedError,
            StrategyInapplicableError,
            InexactDivisionError,
            ZeroDivisionError,
        ) as exc:
            raise HTTPException(422, f"{type(exc).__name__}: {exc}") from None

    return app


app = create_app()
