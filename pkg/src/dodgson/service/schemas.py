"""Request/response models for the HTTP service.

Matrix entries travel as strings (or ints) so values stay exact end to
end; floats are rejected rather than silently rounded.
"""

from __future__ import annotations

from pydantic import BaseModel, StrictInt, StrictStr

from ..report import Report  # re-exported: the /determinant response model

__all__ = [
    "MatrixIn",
    "DeterminantRequest",
    "CorpusEntryOut",
    "HealthOut",
    "Report",
]


class MatrixIn(BaseModel):
    n: int | None = None
    rows: list[list[StrictInt | StrictStr]]


class DeterminantRequest(BaseModel):
    matrix: MatrixIn
    strategy: str = "perturb"
    verify: bool = True
    include_levels: bool = False


class CorpusEntryOut(BaseModel):
    name: str
    n: int
    rows: list[list[str]]
    expected_determinant: str
    derived: bool
    provenance: str


class HealthOut(BaseModel):
    status: str
