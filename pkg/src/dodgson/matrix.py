"""Square matrices of polynomials, windows, and the file formats.

All user-facing coordinates are 1-based, matching the usual written
notation for matrix minors; storage is 0-based tuples internally.  A
matrix is immutable: edits return a new matrix.

File formats (bit-exact round trip):

    CSV   one row per line, comma-separated rational literals
    JSON  {"n": 4, "rows": [["1", "0", ...], ...]}  entries as strings

Input files always hold constant matrices; traces serialized by the
engine reuse the JSON layout with polynomial text entries, and
``matrix_from_json_dict`` reads those back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Poly, parse_poly
from .rational import format_rational, parse_rational


class MatrixFormatError(ValueError):
    """Malformed matrix input: ragged rows, not square, or a bad literal."""


@dataclass(frozen=True)
class Window:
    """A square block of consecutive rows and columns, 1-based."""

    row_start: int
    col_start: int
    size: int

    def fits(self, n: int) -> bool:
        return (
            self.size >= 1
            and self.row_start >= 1
            and self.col_start >= 1
            and self.row_start + self.size - 1 <= n
            and self.col_start + self.size - 1 <= n
        )


class SymMatrix:
    """A dense square matrix of Poly entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        n = len(rows)
        if n == 0:
            raise MatrixFormatError("a matrix needs at least one row")
        for row in rows:
            if len(row) != n:
                raise MatrixFormatError(
                    f"matrix is not square: {n} rows but a row of length {len(row)}"
                )
        self._rows = tuple(tuple(row) for row in rows)

    @classmethod
    def constant(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> SymMatrix:
        """Build from rationals given as int, Fraction, or literal text."""

        def cell(value: Fraction | int | str) -> Poly:
            if isinstance(value, str):
                return Poly.const(parse_rational(value))
            return Poly.const(value)

        return cls([[cell(v) for v in row] for row in rows])

    @property
    def n(self) -> int:
        return len(self._rows)

    def at(self, i: int, j: int) -> Poly:
        """Entry at row i, column j (1-based)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) outside a {self.n}x{self.n} matrix")
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[Poly, ...], ...]:
        return self._rows

    def with_entry(self, i: int, j: int, value: Poly) -> SymMatrix:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) outside a {self.n}x{self.n} matrix")
        rows = [list(row) for row in self._rows]
        rows[i - 1][j - 1] = value
        return SymMatrix(rows)

    def interior(self) -> SymMatrix:
        """The block left after deleting the first/last row and column."""
        if self.n < 3:
            raise ValueError(f"a {self.n}x{self.n} matrix has no interior")
        return SymMatrix([row[1:-1] for row in self._rows[1:-1]])

    def submatrix(self, window: Window) -> SymMatrix:
        if not window.fits(self.n):
            raise ValueError(f"{window} does not fit in a {self.n}x{self.n} matrix")
        r0, c0, size = window.row_start - 1, window.col_start - 1, window.size
        return SymMatrix([row[c0 : c0 + size] for row in self._rows[r0 : r0 + size]])

    def transpose(self) -> SymMatrix:
        return SymMatrix(list(zip(*self._rows)))

    def is_constant(self) -> bool:
        return all(p.is_constant() for row in self._rows for p in row)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for row in self._rows:
            for p in row:
                out |= p.variables()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(p.to_text() for p in row) for row in self._rows
        )
        return f"SymMatrix[{body}]"

    # -- serialization -------------------------------------------------------

    def to_csv(self) -> str:
        if not self.is_constant():
            raise ValueError("CSV holds constant matrices only")
        lines = [
            ",".join(format_rational(p.constant_value()) for p in row)
            for row in self._rows
        ]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [[p.to_text() for p in row] for row in self._rows],
        }


def contiguous_minor(m: SymMatrix, window: Window) -> Poly:
    """Exact determinant of the windowed block of consecutive rows/columns."""
    from .oracle import det_cofactor  # late import: oracle builds on this module

    return det_cofactor(m.submatrix(window))


def _parse_rows(rows: Iterable[Iterable[str]]) -> SymMatrix:
    parsed: list[list[Poly]] = []
    for i, row in enumerate(rows, start=1):
        out_row: list[Poly] = []
        for j, cell in enumerate(row, start=1):
            try:
                out_row.append(Poly.const(parse_rational(cell)))
            except ValueError as exc:
                raise MatrixFormatError(f"entry ({i},{j}): {exc}") from None
        parsed.append(out_row)
    if not parsed:
        raise MatrixFormatError("empty matrix input")
    width = len(parsed[0])
    for i, row in enumerate(parsed, start=1):
        if len(row) != width:
            raise MatrixFormatError(
                f"ragged rows: row 1 has {width} entries, row {i} has {len(row)}"
            )
    if len(parsed) != width:
        raise MatrixFormatError(
            f"not square: {len(parsed)} rows of {width} entries"
        )
    return SymMatrix(parsed)


def parse_matrix(text: str, format: str = "csv") -> SymMatrix:
    """Parse a constant matrix from CSV or JSON text."""
    if format == "csv":
        lines = [line for line in text.splitlines() if line.strip()]
        return _parse_rows([line.split(",") for line in lines])
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from None
        return matrix_from_json_dict(data, constant_only=True)
    raise ValueError(f"unknown matrix format: {format!r}")


def matrix_from_json_dict(data: object, constant_only: bool = False) -> SymMatrix:
    """Rebuild a matrix from the JSON layout.

    With constant_only the entries must be rational literals (input files);
    otherwise polynomial text is accepted (trace round trips).
    """
    if not isinstance(data, dict) or "rows" not in data:
        raise MatrixFormatError('matrix JSON must be an object with "rows"')
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MatrixFormatError('"rows" must be a list of lists of strings')
    if constant_only:
        m = _parse_rows([[str(c) for c in row] for row in rows])
    else:
        try:
            m = SymMatrix([[parse_poly(str(c)) for c in row] for row in rows])
        except ValueError as exc:
            raise MatrixFormatError(str(exc)) from None
    declared = data.get("n")
    if declared is not None and declared != m.n:
        raise MatrixFormatError(f'"n" is {declared} but the matrix is {m.n}x{m.n}')
    return m
