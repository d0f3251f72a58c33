"""Built-in corpus of worked matrices with known exact determinants.

These are the golden inputs for the test suite and the CLI demo.  The
family A1..A6 all condense to the same 3x3 on the first step (so any
method that edits that shared intermediate cannot tell them apart), yet
their determinants differ -- that contrast is what the corpus is for.

Determinants marked derived are computed by the Bareiss oracle on demand
rather than stored, so they can never drift from the matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .matrix import SymMatrix
from .oracle import det_bareiss
from .rational import format_rational


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    matrix: SymMatrix
    expected_det: Fraction | None  # None: derived via the Bareiss oracle
    provenance: str

    def expected(self) -> Fraction:
        if self.expected_det is not None:
            return self.expected_det
        return det_bareiss(self.matrix)

    @property
    def derived(self) -> bool:
        return self.expected_det is None


_RAW: list[tuple[str, list[list[int | str]], Fraction | None, str]] = [
    (
        "E1.1",
        [[1, 0, 3, 0], [0, -1, 0, 1], [1, 1, 2, 0], [0, 2, 0, 1]],
        Fraction(3),
        "4x4 keeping a zero in its interior under every cyclic row/column shift",
    ),
    (
        "E2.2",
        [[3, -2, 1, 2], [-1, 4, 4, 1], [3, 3, 3, 4], [2, 5, 2, -1]],
        Fraction(213),
        "4x4 whose first condensation has a zero dead center",
    ),
    (
        "A1",
        [[1, -2, 1, 2], [3, 4, 4, 1], [6, 3, 3, 4], [7, 5, 2, -1]],
        Fraction(213),
        "same first condensation as E2.2, same determinant",
    ),
    (
        "A2",
        [["0.25", 9, 12, "4.75"], [-1, 4, 4, 1], [3, 3, 3, 4], [2, 5, 2, -1]],
        Fraction(213),
        "same first condensation as E2.2, same determinant",
    ),
    (
        "A3",
        [[3, -2, 1, "0.25"], [-1, 4, 4, -6], [3, 3, 3, "-1.25"], [2, 5, 2, "-4.5"]],
        Fraction(213),
        "same first condensation as E2.2, same determinant",
    ),
    (
        "A4",
        [[-45, -5, -2, "0.5"], [-7, -1, 2, 3], [-8, 1, -2, "3.5"], [-25, 2, -13, "28.25"]],
        Fraction(11331, 2),
        "same first condensation as E2.2, determinant 5665.5",
    ),
    (
        "A5",
        [[0, 1, 5, "-8.5"], [-10, 2, -2, 2], ["-7.5", 3, -3, "-3.5"], [-8, 2, -5, "-13/6"]],
        Fraction(903, 2),
        "same first condensation as E2.2, determinant 451.5",
    ),
    (
        "A6",
        [
            [0, 1, 4, "31/12"],
            [-10, 6, 12, 6],
            ["35/12", "-1/4", "-1/2", "5/6"],
            [-34, 6, 48, -58],
        ],
        Fraction(2073),
        "same first condensation as E2.2, determinant 2073",
    ),
    (
        "E2.3",
        [[1, 2, 3, 4], [5, 0, 0, 6], [7, 0, 0, 8], [9, 10, 11, 12]],
        Fraction(16),
        "4x4 with a 2x2 block of zeros filling the whole interior",
    ),
    (
        "S4-5x5",
        [
            [1, 0, 1, 0, 1],
            [0, 1, 1, 1, 1],
            [1, 2, 1, 1, 2],
            [-1, 1, 1, 2, 1],
            [0, 1, 0, 1, 0],
        ],
        None,
        "5x5 on which even intermediate-level replacement happens to be sound",
    ),
]


def corpus_entries() -> list[CorpusEntry]:
    """The fixed corpus, in a stable order."""
    return [
        CorpusEntry(name, SymMatrix.constant(rows), det, why)
        for name, rows, det, why in _RAW
    ]


def corpus_entry(name: str) -> CorpusEntry:
    for entry in corpus_entries():
        if entry.name == name:
            return entry
    raise KeyError(f"no corpus entry named {name!r}")


def export_corpus(directory: str | Path) -> list[Path]:
    """Write every entry as CSV plus a manifest.json; returns the paths."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    manifest = []
    for entry in corpus_entries():
        fname = entry.name.replace(".", "_") + ".csv"
        path = out / fname
        path.write_text(entry.matrix.to_csv())
        written.append(path)
        manifest.append(
            {
                "name": entry.name,
                "file": fname,
                "n": entry.matrix.n,
                "expected_determinant": format_rational(entry.expected()),
                "derived": entry.derived,
                "provenance": entry.provenance,
            }
        )
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps({"entries": manifest}, indent=2) + "\n")
    written.append(manifest_path)
    return written
