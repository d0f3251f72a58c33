"""det -- condensation determinants from the command line.

A thin client over the core package: parse the matrix, delegate to
``build_report``, print one line, optionally dump the JSON report.

Exit codes:  0 success (and oracle match, when checked)
             1 any error (bad input, unknown strategy, repair gave up)
             2 the computed value disagrees with the oracle -- the expected
               outcome when --strategy intermediate-unsound demonstrates
               why intermediate edits are not trusted
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import corpus_entries, export_corpus
from .matrix import MatrixFormatError, SymMatrix, parse_matrix
from .oracle import det_bareiss
from .poly import InexactDivisionError
from .rational import format_rational
from .repair import (
    RoundsExhaustedError,
    SOUND_STRATEGIES,
    Strategy,
    StrategyInapplicableError,
    auto_repair,
)
from .report import build_report


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for oracle
    # mismatches here, so usage errors are remapped to 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="det",
        description="Exact determinants by condensation, with symbolic repair "
        "of zero divisors and independent verification.",
    )
    parser.add_argument("--input", metavar="PATH", help="matrix file to read")
    parser.add_argument(
        "--format",
        choices=["csv", "json"],
        help="input format (default: json for .json files, csv otherwise)",
    )
    parser.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.PERTURB_ORIGINAL.value,
        help="repair strategy for zero divisors (default: perturb)",
    )
    parser.add_argument(
        "--trace",
        action="store_true",
        help="include every condensation level in the JSON report",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the result against the Bareiss oracle",
    )
    parser.add_argument(
        "--json", metavar="PATH", help="write the full JSON report here"
    )
    parser.add_argument(
        "--demo",
        action="store_true",
        help="run the built-in corpus under every sound strategy",
    )
    parser.add_argument(
        "--export-corpus",
        metavar="DIR",
        help="write the built-in corpus as CSV files plus a manifest",
    )
    return parser


def _run_demo() -> int:
    entries = corpus_entries()
    strategies = list(SOUND_STRATEGIES)
    name_width = max(len(e.name) for e in entries)
    cell_width = max(12, *(len(s.value) for s in strategies))
    header = "  ".join(
        [" " * name_width, "expected".rjust(cell_width)]
        + [s.value.rjust(cell_width) for s in strategies]
    )
    print(header)
    failures = 0
    for entry in entries:
        expected = entry.expected()
        cells = [entry.name.ljust(name_width), format_rational(expected).rjust(cell_width)]
        for strategy in strategies:
            try:
                value, _, _ = auto_repair(entry.matrix, strategy)
            except StrategyInapplicableError:
                cells.append("n/a".rjust(cell_width))
                continue
            except (RoundsExhaustedError, InexactDivisionError) as exc:
                cells.append(f"error({type(exc).__name__})".rjust(cell_width))
                failures += 1
                continue
            if value == expected:
                cells.append("pass".rjust(cell_width))
            else:
                cells.append(f"FAIL={format_rational(value)}".rjust(cell_width))
                failures += 1
        print("  ".join(cells))
    print(
        f"{len(entries)} matrices x {len(strategies)} strategies: "
        + ("all applicable results match" if failures == 0 else f"{failures} FAILURES")
    )
    return 0 if failures == 0 else 1


def _read_matrix(path_text: str, fmt: str | None) -> SymMatrix:
    path = Path(path_text)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "csv"
    return parse_matrix(path.read_text(), fmt)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    modes = [bool(args.demo), bool(args.export_corpus), bool(args.input)]
    if sum(modes) != 1:
        parser.print_usage(sys.stderr)
        print("det: error: give exactly one of --input, --demo, --export-corpus",
              file=sys.stderr)
        return 1

    try:
        if args.demo:
            return _run_demo()
        if args.export_corpus:
            written = export_corpus(args.export_corpus)
            print(f"wrote {len(written)} files to {args.export_corpus}")
            return 0
        matrix = _read_matrix(args.input, args.format)
        report = build_report(
            matrix,
            strategy=args.strategy,
            verify=args.verify,
            include_levels=args.trace,
        )
    except (
        OSError,
        MatrixFormatError,
        ValueError,
        RoundsExhaustedError,
        StrategyInapplicableError,
        InexactDivisionError,
        ZeroDivisionError,
    ) as exc:
        print(f"det: error: {exc}", file=sys.stderr)
        return 1

    if report.match is False:
        print(
            f"det = {report.determinant} "
            f"(MISMATCH, oracle {report.oracle_determinant})"
        )
    else:
        print(f"det = {report.determinant}")
    if args.json:
        Path(args.json).write_text(report.model_dump_json(indent=2) + "\n")
    return 2 if report.match is False else 0


if __name__ == "__main__":
    sys.exit(main())
