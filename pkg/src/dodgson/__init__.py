"""Exact determinants by condensation, with symbolic repair of the interior
zeros that stall the classical iteration."""

from .engine import (
    CondensationTrace,
    InteriorZeroError,
    LevelUnavailableError,
    RunResult,
    ZeroReport,
    condense_once,
    divide_by_interior,
    predicted_mult_count,
    run,
    verify_minor_grid,
)
from .corpus import CorpusEntry, corpus_entries, corpus_entry, export_corpus
from .matrix import (
    MatrixFormatError,
    SymMatrix,
    Window,
    contiguous_minor,
    matrix_from_json_dict,
    parse_matrix,
)
from .oracle import all_minors_level, det_bareiss, det_cofactor
from .poly import (
    DivisorZeroError,
    InexactDivisionError,
    Poly,
    UnboundVariableError,
    parse_poly,
)
from .rational import Rational, format_rational, parse_rational
from .repair import (
    Edit,
    RepairPlan,
    RoundsExhaustedError,
    SOUND_STRATEGIES,
    Strategy,
    StrategyInapplicableError,
    UnsoundResult,
    auto_repair,
    cyclic_shift,
    find_interior_zeros,
    intermediate_replace_unsound,
    perturb_entry,
    perturb_original,
    replace_entry_symbolic,
    replace_zeros_with_variables,
    trace_window,
)
from .report import Report, build_report

__version__ = "0.1.0"

__all__ = [
    "CondensationTrace",
    "CorpusEntry",
    "DivisorZeroError",
    "Edit",
    "InexactDivisionError",
    "InteriorZeroError",
    "LevelUnavailableError",
    "MatrixFormatError",
    "Poly",
    "Rational",
    "RepairPlan",
    "Report",
    "RoundsExhaustedError",
    "RunResult",
    "SOUND_STRATEGIES",
    "Strategy",
    "StrategyInapplicableError",
    "SymMatrix",
    "UnboundVariableError",
    "UnsoundResult",
    "Window",
    "ZeroReport",
    "all_minors_level",
    "auto_repair",
    "build_report",
    "condense_once",
    "contiguous_minor",
    "corpus_entries",
    "corpus_entry",
    "cyclic_shift",
    "det_bareiss",
    "det_cofactor",
    "divide_by_interior",
    "export_corpus",
    "find_interior_zeros",
    "format_rational",
    "intermediate_replace_unsound",
    "matrix_from_json_dict",
    "parse_matrix",
    "parse_poly",
    "parse_rational",
    "perturb_entry",
    "perturb_original",
    "predicted_mult_count",
    "replace_entry_symbolic",
    "replace_zeros_with_variables",
    "run",
    "trace_window",
    "verify_minor_grid",
]
