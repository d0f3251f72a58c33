"""Shared fixtures: well-known matrices and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dodgson import InteriorZeroError, SymMatrix, run

# 5x5 whose interior is a 3x3 block of zeros: the all-zeros repair needs
# nine fresh variables here, and its determinant happens to be 0.
NINE_PARAMETER_5X5 = [
    [1, 3, 5, 7, 9],
    [-2, 0, 0, 0, -4],
    [-6, 0, 0, 0, -8],
    [-10, 0, 0, 0, -12],
    [9, 7, 5, 3, 1],
]

# The 3x3 every one of E2.2, A1..A6 condenses to on the first step.
SHARED_CONDENSED_3X3 = [[10, -12, -7], [-15, 0, 13], [9, -9, -11]]


def mat(rows) -> SymMatrix:
    return SymMatrix.constant(rows)


def random_matrix(
    rng: random.Random, n: int, zero_bias: float = 0.0
) -> SymMatrix:
    """Uniform integer entries in [-9, 9]; zero_bias forces extra zeros."""

    def cell() -> int:
        if zero_bias and rng.random() < zero_bias:
            return 0
        return rng.randint(-9, 9)

    return SymMatrix.constant([[cell() for _ in range(n)] for _ in range(n)])


def random_clean_run(rng: random.Random, n: int):
    """A random matrix whose unrepaired run completes, plus its trace."""
    while True:
        m = random_matrix(rng, n)
        try:
            return m, run(m).trace
        except InteriorZeroError:
            continue


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20170405)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion at the end of the run."""
    outcomes: dict[str, str] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" in nodeid:
                name = nodeid.split("::")[-1]
                if status == "passed" and getattr(rep, "when", "call") != "call":
                    continue
                if outcomes.get(name) != "FAIL":
                    outcomes[name] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(outcomes):
        terminalreporter.write_line(f"{name}: {outcomes[name]}")
