from fractions import Fraction

import pytest

from dodgson import (
    InteriorZeroError,
    LevelUnavailableError,
    Poly,
    SymMatrix,
    all_minors_level,
    condense_once,
    divide_by_interior,
    predicted_mult_count,
    run,
    verify_minor_grid,
)
from dodgson.engine import CondensationTrace
from dodgson.corpus import corpus_entry

from conftest import SHARED_CONDENSED_3X3, mat, random_clean_run

X = Poly.variable(0)


def nudged_e11() -> SymMatrix:
    """E1.1 with its interior zero at (2,3) replaced by the variable x0."""
    return corpus_entry("E1.1").matrix.with_entry(2, 3, X)


def test_one_condensation_of_the_nudged_matrix():
    level3 = condense_once(nudged_e11())
    expected = SymMatrix(
        [
            [Poly.const(-1), Poly.const(3), Poly.const(3)],
            [Poly.const(1), -(X + 2), Poly.const(-2)],
            [Poly.const(2), Poly.const(-4), Poly.const(2)],
        ]
    )
    assert level3 == expected


def test_first_condensation_of_a1_is_the_shared_matrix():
    assert condense_once(corpus_entry("A1").matrix) == mat(SHARED_CONDENSED_3X3)


def test_condensing_identity_two_by_two():
    assert condense_once(mat([[1, 0], [0, 1]])) == mat([[1]])


def test_condense_requires_two_rows():
    with pytest.raises(ValueError):
        condense_once(mat([[5]]))


def test_divide_by_interior_reproduces_the_worked_level():
    a = nudged_e11()
    level3 = condense_once(a)
    raw = condense_once(level3)
    level2 = divide_by_interior(raw, a)
    assert level2 == SymMatrix(
        [
            [1 - X, Poly.const(3)],
            [2 * X, -X - 6],
        ]
    )
    # and the final division: (x^2 - x - 6) / -(x + 2) = 3 - x
    final = divide_by_interior(condense_once(level2), level3)
    assert final.at(1, 1) == 3 - X


def test_divide_by_interior_checks_dimensions():
    with pytest.raises(ValueError):
        divide_by_interior(mat([[1]]), mat([[1, 2], [3, 4]]))


def test_divide_all_zero_dividend():
    raw = mat([[0]])
    prev_prev = mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert divide_by_interior(raw, prev_prev) == mat([[0]])


def test_zero_divisor_is_located():
    raw = mat([[1]])
    prev_prev = mat([[1, 2, 3], [4, 0, 6], [7, 8, 9]])
    with pytest.raises(InteriorZeroError) as excinfo:
        divide_by_interior(raw, prev_prev)
    assert excinfo.value.report.level == 3
    assert excinfo.value.report.position == (2, 2)


def test_run_on_the_nudged_matrix():
    result = run(nudged_e11(), {0: Fraction(0)})
    assert result.value == 3
    assert result.trace.final() == 3 - X
    assert [m.n for m in result.trace.levels] == [4, 3, 2, 1]


def test_run_reports_original_interior_zeros():
    with pytest.raises(InteriorZeroError) as excinfo:
        run(corpus_entry("E1.1").matrix)
    assert excinfo.value.report.level == 4
    assert excinfo.value.report.position == (2, 3)
    # levels produced before the failing division: sizes 4 and 3
    assert [m.n for m in excinfo.value.trace.levels] == [4, 3]


def test_run_reports_deeper_zeros():
    with pytest.raises(InteriorZeroError) as excinfo:
        run(corpus_entry("E2.2").matrix)
    assert excinfo.value.report.level == 3
    assert excinfo.value.report.position == (2, 2)
    assert [m.n for m in excinfo.value.trace.levels] == [4, 3, 2]


def test_run_tiny_matrices():
    assert run(mat([[Fraction(-13, 6)]])).value == Fraction(-13, 6)
    assert run(mat([[1, 2], [3, 4]])).value == -2


def test_run_requires_bound_variables():
    from dodgson import UnboundVariableError

    with pytest.raises(UnboundVariableError):
        run(nudged_e11())


def test_nonzero_divisor_that_vanishes_at_the_limit_is_fine():
    # replacing A1's entry (3,2) by x0 makes the divisor 12 - 4*x0, which
    # vanishes at the limit point x0 -> 3 but is a perfectly good polynomial
    a = corpus_entry("A1").matrix.with_entry(3, 2, X)
    result = run(a, {0: Fraction(3)})
    assert result.value == 213
    assert result.trace.final() == 40 * X + 93


def test_predicted_mult_count_values():
    assert predicted_mult_count(4) == 28
    assert predicted_mult_count(1) == 0
    assert predicted_mult_count(8) == 280


def test_predicted_mult_count_matches_direct_summation():
    for n in range(1, 12):
        assert predicted_mult_count(n) == 2 * sum(m * m for m in range(1, n))


def test_mult_count_is_instrumented_not_assumed(rng):
    for n in (2, 3, 4, 5, 6):
        m, trace = random_clean_run(rng, n)
        assert trace.mult_count == predicted_mult_count(n)
        assert trace.div_count == sum(k * k for k in range(1, n - 1))


def test_minor_grid_on_a1():
    assert verify_minor_grid(corpus_entry("A1").matrix, 1)


def test_minor_grid_on_random_clean_runs(rng):
    for _ in range(5):
        m, _ = random_clean_run(rng, 5)
        assert verify_minor_grid(m, 2)


def test_minor_grid_top_level_is_the_determinant(rng):
    m, trace = random_clean_run(rng, 4)
    assert verify_minor_grid(m, 3)
    assert trace.level_of_size(1) == all_minors_level(m, 3)


def test_minor_grid_level_unavailable():
    with pytest.raises(LevelUnavailableError):
        verify_minor_grid(corpus_entry("E2.2").matrix, 3)
    # but levels produced before the stall are still checkable
    assert verify_minor_grid(corpus_entry("E2.2").matrix, 2)


def test_minor_grid_rejects_bad_k():
    with pytest.raises(ValueError):
        verify_minor_grid(corpus_entry("A1").matrix, 0)


def test_trace_serialization_round_trips():
    result = run(nudged_e11(), {0: Fraction(0)})
    d = result.trace.to_dict()
    assert d["mult_count"] == result.trace.mult_count
    assert d["repairs"] is None
    from dodgson import matrix_from_json_dict

    rebuilt = [matrix_from_json_dict(level) for level in d["levels"]]
    assert rebuilt == result.trace.levels


def test_trace_final_requires_a_finished_run():
    with pytest.raises(LevelUnavailableError):
        CondensationTrace(levels=[mat([[1, 2], [3, 4]])]).final()
