from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsec.exact import (
    det,
    format_rational,
    normalized_volume,
    nullspace,
    primitive,
    rank,
    smith_invariants,
    solve,
    to_fraction,
)
from toricsec.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog


def test_to_fraction_accepts_exact_text():
    assert to_fraction("3/6") == Fraction(1, 2)
    assert to_fraction("-4") == -4
    assert to_fraction(7) == 7


@pytest.mark.parametrize("text", ["0.5", "1e3", ""])
def test_to_fraction_rejects_inexact_text(text):
    with pytest.raises(ValueError):
        to_fraction(text)


def test_format_rational():
    assert format_rational(Fraction(4, 3)) == "4/3"
    assert format_rational(Fraction(-6, 3)) == "-2"


def test_det_and_volume():
    assert det([[1, 2], [3, 4]]) == -2
    assert normalized_volume([(0, 0), (1, 0), (1, 2)]) == 2
    assert normalized_volume([(0, 0), (1, 1), (2, 2)]) == 0


def test_primitive():
    assert primitive([Fraction(2, 3), Fraction(-4, 3), 0]) == (1, -2, 0)
    assert primitive([0, 0]) == (0, 0)


def test_nullspace_and_rank():
    rows = [[1, 1, 1]]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    assert all(sum(v) == 0 for v in basis)
    assert rank([[1, 2], [2, 4]]) == 1


def test_smith_invariants():
    assert smith_invariants([[2]]) == (2,)
    assert smith_invariants([[1, 0], [0, 1], [1, 1]]) == (1, 1)
    assert smith_invariants([[2, 0], [0, 2]]) == (2, 2)


small = st.integers(-6, 6)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_solve_roundtrip(matrix, x):
    if det(matrix) == 0:
        return
    rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    assert list(solve(matrix, rhs)) == x


def test_lp_optimal_with_dual():
    # max x + y  s.t. x + 2y <= 4, 3x + y <= 6
    res = linprog([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert res.status == OPTIMAL
    assert res.value == Fraction(14, 5)
    assert res.x == (Fraction(8, 5), Fraction(6, 5))


def test_lp_infeasible_farkas_vector():
    a_ub, b_ub = [[1, 1], [-1, -1]], [1, -3]
    res = linprog([0, 0], a_ub, b_ub)
    assert res.status == INFEASIBLE
    y = res.dual
    assert all(v >= 0 for v in y)
    assert all(sum(y[i] * a_ub[i][j] for i in range(2)) >= 0 for j in range(2))
    assert sum(y[i] * b_ub[i] for i in range(2)) < 0


def test_lp_unbounded_and_equalities():
    assert linprog([1, 0], [[-1, 1]], [1]).status == UNBOUNDED
    res = linprog([-1, -1], A_eq=[[1, 1]], b_eq=[2])
    assert res.status == OPTIMAL and res.value == -2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=1, max_size=4), st.lists(st.integers(0, 8), min_size=4, max_size=4))
def test_lp_optimum_beats_grid(rows, rhs):
    # bounded box keeps the problem bounded; compare with a grid search
    a_ub = rows + [[1, 0], [0, 1]]
    b_ub = rhs[: len(rows)] + [5, 5]
    res = linprog([2, 3], a_ub, b_ub)
    assert res.status == OPTIMAL  # origin is feasible
    for x in range(6):
        for y in range(6):
            if all(r[0] * x + r[1] * y <= b for r, b in zip(a_ub, b_ub)):
                assert 2 * x + 3 * y <= res.value
    assert all(sum(r[i] * res.x[i] for i in range(2)) <= b for r, b in zip(a_ub, b_ub))
