from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phk.errors import InputError
from phk.fme import fm_feasible, fm_maximize
from phk.linalg import dot, vec
from phk.lp import (
    LPProblem,
    closed_feasible,
    lp_solve,
    problem,
    strict_system_feasible,
    verify_outcome,
)


def rows_of(*rs):
    return tuple((vec(n), Fraction(o)) for n, o in rs)


def test_optimal_with_exact_duals():
    # maximize x subject to x <= 1, -x <= 0
    p = problem([1], [([1], 1), ([-1], 0)])
    out = lp_solve(p)
    assert out.status == "optimal"
    assert out.value == 1
    assert out.primal == vec([1])
    assert verify_outcome(p, out)


def test_infeasible_farkas_certificate():
    p = problem([1], [([1], -1), ([-1], 0)])
    out = lp_solve(p)
    assert out.status == "infeasible"
    assert out.farkas == vec([1, 1])
    assert verify_outcome(p, out)


def test_unbounded_ray():
    p = problem([1], [([-1], 0)])
    out = lp_solve(p)
    assert out.status == "unbounded"
    assert out.ray is not None and dot(p.objective, out.ray) > 0
    assert verify_outcome(p, out)


def test_no_rows_cases():
    free = problem([0, 0], [])
    out = lp_solve(free)
    assert out.status == "optimal" and out.value == 0
    assert verify_outcome(free, out)
    grow = problem([1, -2], [])
    out2 = lp_solve(grow)
    assert out2.status == "unbounded"
    assert verify_outcome(grow, out2)


def test_degenerate_square_corner():
    # Three rows meet at the optimum; Bland's rule must terminate.
    p = problem(
        [1, 1],
        [([1, 0], 1), ([0, 1], 1), ([1, 1], 2), ([-1, 0], 0), ([0, -1], 0)],
    )
    out = lp_solve(p)
    assert out.status == "optimal"
    assert out.value == 2
    assert verify_outcome(p, out)


def test_fractional_data_stays_exact():
    p = problem(["1/3", "1/7"], [(["2/5", 1], "3/4"), ([1, 0], "1/2"), ([-1, -1], 5)])
    out = lp_solve(p)
    assert out.status == "optimal"
    assert verify_outcome(p, out)


def test_dimension_guard():
    with pytest.raises(InputError):
        problem([], [])
    with pytest.raises(InputError):
        problem([1], [([1, 2], 0)])


def test_strict_feasibility_examples():
    f = strict_system_feasible([(vec([1]), Fraction(0), True), (vec([-1]), Fraction(1), True)])
    assert f.feasible and f.witness is not None
    (w,) = f.witness
    assert w < 0 and -w < 1

    g = strict_system_feasible([(vec([1]), Fraction(0), True), (vec([-1]), Fraction(0), False)])
    assert not g.feasible and g.witness is None

    h = strict_system_feasible([(vec([-1]), Fraction(0), True), (vec([1]), Fraction(1), False)])
    assert h.feasible and h.witness is not None
    (w,) = h.witness
    assert 0 < w <= 1


def test_strict_feasibility_empty_system_is_an_error():
    with pytest.raises(InputError):
        strict_system_feasible([])


def test_strict_matches_closed_when_no_strict_rows():
    rows = [(vec([1, 1]), Fraction(1), False), (vec([-1, 0]), Fraction(0), False)]
    assert strict_system_feasible(rows).feasible == closed_feasible(
        [(n, o) for n, o, _ in rows], 2
    ).feasible


# -- random agreement with the elimination oracle ---------------------------

coef = st.integers(min_value=-4, max_value=4)


@st.composite
def lp_instances(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    m = draw(st.integers(min_value=0, max_value=6))
    obj = vec([draw(coef) for _ in range(n)])
    rows = []
    for _ in range(m):
        normal = [draw(coef) for _ in range(n)]
        rows.append((vec(normal), Fraction(draw(coef))))
    return LPProblem(obj, tuple(rows))


@given(lp_instances())
def test_simplex_agrees_with_elimination(p):
    out = lp_solve(p)
    assert verify_outcome(p, out)
    status, value = fm_maximize(p.objective, p.rows)
    assert out.status == status
    if status == "optimal":
        assert out.value == value


@st.composite
def strict_systems(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    m = draw(st.integers(min_value=1, max_value=5))
    rows = []
    for _ in range(m):
        normal = [draw(coef) for _ in range(n)]
        rows.append((vec(normal), Fraction(draw(coef)), draw(st.booleans())))
    return rows


@given(strict_systems())
def test_strict_feasibility_agrees_with_elimination(rows):
    mine = strict_system_feasible(rows)
    assert mine.feasible == fm_feasible(rows)
    if mine.feasible:
        assert mine.witness is not None
        for normal, offset, strict in rows:
            v = dot(normal, mine.witness)
            assert v < offset if strict else v <= offset
