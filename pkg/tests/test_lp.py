from fractions import Fraction

import pytest

from rainbowdepth.errors import InputError
from rainbowdepth.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp_max


def test_basic_optimum():
    r = solve_lp_max([1, 1], [[1, 0], [0, 1]], [2, 3])
    assert r.status == OPTIMAL
    assert r.x == (Fraction(2), Fraction(3))
    assert r.value == 5


def test_free_variables_negative_optimum():
    # maximize x subject to x <= -5 (x free, needs an artificial)
    r = solve_lp_max([1], [[1]], [-5])
    assert r.status == OPTIMAL
    assert r.x == (Fraction(-5),)
    assert r.value == -5


def test_infeasible():
    r = solve_lp_max([1], [[1], [-1]], [1, -3])  # x <= 1 and x >= 3
    assert r.status == INFEASIBLE
    assert r.x is None


def test_unbounded():
    r = solve_lp_max([1], [[-1]], [0])  # maximize x subject to x >= 0
    assert r.status == UNBOUNDED


def test_exact_fractional_solution():
    # maximize y subject to y <= x/3 + 1/7 and y <= -x + 2
    r = solve_lp_max(
        [0, 1],
        [[Fraction(-1, 3), 1], [1, 1]],
        [Fraction(1, 7), 2],
    )
    assert r.status == OPTIMAL
    x, y = r.x
    assert (x, y) == (Fraction(39, 28), Fraction(17, 28))  # exact, no drift
    assert r.value == y


def test_degenerate_ties_terminate():
    # many redundant constraints through the optimum exercise Bland's rule
    a = [[1, 1], [2, 2], [3, 3], [1, 0], [0, 1]]
    b = [2, 4, 6, 1, 1]
    r = solve_lp_max([1, 1], a, b)
    assert r.status == OPTIMAL
    assert r.value == 2


def test_shape_mismatch():
    with pytest.raises(InputError):
        solve_lp_max([1, 2], [[1]], [1])


def test_determinism():
    args = ([3, -1, 2], [[1, 1, 1], [2, -1, 0], [-1, 0, 4]], [5, 3, 8])
    r1 = solve_lp_max(*args)
    r2 = solve_lp_max(*args)
    assert r1 == r2
