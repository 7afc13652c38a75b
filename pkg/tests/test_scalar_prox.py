import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from shrinkage import DomainError, hard_keep, scalar_objective, shrink
from shrinkage.oracle import grid_min_scalar, three_case_shrink

reals = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
lams = st.floats(min_value=1e-6, max_value=1e3, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("a, lam, expected", [(2.0, 1.0, 1.0), (0.5, 1.0, 0.0), (-1.0, 1.0, 0.0)])
def test_shrink_closed_form(a, lam, expected):
    assert shrink(a, lam) == expected


def test_shrink_negative_branch_matches_grid_oracle():
    # grid on [-6, 6] at 1e-6 spacing, then golden-section refinement
    x = grid_min_scalar(-3.0, 1.0, span=3.0, steps=6 * 10**6 + 1)
    assert abs(x - (-2.0)) < 1e-6
    assert shrink(-3.0, 1.0) == -2.0


def test_scalar_objective_values():
    assert scalar_objective(0, 0, 1) == 0.0
    assert scalar_objective(1, 2, 1) == 1.5
    x = shrink(5, 2)
    assert x == 3.0
    # 2*3 + (3 - 5)**2 / 2 = 8, and no grid point does better
    assert scalar_objective(x, 5, 2) == 8.0
    xs = np.linspace(-5, 10, 150001)
    assert np.min(2 * np.abs(xs) + 0.5 * (xs - 5) ** 2) >= 8.0 - 1e-12


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_input_rejected(bad):
    with pytest.raises(DomainError):
        shrink(bad, 1.0)
    with pytest.raises(DomainError):
        scalar_objective(bad, 0.0, 1.0)
    with pytest.raises(DomainError):
        hard_keep(bad, 1.0)


@pytest.mark.parametrize("lam", [0.0, -1.0, math.nan, math.inf])
def test_bad_threshold_rejected(lam):
    with pytest.raises(DomainError):
        shrink(1.0, lam)


def test_hard_keep_examples():
    assert hard_keep(0.5, 2) == 0.0
    assert hard_keep(-3, 2) == -3.0


def test_hard_keep_boundary_tie_goes_to_zero():
    v = math.sqrt(2.0)
    # the two candidate costs: zeroing beta/2*v^2 and keeping 1 -- equal up to rounding
    assert abs(0.5 * v * v - 1.0) < 1e-15
    assert hard_keep(v, 1.0) == 0.0
    assert hard_keep(-v, 1.0) == 0.0


@given(reals, lams)
def test_odd_symmetry(a, lam):
    assert shrink(-a, lam) == -shrink(a, lam)


@given(reals, reals, lams)
def test_nonexpansive(a, b, lam):
    slack = 4 * np.finfo(float).eps * max(abs(a), abs(b), lam)
    assert abs(shrink(a, lam) - shrink(b, lam)) <= abs(a - b) + slack


@given(reals, lams)
def test_magnitude_identity(a, lam):
    assert abs(shrink(a, lam)) == max(abs(a) - lam, 0.0)


@given(reals, lams)
def test_agrees_with_three_case_form(a, lam):
    assert shrink(a, lam) == three_case_shrink(a, lam)


@given(reals, lams, lams)
def test_monotone_in_threshold(a, l1, l2):
    assume(l1 < l2)
    assert abs(shrink(a, l1)) >= abs(shrink(a, l2))


@given(st.floats(-50, 50), st.floats(1e-3, 10))
def test_optimal_on_dense_grid(a, lam):
    x = shrink(a, lam)
    xs = np.linspace(a - 3 * lam - 1, a + 3 * lam + 1, 100001)
    grid = lam * np.abs(xs) + 0.5 * (xs - a) ** 2
    assert scalar_objective(x, a, lam) <= grid.min() + 1e-12


@given(st.floats(-100, 100), st.floats(1e-3, 100))
def test_hard_keep_picks_cheaper_branch(v, beta):
    out = hard_keep(v, beta)
    assert out in (0.0, v)
    chosen = 0.5 * beta * v * v if out == 0.0 else 1.0
    other = 1.0 if out == 0.0 else 0.5 * beta * v * v
    assert chosen <= other + 1e-12
