import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shrinkage import DomainError, nuclear_ball_nearest, nuclear_norm, shrink, svd, svt
from shrinkage.oracle import (nuclear_ball_check, perturbation_check, random_orthogonal,
                              spectral_family_check, svt_objective)


def test_svt_diagonal_example():
    sol = svt(np.diag([3.0, 1.0]), 1.0)
    np.testing.assert_array_equal(sol.solution, np.diag([2.0, 0.0]))
    np.testing.assert_array_equal(sol.sigma_out, [2.0, 0.0])
    assert sol.rank_out == 1
    # each singular value solves its own scalar problem; compare with a grid
    for s, out in zip((3.0, 1.0), sol.sigma_out):
        xs = np.linspace(-1, 4, 500001)
        assert abs(xs[np.argmin(np.abs(xs) + 0.5 * (xs - s) ** 2)] - out) <= 1e-5


def test_svt_zero_input():
    sol = svt(np.zeros((3, 2)), 4.0)
    np.testing.assert_array_equal(sol.solution, 0.0)
    assert sol.rank_out == 0


def test_svt_random_against_oracles(rng):
    a = rng.standard_normal((4, 3))
    sol = svt(a, 2.0)
    pert = perturbation_check(sol.solution, svt_objective(a, 2.0), trials=1000, radius=0.1,
                              seed=1, tolerance=1e-9)
    fam = spectral_family_check(sol.solution, a, 2.0, values=1000)
    assert pert.passed and fam.passed
    assert sol.objective == pytest.approx(svt_objective(a, 2.0)(sol.solution[None])[0], rel=1e-12)


def test_nuclear_ball_diagonal_example():
    sol = nuclear_ball_nearest(np.diag([3.0, 1.0]), 2.0)
    np.testing.assert_array_equal(sol.solution, np.diag([2.0, 0.0]))
    assert sol.effective_lambda == 1.0
    # dense sweep over diagonal candidates diag(x, y) with |x| + |y| <= 2
    g = np.linspace(-2, 2, 801)
    x, y = np.meshgrid(g, g)
    feas = np.abs(x) + np.abs(y) <= 2 + 1e-12
    d = np.sqrt((x - 3) ** 2 + (y - 1) ** 2)
    assert d[feas].min() >= sol.objective - 1e-12


def test_nuclear_ball_inactive_returns_input(rng):
    a = rng.standard_normal((3, 4))
    sol = nuclear_ball_nearest(a, nuclear_norm(a) + 1.0)
    np.testing.assert_array_equal(sol.solution, a)
    assert sol.effective_lambda == 0.0


def test_nuclear_ball_random_against_oracle(rng):
    a = rng.standard_normal((3, 3))
    tau = 0.5 * nuclear_norm(a)
    sol = nuclear_ball_nearest(a, tau)
    assert abs(nuclear_norm(sol.solution) - tau) <= 1e-9 * max(1.0, tau)
    assert nuclear_ball_check(sol.solution, a, tau, seed=5).passed


def test_bad_parameters():
    with pytest.raises(DomainError):
        svt(np.eye(2), 0.0)
    with pytest.raises(DomainError):
        nuclear_ball_nearest(np.eye(2), -1.0)


def test_same_singular_subspaces(rng):
    a = rng.standard_normal((5, 4))
    fac = svd(a)
    sol = svt(a, 0.8)
    assert np.linalg.norm(sol.solution - (fac.u * sol.sigma_out) @ fac.v.T) <= 1e-9


shapes = st.tuples(st.integers(1, 6), st.integers(1, 6))


@settings(max_examples=60)
@given(shapes, st.floats(0.1, 5.0), st.integers(0, 2**32 - 1))
def test_spectral_consistency(shape, beta, seed):
    a = np.random.default_rng(seed).standard_normal(shape)
    sol = svt(a, beta)
    expected = [shrink(s, 1 / beta) for s in svd(a).sigma]
    np.testing.assert_allclose(svd(sol.solution).sigma, expected, atol=1e-9)


@settings(max_examples=60)
@given(shapes, st.floats(0.1, 5.0), st.integers(0, 2**32 - 1))
def test_unitary_equivariance(shape, beta, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(shape)
    s = np.linalg.svd(a, compute_uv=False)
    # subspaces are only unique for well-separated singular values
    if s.size > 1 and np.min(np.abs(np.diff(s))) < 1e-3:
        return
    left, right = random_orthogonal(rng, shape[0]), random_orthogonal(rng, shape[1])
    lhs = svt(left @ a @ right, beta).solution
    rhs = left @ svt(a, beta).solution @ right
    assert np.linalg.norm(lhs - rhs) <= 1e-8


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=6), st.floats(0.1, 5.0))
def test_diagonal_reduction(d, beta):
    a = np.diag(d)
    entrywise = np.diag([shrink(x, 1 / beta) for x in d])
    np.testing.assert_allclose(svt(a, beta).solution, entrywise, rtol=0, atol=1e-10)


@settings(max_examples=60)
@given(shapes, st.floats(0.05, 2.0), st.integers(0, 2**32 - 1))
def test_nuclear_ball_feasible(shape, ratio, seed):
    a = np.random.default_rng(seed).standard_normal(shape)
    nuc = nuclear_norm(a)
    if nuc == 0.0:
        return
    tau = ratio * nuc
    sol = nuclear_ball_nearest(a, tau)
    out = nuclear_norm(sol.solution)
    assert out <= tau + 1e-9 * max(1.0, tau)
    if ratio < 1.0:
        assert abs(out - tau) <= 1e-9 * max(1.0, tau)
