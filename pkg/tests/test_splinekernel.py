import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_factor, brute_series, grid_nodes, tail_bound

from trigspline import (
    Cs,
    DegenerateFactorError,
    GridSpec,
    SampleGrid,
    SplineParams,
    Ss,
    basis_tables,
    c_series,
    coeffs_1d,
    conv_factor,
    eval_poly_1d,
    eval_spline_1d,
    eval_spline_fund_1d,
    hc_factor,
    hs_factor,
    s_series,
    truncation_depth,
)
from trigspline.splinekernel import _tables

ALL_I = [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_conv_factor():
    assert conv_factor(1, 1) == 1.0
    assert conv_factor(1, 2) == 0.25
    assert conv_factor(2, 2) == 0.125
    np.testing.assert_allclose(conv_factor(3, [1, 2, 3]), [1, 1 / 16, 1 / 81])
    with pytest.raises(ValueError):
        conv_factor(1, 0)


def test_params_validation():
    with pytest.raises(ValueError, match="order"):
        SplineParams(order=0)
    with pytest.raises(ValueError, match="stitch_indicator"):
        SplineParams(stitch_indicator=2)
    with pytest.raises(ValueError, match="tail_tolerance"):
        SplineParams(tail_tolerance=0.0)
    with pytest.raises(ValueError, match="3 components"):
        SplineParams(gamma=(1, 1))
    assert SplineParams().is_simple
    assert not SplineParams(eta=(1, 0, 1)).is_simple
    assert SplineParams(gamma=[1, 0, 0]).gamma == (1.0, 0.0, 0.0)


def test_cos_series_collapse():
    p = SplineParams(order=2, gamma=(1, 0, 0))
    t = np.linspace(-3, 9, 17)
    np.testing.assert_allclose(c_series(p, 2, 7, t), conv_factor(2, 2) * np.cos(2 * t), atol=1e-16)


def test_sin_series_collapse():
    p = SplineParams(order=1, eta=(1, 0, 0))
    t = np.linspace(0, 6, 11)
    np.testing.assert_allclose(s_series(p, 3, 9, t), conv_factor(1, 3) * np.sin(3 * t), atol=1e-16)


def test_cos_series_value_n3():
    p = SplineParams(0, 0, 1)
    # first partial sum, then the full value: residues +-1 mod 3 of zeta(2)
    assert brute_series(1, 3, 1, 0, 0.0, M=1) == pytest.approx(1.3125, abs=1e-15)
    M = 1_000_000
    full = c_series(p, 1, 3, 0.0)
    assert abs(full - brute_series(1, 3, 1, 0, 0.0, M)) <= tail_bound(3, 1, M)
    assert full == pytest.approx(8 / 9 * np.pi**2 / 6, abs=1e-14)


@pytest.mark.parametrize("I1", [0, 1])
@pytest.mark.parametrize("r,eps", [(1, 1e-6), (2, 1e-10), (3, 1e-10)])
@pytest.mark.parametrize("N", [3, 7])
def test_closed_vs_truncated_series(I1, r, eps, N):
    """Raw series agree with the certified partial sums to within eps."""
    p = SplineParams(I1, 0, r, gamma=(0.5, 1.0, -2.0), eta=(1.0, 3.0, 0.5), tail_tolerance=eps)
    t = np.array([0.0, 0.4, 1.7, np.pi, 5.9])
    c1, s1 = _tables(p, N, t, "closed")
    c2, s2 = _tables(p, N, t, "direct")
    assert np.max(np.abs(c1 - c2)) < eps
    assert np.max(np.abs(s1 - s2)) < eps


def test_closed_series_against_independent_oracle():
    gamma = (0.3, -1.2, 2.0)
    for I1 in (0, 1):
        p = SplineParams(I1, 0, 2, gamma=gamma, eta=gamma)
        t = np.array([0.2, 2.9, 4.4])
        M = 20_000
        for k in (1, 2, 3):
            ref_c = brute_series(k, 7, 2, I1, t, M, gamma, "cos")
            ref_s = brute_series(k, 7, 2, I1, t, M, gamma, "sin")
            bound = tail_bound(7, 2, M, 2.0)
            assert np.max(np.abs(c_series(p, k, 7, t) - ref_c)) <= bound
            assert np.max(np.abs(s_series(p, k, 7, t) - ref_s)) <= bound


def test_truncation_depth_is_minimal():
    for r, eps, N in [(1, 1e-6, 3), (2, 1e-10, 7), (3, 1e-12, 9)]:
        p = SplineParams(order=r, tail_tolerance=eps)
        M = truncation_depth(p, N)
        assert tail_bound(N, r, M) < eps
        assert M == 1 or tail_bound(N, r, M - 1) >= eps


def test_direct_refuses_huge_depth():
    with pytest.raises(ValueError, match="closed"):
        c_series(SplineParams(order=1, tail_tolerance=1e-12), 1, 3, 0.5, method="direct")


def test_periodicity_and_symmetry(rng):
    p = SplineParams(1, 0, 2)
    t = rng.uniform(-7, 7, 20)
    np.testing.assert_allclose(c_series(p, 2, 7, t + 2 * np.pi), c_series(p, 2, 7, t), atol=1e-14)
    np.testing.assert_allclose(Cs(p, 2, 7, t + 2 * np.pi), Cs(p, 2, 7, t), atol=1e-13)
    np.testing.assert_allclose(s_series(p, 3, 7, -t), -s_series(p, 3, 7, t), atol=1e-14)
    assert abs(s_series(p, 1, 9, 0.0)) < 1e-15


def test_factor_collapse_and_pairing():
    assert hc_factor(SplineParams(order=3, gamma=(1, 0, 0)), 2, 7) == pytest.approx(conv_factor(3, 2))
    p = SplineParams(1, 1, 2)
    for k in (1, 2, 3):
        assert hs_factor(p, k, 7) == hc_factor(p, k, 7)
    q = SplineParams(0, 0, 1)
    assert hc_factor(q, 1, 3) == pytest.approx(c_series(q, 1, 3, 0.0), abs=1e-15)


@pytest.mark.parametrize("I1,I2", ALL_I)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_factors_against_brute_force(I1, I2, r):
    gamma = (1.0, 0.7, -0.4)
    p = SplineParams(I1, I2, r, gamma=gamma, eta=gamma)
    M = 200_000
    for N in (3, 7, 9):
        for k in range(1, (N - 1) // 2 + 1):
            ref = brute_factor(k, N, r, I1, I2, M, gamma)
            assert abs(hc_factor(p, k, N) - ref) <= tail_bound(N, r, M) + 1e-15
            direct = hc_factor(SplineParams(I1, I2, r, gamma=gamma, eta=gamma, tail_tolerance=1e-6), k, N, "direct")
            assert abs(hc_factor(p, k, N) - direct) < 1e-6


def test_degenerate_factor_guard():
    p0 = SplineParams(0, 0, 1)
    hi_plus_lo = hc_factor(p0, 1, 3) - 1.0
    bad = SplineParams(0, 0, 1, gamma=(-hi_plus_lo, 1, 1))
    with pytest.raises(DegenerateFactorError, match="hc_1"):
        Cs(bad, 1, 3, 0.3)


def test_harmonic_range():
    with pytest.raises(IndexError, match="k=4"):
        Cs(SplineParams(), 4, 7, 0.0)
    with pytest.raises(ValueError):
        Cs(SplineParams(), 1, 4, 0.0)


@pytest.mark.parametrize("I1,I2", ALL_I)
@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("N", [3, 7])
def test_node_identity_brute_force(I1, I2, r, N):
    """Cs and Ss reduce to cos and sin on the interpolation grid."""
    M = 100_000
    x = grid_nodes(N, I2)
    bound = tail_bound(N, r, M)
    for k in range(1, (N - 1) // 2 + 1):
        h = brute_factor(k, N, r, I1, I2, M)
        cs = brute_series(k, N, r, I1, x, M) / h
        ss = brute_series(k, N, r, I1, x, M, kind="sin") / h
        tol = 4 * bound / abs(h) + 1e-14
        assert np.max(np.abs(cs - np.cos(k * x))) <= tol
        assert np.max(np.abs(ss - np.sin(k * x))) <= tol


@pytest.mark.parametrize("I1,I2", ALL_I)
@pytest.mark.parametrize("N", [3, 7, 9])
def test_node_identity_library(I1, I2, N):
    for r in (1, 2, 3):
        p = SplineParams(I1, I2, r)
        x = grid_nodes(N, I2)
        cs, ss = basis_tables(p, N, x)
        k = np.arange(1, (N - 1) // 2 + 1)
        assert np.max(np.abs(cs - np.cos(np.outer(x, k)))) <= 10 * p.tail_tolerance
        assert np.max(np.abs(ss - np.sin(np.outer(x, k)))) <= 10 * p.tail_tolerance
        assert Cs(p, 1, N, x[0]) == pytest.approx(np.cos(x[0]), abs=1e-9)
        assert Ss(p, 1, N, x[-1]) == pytest.approx(np.sin(x[-1]), abs=1e-9)


def test_basis_tables_shape():
    cs, ss = basis_tables(SplineParams(), 9, np.zeros((3, 5)))
    assert cs.shape == ss.shape == (3, 5, 4)


# -- 1D splines -------------------------------------------------------------


def sample(f, I=0):
    return SampleGrid(f, [GridSpec(len(f), I)])


@pytest.mark.parametrize("I1,I2", ALL_I)
def test_constant_spline(I1, I2, rng):
    co = coeffs_1d(sample(np.ones(7), I2))
    t = rng.uniform(0, 2 * np.pi, 50)
    for r in (1, 2, 5):
        np.testing.assert_allclose(eval_spline_1d(co, SplineParams(I1, I2, r), t), 1.0, atol=1e-13)


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([3, 5, 7, 9, 11]),
    st.sampled_from(ALL_I),
    st.integers(1, 4),
    st.integers(0, 2**32 - 1),
)
def test_spline_interpolates(N, I, r, seed):
    I1, I2 = I
    f = np.random.default_rng(seed).uniform(-1, 1, N)
    co = coeffs_1d(sample(f, I2))
    vals = eval_spline_1d(co, SplineParams(I1, I2, r), grid_nodes(N, I2))
    assert np.max(np.abs(vals - f)) <= 1e3 * 1e-10


def test_delta_spline_cross_checked_with_fundamental():
    p = SplineParams(0, 0, 1)
    for j0 in range(1, 8):
        f = np.zeros(7)
        f[j0 - 1] = 1
        s = sample(f)
        x = grid_nodes(7, 0)
        vals = eval_spline_1d(coeffs_1d(s), p, x)
        np.testing.assert_allclose(vals, f, atol=1e-12)
        t = np.linspace(0, 2 * np.pi, 41)
        np.testing.assert_allclose(eval_spline_1d(coeffs_1d(s), p, t), eval_spline_fund_1d(s, p, t), atol=1e-12)


def test_r1_same_grid_is_piecewise_linear():
    """Order 1 on a shared grid gives the periodic broken line through the data."""
    f = np.array([0.0, 1.0, -0.5, 2.0, 0.25])
    x = grid_nodes(5, 0)
    t = np.linspace(0, 2 * np.pi, 101)[:-1]
    got = eval_spline_1d(coeffs_1d(sample(f)), SplineParams(0, 0, 1), t)
    ref = np.interp(t, np.r_[x, 2 * np.pi], np.r_[f, f[0]])
    np.testing.assert_allclose(got, ref, atol=1e-12)


@pytest.mark.parametrize("I1,I2", ALL_I)
def test_general_parameter_vectors_interpolate(I1, I2, rng):
    p = SplineParams(I1, I2, 2, gamma=(2.0, 0.5, 1.5), eta=(1.0, -0.3, 0.8))
    f = rng.normal(size=9)
    vals = eval_spline_1d(coeffs_1d(sample(f, I2)), p, grid_nodes(9, I2))
    np.testing.assert_allclose(vals, f, atol=1e-11)


def test_degenerate_collapse_to_polynomial(rng):
    p = SplineParams(0, 1, 2, gamma=(1, 0, 0), eta=(1, 0, 0))
    co = coeffs_1d(sample(rng.normal(size=9), 1))
    t = rng.uniform(0, 2 * np.pi, 100)
    np.testing.assert_allclose(eval_spline_1d(co, p, t), eval_poly_1d(co, t), atol=1e-12, rtol=0)


def test_grid_mismatch():
    co = coeffs_1d(sample(np.ones(5), 0))
    with pytest.raises(ValueError, match="I2=1"):
        eval_spline_1d(co, SplineParams(0, 1, 1), 0.0)


@pytest.mark.parametrize("I1,I2", ALL_I)
def test_halving_eps_spline(I1, I2, rng):
    f = rng.normal(size=7)
    co = coeffs_1d(sample(f, I2))
    t = rng.uniform(0, 2 * np.pi, 10)
    for r, eps in [(1, 1e-7), (2, 1e-7), (3, 1e-10)]:
        v1 = eval_spline_1d(co, SplineParams(I1, I2, r, tail_tolerance=eps), t)
        v2 = eval_spline_1d(co, SplineParams(I1, I2, r, tail_tolerance=eps / 2), t)
        assert np.max(np.abs(v1 - v2)) < eps


@pytest.mark.parametrize("I1", [0, 1])
def test_halving_eps_truncated_series(I1):
    """The certified truncation bounds each raw series, not the quotients."""
    t = np.linspace(0, 2 * np.pi, 9)
    for r, eps in [(1, 1e-5), (2, 1e-8), (3, 1e-10)]:
        p1 = SplineParams(I1, 0, r, tail_tolerance=eps)
        p2 = SplineParams(I1, 0, r, tail_tolerance=eps / 2)
        for k in (1, 2, 3):
            for series in (c_series, s_series):
                d = series(p1, k, 7, t, "direct") - series(p2, k, 7, t, "direct")
                assert np.max(np.abs(d)) < eps
