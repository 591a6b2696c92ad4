import math
from pathlib import Path

import mpmath
import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings, strategies as st

from b2dunkl.weight import (
    DomainError,
    NonConvergence,
    OnMirror,
    PoleError,
    SIGMA_DIAG,
    WeightParams,
    WeightTable,
    K_degenerate,
    K_fundamental,
    K_matrix,
    K_sector_vec,
    L_connection,
    L_direct,
    L_matrix,
    d_coefficients,
    default_theta_grid,
    eta,
    gamma_fn,
    gamma_matrix,
    gauss_2f1,
    weight_sample,
)

DATA = Path(__file__).parent / "data"
WP = WeightParams(0.3, 0.1)

square = st.tuples(st.floats(-0.45, 0.45), st.floats(-1.0, 1.0)).map(
    lambda p: (p[0], p[1] * (0.49 - abs(p[0]))))


# -- gamma ---------------------------------------------------------------------

def test_gamma_values():
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gamma_fn(1) == 1 and gamma_fn(5) == 24
    a = 0.3
    assert gamma_fn(2 * a) / gamma_fn(a) == pytest.approx(
        2 ** (2 * a - 1) * gamma_fn(a + 0.5) / math.sqrt(math.pi), rel=1e-14)
    for bad in (0, -1, -7):
        with pytest.raises(PoleError):
            gamma_fn(bad)


@given(st.floats(1e-3, 30))
def test_gamma_against_mpmath(x):
    assert gamma_fn(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-13)


# -- 2F1 ---------------------------------------------------------------------

abc = st.tuples(st.floats(-1.5, 1.5), st.floats(-1.5, 1.5), st.floats(0.1, 2.5))


@given(abc, st.floats(0.0, 0.5))
def test_2f1_series_against_scipy(p, s):
    a, b, c = p
    want = sc.hyp2f1(a, b, c, s)
    assert gauss_2f1(a, b, c, s) == pytest.approx(want, rel=1e-12, abs=1e-14)


@given(abc, st.floats(0.5, 0.97))
def test_2f1_connection_against_mpmath(p, s):
    a, b, c = p
    want = float(mpmath.hyp2f1(a, b, c, s))
    assert gauss_2f1(a, b, c, s) == pytest.approx(want, rel=1e-10, abs=1e-12)


def test_2f1_special_values():
    assert gauss_2f1(0.7, -0.2, 1.3, 0.0) == 1.0
    # quadratic transformation at a = 0.3, u = 0.5
    assert gauss_2f1(0.3, 0.8, 1.6, 0.75) == pytest.approx(0.75 ** -0.6, rel=1e-14)


@given(abc, st.floats(0.0, 0.9))
def test_euler_identity(p, u):
    a, b, c = p
    lhs = gauss_2f1(a, b, c, u)
    rhs = (1 - u) ** (c - a - b) * gauss_2f1(c - a, c - b, c, u)
    assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-13)


def test_2f1_errors():
    with pytest.raises(DomainError):
        gauss_2f1(0.1, 0.2, 0.3, 1.0)
    with pytest.raises(PoleError):
        gauss_2f1(0.1, 0.2, -1.0, 0.3)
    # c - a - b = 0 falls back to the series, which needs too many terms here
    with pytest.raises(NonConvergence):
        gauss_2f1(0.5, 0.5, 1.0, 1 - 1e-7)


# -- eta, L ---------------------------------------------------------------------

def test_eta_values():
    assert eta(0, 0) == pytest.approx(0.5, rel=1e-15)
    k0, k1 = 0.3, 0.1
    s = eta(k0, k1) * eta(-k0, -k1) + eta(k0, -k1) * eta(-k0, k1)
    assert s == pytest.approx(0.5, abs=1e-12)
    # ratio form with Gamma(2 k0) / Gamma(k0), away from its pole
    ratio = (gamma_fn(2 * k0) / gamma_fn(k0) * gamma_fn(0.5 + k1)
             / gamma_fn(0.5 + k0 + k1))
    assert eta(k0, k1) == pytest.approx(ratio, rel=1e-14)
    assert abs(eta(1e-12, 0.2) - eta(0, 0.2)) < 1e-11


def test_det_L_at_sample_points():
    for u in (0.1, 0.5, 0.9):
        assert np.linalg.det(L_matrix(u, WP)) == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=25)
@given(square, st.floats(0.01, 0.99))
def test_det_L_and_branch_agreement(k, u):
    wp = WeightParams(*k)
    assert np.linalg.det(L_matrix(u, wp)) == pytest.approx(1.0, abs=1e-10)
    a = L_direct(math.sqrt(0.5), *k)
    b = L_connection(math.sqrt(0.5), *k)
    assert np.max(np.abs(a - b)) <= 1e-10 * np.max(np.abs(a))


def test_L_diagonal_when_k0_vanishes():
    wp = WeightParams(0.0, 0.25)
    for u in (0.2, 0.6, 0.95):
        want = np.diag([u ** 0.25, u ** -0.25])
        assert np.allclose(L_matrix(u, wp), want, rtol=1e-14, atol=1e-15)


def test_hidden_symmetry():
    k0, k1 = 0.3, 0.1
    for u in (0.2, 0.5, 0.7):
        s = u * u
        lhs = (1 - s) ** -k0 * gauss_2f1(-k0, 0.5 - k0 + k1, k1 + 0.5, s)
        rhs = (1 - s) ** k0 * gauss_2f1(k0, 0.5 + k0 + k1, k1 + 0.5, s)
        assert lhs == pytest.approx(rhs, rel=1e-11)


def test_extended_precision_agrees_near_the_diagonal():
    ext = WeightParams(0.3, 0.1, precision="extended")
    for eps in (1e-3, 1e-8, 1e-12):
        u, t = 1 - eps, eps * (2 - eps)
        a, b = L_matrix(u, WP, t), L_matrix(u, ext, t)
        assert np.max(np.abs(a - b)) <= 1e-13 * np.max(np.abs(b))


def test_vectorized_matches_scalar():
    u = np.linspace(0.02, 0.98, 40)
    vec = K_sector_vec(u, (1 - u) * (1 + u), WP)
    for j, x in enumerate(u):
        assert np.allclose(vec[j], K_fundamental(x, WP), rtol=1e-14, atol=1e-16)


# -- K ---------------------------------------------------------------------

def test_d_coefficients_against_eta_products():
    # d1 = 4 c eta(-k0,-k1) eta(k0,-k1), d2 = 4 c eta(k0,k1) eta(-k0,k1)
    k0, k1 = 0.3, 0.1
    d1, d2 = d_coefficients(WP)
    assert d1 == pytest.approx(4 * WP.c * eta(-k0, -k1) * eta(k0, -k1), rel=1e-14)
    assert d2 == pytest.approx(4 * WP.c * eta(k0, k1) * eta(-k0, k1), rel=1e-14)
    assert np.linalg.det(gamma_matrix(k0, k1)) == pytest.approx(-0.5, rel=1e-13)


def test_det_K():
    d1, d2 = d_coefficients(WP)
    want = WP.c ** 2 * (1 - math.tan(0.3 * math.pi) ** 2 * math.tan(0.1 * math.pi) ** 2)
    assert d1 * d2 == pytest.approx(want, rel=1e-13)
    assert np.linalg.det(K_matrix((1.0, 0.37), WP)) == pytest.approx(want, rel=1e-12)


@settings(max_examples=20)
@given(square, st.floats(0.01, 2 * math.pi - 0.01))
def test_K_positive_definite_and_symmetric(k, th):
    x = (math.cos(th), math.sin(th))
    try:
        K = K_matrix(x, WeightParams(*k))
    except OnMirror:
        return
    assert np.allclose(K, K.T)
    assert np.all(np.linalg.eigvalsh(K) > 0)


def test_on_mirror_and_domain():
    for x in ((1, 0), (0, 2), (1, 1), (-1, 1)):
        with pytest.raises(OnMirror):
            K_matrix(x, WP)
    with pytest.raises(DomainError):
        WeightParams(0.3, 0.2)


def test_degenerate_forms_use_doubled_exponent():
    for wp in (WeightParams(0.0, 0.25), WeightParams(0.2, 0.0)):
        for th in np.linspace(0.05, 6.2, 33):
            x = (math.cos(th), math.sin(th))
            try:
                K = K_matrix(x, wp)
            except OnMirror:
                continue
            assert np.allclose(K, K_degenerate(x, wp), rtol=1e-12, atol=1e-14)


def test_degenerate_forms_with_printed_exponent_do_not_match():
    wp = WeightParams(0.0, 0.25)
    x = (math.cos(0.3), math.sin(0.3))
    r = abs(x[1] / x[0]) ** 0.25
    printed = wp.c * np.diag([r, 1 / r])
    assert np.max(np.abs(K_matrix(x, wp) - printed)) > 1e-3


# -- tabulation ---------------------------------------------------------------

def test_weight_sample_symmetry_and_homogeneity():
    grid = np.linspace(0.05, math.pi / 2 - 0.05, 10)
    table = weight_sample(grid, WP)
    mirrored = weight_sample(math.pi / 2 - grid, WP)
    # theta -> pi/2 - theta is sigma12+, which swaps the diagonal entries
    assert np.allclose(table.k11, mirrored.k22, rtol=1e-13)
    assert np.allclose(table.k12, mirrored.k12, rtol=1e-13)
    for th in grid:
        base = K_matrix((math.cos(th), math.sin(th)), WP)
        for r in (0.5, 2.0):
            assert np.allclose(K_matrix((r * math.cos(th), r * math.sin(th)), WP), base,
                               rtol=0, atol=1e-12)


def test_zero_parameters_give_constant_rows():
    table = weight_sample(default_theta_grid(5), WeightParams(0, 0))
    c = 1 / (2 * math.pi)
    assert np.allclose(table.k11, c, rtol=1e-14) and np.allclose(table.k22, c, rtol=1e-14)
    assert np.allclose(table.k12, 0, atol=1e-16)


def test_mirror_rows_are_null_and_csv_round_trip():
    table = weight_sample([0.0, 0.3, math.pi / 4], WP)
    assert np.isnan(table.k11[0]) and np.isnan(table.k22[2])
    back = WeightTable.from_csv(table.to_csv())
    assert np.array_equal(back.theta, table.theta)
    assert np.allclose(back.k11[1:2], table.k11[1:2], rtol=0, atol=0)
    assert np.isnan(back.k11[0])


def test_conjugated_view_has_note():
    table = weight_sample([0.3], WP, conjugate=True)
    k = SIGMA_DIAG @ K_matrix((math.cos(0.3), math.sin(0.3)), WP) @ SIGMA_DIAG
    assert table.k22[0] == pytest.approx(k[1, 1], rel=1e-15)
    assert "not rescaled" in table.to_csv().splitlines()[0]


def test_golden_table():
    text = (DATA / "weight_sample_k0_0.3_k1_0.1.csv").read_text()
    golden = WeightTable.from_csv(text)
    fresh = weight_sample(default_theta_grid(64), WP)
    for col in ("theta", "k11", "k12", "k22"):
        assert np.allclose(getattr(fresh, col), getattr(golden, col), rtol=1e-13, atol=0)
