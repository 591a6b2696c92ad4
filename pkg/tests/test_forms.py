from fractions import Fraction

import pytest
from hypothesis import given, settings

from b2dunkl.algebra import GROUP, Params, VPoly, dunkl, group_act
from b2dunkl.forms import (
    exp_laplacian,
    laguerre_coefficients,
    laguerre_element,
    pair_gauss,
    pair_tau,
)
from b2dunkl.harmonic import basis_poly, norm_pi
from b2dunkl.verify import suite_forms

from conftest import params_strategy, vpoly_strategy

P = Params(Fraction(1, 4), Fraction(1, 8))


@settings(max_examples=15)
@given(vpoly_strategy(max_degree=3), vpoly_strategy(max_degree=3))
def test_pairing_symmetric(f, g):
    assert pair_tau(f, g, P) == pair_tau(g, f, P)


@settings(max_examples=15)
@given(vpoly_strategy(max_degree=3), vpoly_strategy(max_degree=4))
def test_multiplication_adjoint_to_dunkl(f, g):
    for i in (1, 2):
        assert pair_tau(f.mul_x(i), g, P) == pair_tau(f, dunkl(i, g, P), P)


@settings(max_examples=10)
@given(vpoly_strategy(max_degree=3), vpoly_strategy(max_degree=3), params_strategy())
def test_group_invariance(f, g, params):
    base = pair_tau(f, g, params)
    for w in GROUP:
        assert pair_tau(group_act(w, f), group_act(w, g), params) == base


def test_exp_laplacian_inverse_pair():
    f = basis_poly(2, 1, P).mul_normsq(2)
    assert exp_laplacian(exp_laplacian(f, P), P, sign=-1) == f


def test_gaussian_form_agrees_on_harmonics():
    # nu_G(f) = nu(f) for harmonic f
    for n in range(4):
        for i in (1, 2) if n == 0 else (1, 2, 3, 4):
            f = basis_poly(n, i, P)
            assert pair_gauss(f, f, P) == norm_pi(n, i, P)


def test_laguerre_coefficients_known():
    # L_2^(1)(s) = 3 - 3s + s^2/2
    assert laguerre_coefficients(2, 1) == [3, -3, Fraction(1, 2)]


def test_laguerre_elements_orthogonal_with_stated_norms():
    elems = [laguerre_element(m, n, i, P) for m in range(3) for n in range(3)
             for i in ((1, 2) if n == 0 else (1, 2, 3, 4)) if m + n <= 3]
    for a in elems:
        for b in elems:
            got = pair_gauss(a.poly, b.poly, P)
            assert got == (a.nu_g if a is b else 0)


def test_laguerre_element_rejects_bad_index():
    with pytest.raises(ValueError):
        laguerre_element(0, 0, 3, P)


@pytest.mark.parametrize("params", [P, Params(Fraction(-1, 3), Fraction(1, 5))])
def test_forms_suite(params):
    for check in suite_forms(params, nmax=3):
        assert check.passed, check
