from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from b2dunkl.algebra import NORMSQ, Params, VPoly, laplacian
from b2dunkl.forms import pair_tau
from b2dunkl.harmonic import (
    BasisEntry,
    NotHomogeneous,
    basis_poly,
    basis_values,
    build_basis,
    harmonic_decomposition,
    norm_pi,
    norms_float,
    pochhammer_quotient,
    project_harmonic,
    radical_indices,
    type_label,
)
from b2dunkl.verify import suite_harmonic

from conftest import params_strategy

P = Params(Fraction(1, 4), Fraction(1, 8))


def test_hand_expansion_degree_two():
    # p[2,3] = ((1 + 2k+) x1^2 t1 + 2 x1 x2 t2 - (1 - 2k+) x2^2 t1) at k+ = 3/8
    p = basis_poly(2, 3, P)
    assert p.terms[(2, 0)] == (Fraction(7, 4), 0)
    assert p.terms[(0, 2)] == (Fraction(-1, 4), 0)
    assert p.terms[(1, 1)] == (0, 2)


def test_types_alternate():
    labels = {e.n: [] for e in build_basis(6, P)}
    for e in build_basis(6, P):
        labels[e.n].append(e.type_label)
    for n in range(1, 7):
        want = ["EE", "OO", "EE", "OO"] if n % 2 else ["OE", "EO", "OE", "EO"]
        assert labels[n] == want


def test_basis_count_and_json_round_trip():
    entries = build_basis(3, P)
    assert len(entries) == 14
    for e in entries:
        assert BasisEntry.from_json(e.to_json()) == e


def test_degree_one_norms_closed_form():
    k0, k1 = P.k0, P.k1
    assert [norm_pi(1, i, P) for i in range(1, 5)] == [
        2 * (1 - 2 * k0 - 2 * k1), 2 * (1 + 2 * k0 + 2 * k1),
        2 * (1 + 2 * k0 - 2 * k1), 2 * (1 - 2 * k0 + 2 * k1)]


def test_zero_parameters_give_factorial_norms():
    z = Params(0, 0)
    for n in range(6):
        for e in build_basis(n, z):
            assert e.nu == 2 ** e.n * __import__("math").factorial(e.n)


def test_pochhammer_quotient_trivial():
    assert pochhammer_quotient(Fraction(0), Fraction(0), 3, "1111") == 1


def test_radical_detected_at_a_zero_of_the_norm():
    # nu(p[1,1]) = 2(1 - 2k+) vanishes at k+ = 1/2
    assert (1, 1) in radical_indices(Params(Fraction(1, 4), Fraction(1, 4)), 3)
    assert radical_indices(P, 6) == []


@settings(max_examples=10)
@given(params_strategy())
def test_basis_harmonic_for_any_parameters(params):
    for n in range(1, 7):
        for i in range(1, 5):
            assert not laplacian(basis_poly(n, i, params), params)


@settings(max_examples=8)
@given(params_strategy())
def test_closed_form_norms_match_pairing(params):
    for n in range(6):
        for e in build_basis(n, params)[-4:] if n else build_basis(0, params):
            assert pair_tau(e.poly, e.poly, params) == e.nu


def test_projection_and_decomposition():
    f = VPoly.monomial(3, 1, 1, -2) + VPoly.monomial(0, 4, Fraction(1, 3), 0)
    h = project_harmonic(f, P)
    assert not laplacian(h, P)
    parts = harmonic_decomposition(f, P)
    total = VPoly.zero()
    for j, part in parts:
        assert not laplacian(part, P)
        total = total + part.mul_normsq(j)
    assert total == f
    with pytest.raises(NotHomogeneous):
        project_harmonic(f + VPoly.monomial(0, 0, 1, 0), P)


def test_float_recurrence_matches_exact():
    x1, x2 = np.array([0.3, -1.2]), np.array([0.7, 0.4])
    vals = basis_values(8, x1, x2, P)
    for n in range(1, 9):
        for i in range(1, 5):
            v1, v2 = basis_poly(n, i, P).evaluate((x1, x2))
            assert np.allclose(vals[n, i - 1, 0], v1, rtol=1e-13, atol=1e-13)
            assert np.allclose(vals[n, i - 1, 1], v2, rtol=1e-13, atol=1e-13)
    assert np.isnan(norms_float(2, P)[0, 2])


@pytest.mark.parametrize("params", [P, Params(Fraction(-1, 3), Fraction(1, 5)),
                                    Params(Fraction(2, 5), Fraction(-1, 10))])
def test_harmonic_suite(params):
    for check in suite_harmonic(params, nmax=8):
        assert check.passed, check
