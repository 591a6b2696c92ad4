from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from b2dunkl.algebra import (
    GROUP,
    IDENTITY,
    POSITIVE_ROOTS,
    ROT,
    SIGMA1,
    SIGMA12P,
    SIGMA2,
    DivisionError,
    Params,
    VPoly,
    as_fraction,
    divide_linear,
    dunkl,
    element_from_matrix,
    eval_complex,
    group_act,
    laplacian,
    poly_arith,
)
from b2dunkl.verify import suite_algebra

from conftest import params_strategy, vpoly_strategy

X1, X2 = sp.symbols("x1 x2")
P = Params(Fraction(1, 4), Fraction(1, 8))


# -- independent symbolic Dunkl operator -----------------------------------

def to_sympy(f: VPoly):
    comps = [0, 0]
    for (a, b), (c1, c2) in f.terms.items():
        mono = X1 ** a * X2 ** b
        comps[0] += sp.Rational(c1.numerator, c1.denominator) * mono
        comps[1] += sp.Rational(c2.numerator, c2.denominator) * mono
    return [sp.expand(c) for c in comps]


def sympy_dunkl(i, comps, params):
    """D_i from the defining formula, with sympy doing the division."""
    x = (X1, X2)
    out = [sp.diff(c, x[i - 1]) for c in comps]
    for v, key, s in POSITIVE_ROOTS:
        k = params.k0 if key == "k0" else params.k1
        k = sp.Rational(k.numerator, k.denominator)
        m = sp.Matrix(s.matrix)
        xs = sp.Matrix([[X1, X2]]) * m
        moved = [c.subs({X1: xs[0], X2: xs[1]}, simultaneous=True) for c in comps]
        denom = v[0] * X1 + v[1] * X2
        for row in range(2):
            # coefficient of t_row in f(x, t s) - f(x s, t s)
            diff = sum(m[row, j] * (comps[j] - moved[j]) for j in range(2))
            out[row] += k * v[i - 1] * sp.cancel(diff / denom)
    return [sp.expand(c) for c in out]


@given(vpoly_strategy(max_degree=4), params_strategy(), st.sampled_from([1, 2]))
def test_dunkl_matches_symbolic_oracle(f, params, i):
    assert to_sympy(dunkl(i, f, params)) == sympy_dunkl(i, to_sympy(f), params)


def test_dunkl_low_degree_values():
    k0, k1 = P.k0, P.k1
    t1 = VPoly.monomial(0, 0, 1, 0)
    assert dunkl(1, t1, P) == VPoly.zero()
    # p[1,1] = x1 t1 + x2 t2
    f = VPoly.monomial(1, 0, 1, 0) + VPoly.monomial(0, 1, 0, 1)
    assert dunkl(1, f, P) == VPoly.monomial(0, 0, 1 - 2 * (k0 + k1), 0)
    assert dunkl(2, f, P) == VPoly.monomial(0, 0, 0, 1 - 2 * (k0 + k1))


def test_laplacian_of_normsq_times_constant():
    f = VPoly.monomial(2, 0, 1, 0) + VPoly.monomial(0, 2, 1, 0)
    # gamma = 0 and N = 2 give Lap(|x|^2 t1) = 4 t1
    assert laplacian(f, P) == VPoly.monomial(0, 0, 4, 0)


# -- group ------------------------------------------------------------------

def test_group_closed_and_inverses():
    for a in GROUP:
        assert a * a.inverse == IDENTITY
        for b in GROUP:
            assert (a * b) in GROUP
    assert sum(g.is_reflection for g in GROUP) == 4


def test_composition_order():
    f = VPoly.monomial(2, 1, 1, 3) + VPoly.monomial(0, 3, -2, 1)
    for w1 in GROUP:
        for w2 in GROUP:
            assert group_act(w1, group_act(w2, f)) == group_act(w1 * w2, f)
    # a non-commuting pair, so the order is actually pinned
    assert SIGMA1 * ROT != ROT * SIGMA1


def test_reflection_on_x1_t1():
    f = VPoly.monomial(1, 0, 1, 0)
    assert group_act(SIGMA1, f) == f
    assert group_act(SIGMA12P, f) == VPoly.monomial(0, 1, 0, 1)


def test_element_from_matrix_rejects_non_members():
    with pytest.raises(ValueError):
        element_from_matrix(((2, 0), (0, 1)))


# -- polynomial protocol ----------------------------------------------------

@given(vpoly_strategy(), vpoly_strategy(), vpoly_strategy())
def test_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f - f == VPoly.zero()
    assert hash(f + g) == hash(g + f)
    assert poly_arith("sub", f, g) == f - g


@given(vpoly_strategy())
def test_json_round_trip(f):
    assert VPoly.from_json(f.to_json()) == f


@given(vpoly_strategy(), st.sampled_from(GROUP))
def test_group_action_is_linear_and_invertible(f, w):
    assert group_act(w.inverse, group_act(w, f)) == f


def test_exact_division_and_failure():
    f = VPoly.monomial(2, 0, 1, 0) - VPoly.monomial(0, 2, 1, 0)
    assert divide_linear(f, 1, -1) == VPoly.monomial(1, 0, 1, 0) + VPoly.monomial(0, 1, 1, 0)
    with pytest.raises(DivisionError):
        divide_linear(VPoly.monomial(2, 0, 1, 0), 1, 1)


def test_floats_rejected_on_exact_paths():
    with pytest.raises(TypeError):
        as_fraction(0.25)
    with pytest.raises(TypeError):
        Params(0.25, 0)


def test_eval_complex_exact():
    f = VPoly.monomial(1, 1, 1, 0)  # x1 x2 t1
    assert eval_complex(f, ((1, 0), (0, 1))) == ((0, 1), (0, 0))


@pytest.mark.parametrize("params", [P, Params(Fraction(-1, 3), Fraction(1, 5))])
def test_algebra_suite(params):
    for check in suite_algebra(params, nmax=5):
        assert check.passed, check
