"""Reproducing kernels P_n, E_n and the truncated exponential-type kernel.

Kernel values are 2x2 arrays ``E[l, j]`` holding the coefficient of
``s_l t_j``: the row index belongs to the y-side (``p(y)*``) and the column
index to the x-side polynomial.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Tuple

import numpy as np

from .algebra import NORMSQ, Params, VPoly
from .harmonic import (
    basis_poly,
    basis_values,
    norm_pi,
    norms_float,
    pochhammer,
    valid_indices,
)


class ZeroNorm(ArithmeticError):
    """A basis norm vanishes, so the kernel is undefined at these parameters."""


def _checked_norm(n: int, i: int, params: Params) -> Fraction:
    nu = norm_pi(n, i, params)
    if nu == 0:
        raise ZeroNorm(f"nu(p[{n},{i}]) = 0 at {params}")
    return nu


def _normsq(x):
    return x[0] * x[0] + x[1] * x[1]


def _radial_coefficient(n: int, m: int) -> Fraction:
    return Fraction(1, 4 ** m * math.factorial(m)) / pochhammer(Fraction(n - 2 * m + 1), m)


def kernel_P(n: int, x, y, params: Params) -> np.ndarray:
    """``P_n(x, y)`` as a 2x2 object array (exact for rational x, y)."""
    out = np.zeros((2, 2), dtype=object)
    if n == 0:
        out[0, 0] = out[1, 1] = Fraction(1)
        out[0, 1] = out[1, 0] = Fraction(0)
        return out
    out[:] = Fraction(0)
    for i in valid_indices(n):
        nu = _checked_norm(n, i, params)
        p = basis_poly(n, i, params)
        py, px = p.evaluate(y), p.evaluate(x)
        for l in range(2):
            for j in range(2):
                out[l, j] = out[l, j] + py[l] * px[j] / nu
    return out


def kernel_E(n: int, x, y, params: Params) -> np.ndarray:
    """``E_n(x, y) = sum_m (|x|^2 |y|^2)^m / (4^m m! (n-2m+1)_m) P_{n-2m}(x, y)``."""
    out = np.zeros((2, 2), dtype=object)
    out[:] = Fraction(0)
    r = _normsq(x) * _normsq(y)
    for m in range(n // 2 + 1):
        out = out + kernel_P(n - 2 * m, x, y, params) * (r ** m * _radial_coefficient(n, m))
    return out


def kernel_P_poly(n: int, y, params: Params) -> Tuple[VPoly, VPoly]:
    """``P_n(., y)`` as the pair of x-polynomials multiplying s1 and s2."""
    if n == 0:
        return VPoly.monomial(0, 0, 1, 0), VPoly.monomial(0, 0, 0, 1)
    rows = [VPoly.zero(), VPoly.zero()]
    for i in valid_indices(n):
        nu = _checked_norm(n, i, params)
        p = basis_poly(n, i, params)
        py = p.evaluate(y)
        for l in range(2):
            rows[l] = rows[l] + p.scale(py[l] / nu)
    return rows[0], rows[1]


def kernel_E_poly(n: int, y, params: Params) -> Tuple[VPoly, VPoly]:
    """``E_n(., y)`` as the pair of x-polynomials multiplying s1 and s2.

    ``y`` must have exact rational coordinates.
    """
    ry = _normsq(y)
    rows = [VPoly.zero(), VPoly.zero()]
    for m in range(n // 2 + 1):
        coef = ry ** m * _radial_coefficient(n, m)
        for l, row in enumerate(kernel_P_poly(n - 2 * m, y, params)):
            rows[l] = rows[l] + row.mul_normsq(m).scale(coef)
    return rows[0], rows[1]


class KernelSum(NamedTuple):
    value: np.ndarray
    #: max-abs entry of the last degree's contribution
    last_term: float


def homogeneous_kernel_terms(x1, x2, y, N: int, params: Params) -> np.ndarray:
    """Float values of ``E_n(x, y)`` for n = 0..N.

    ``x1``, ``x2`` may be arrays; returns shape ``(N + 1, 2, 2) + shape(x1)``.
    """
    if any(norm_pi(n, i, params) == 0 for n in range(N + 1) for i in valid_indices(n)):
        raise ZeroNorm(f"a basis norm up to degree {N} vanishes at {params}")
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    px = basis_values(N, x1, x2, params)
    py = basis_values(N, np.float64(y[0]), np.float64(y[1]), params)
    nu = norms_float(N, params)
    P = np.zeros((N + 1, 2, 2) + x1.shape)
    P[0, 0, 0] = 1.0
    P[0, 1, 1] = 1.0
    for n in range(1, N + 1):
        for i in range(4):
            P[n] += np.einsum("l,j...->lj...", py[n, i], px[n, i]) / nu[n, i]
    r = (x1 * x1 + x2 * x2) * float(y[0] ** 2 + y[1] ** 2)
    E = np.zeros_like(P)
    for n in range(N + 1):
        for m in range(n // 2 + 1):
            E[n] += P[n - 2 * m] * (r ** m * float(_radial_coefficient(n, m)))
    return E


def kernel_E_truncated(x, y, N: int, params: Params, mode: str = "real") -> KernelSum:
    """``sum_{n <= N} E_n(x, y)``, or ``sum (-i)^n E_n(x, y)`` in rotation mode.

    The rotation mode gives the truncation of ``E(x, -i y)`` because E_n is
    homogeneous of degree n in y.
    """
    if mode not in ("real", "complex_y_rotation"):
        raise ValueError(f"unknown mode {mode!r}")
    terms = homogeneous_kernel_terms(x[0], x[1], y, N, params)
    if mode == "complex_y_rotation":
        phases = (-1j) ** np.arange(N + 1)
        terms = terms * phases[:, None, None]
    return KernelSum(terms.sum(axis=0), float(np.max(np.abs(terms[N]))))


def omega(u: float, z: float) -> float:
    """``Gamma(u)^2 / (Gamma(u+z) Gamma(u-z))``, zero where a denominator has a pole."""
    if u <= 0:
        raise ValueError("omega needs u > 0")
    for arg in (u + z, u - z):
        if arg <= 0 and float(arg).is_integer():
            return 0.0
    return math.exp(2 * math.lgamma(u) - math.lgamma(u + z) - math.lgamma(u - z)) * \
        _gamma_sign(u + z) * _gamma_sign(u - z)


def _gamma_sign(x: float) -> float:
    if x > 0:
        return 1.0
    return -1.0 if math.floor(x) % 2 else 1.0


def norm_prime_limit(n_mod_4: int, i: int, params: Params) -> float:
    """Large-degree limit of ``nu(p[n,i]) / (2^n n!)`` along a residue class."""
    kp, km = (float(v) for v in (params.kplus, params.kminus))
    case_one = (n_mod_4 in (0, 1) and i in (1, 2)) or (n_mod_4 in (2, 3) and i in (3, 4))
    if case_one:
        return omega(0.25, kp / 2) * omega(0.75, km / 2)
    return omega(0.25, km / 2) * omega(0.75, kp / 2)


def beta_growth(f: VPoly, x) -> float:
    """``f1(x)^2 + f2(x)^2``."""
    v1, v2 = f.evaluate(x)
    return v1 * v1 + v2 * v2


def beta_bound(m: int, x, params: Params) -> float:
    """Upper bound for ``beta(p[2m,i]) + beta(p[2m,i+1])``."""
    k = 0.5 + abs(float(params.k0)) + abs(float(params.k1))
    ratio = pochhammer(k, m) / pochhammer(0.5, m)
    return 2 * ratio ** 2 * float(_normsq(x)) ** (2 * m)
