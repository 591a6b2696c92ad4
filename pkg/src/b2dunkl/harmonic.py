"""Orthogonal harmonic basis p[n, i] and its exact norms.

The basis is produced by the two-step matrix recurrence: odd degrees
multiply the previous even block by ``X = [[x1, x2], [-x2, x1]]``; even
degrees first rescale by ``diag((2m-1 +/- 2 lam) / (2m-1))`` where ``lam``
alternates between ``k+`` and ``k-``.  Norms come from a closed-form
quotient of Pochhammer symbols (:func:`pochhammer_quotient`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .algebra import (
    NORMSQ,
    SIGMA1,
    SIGMA12P,
    SIGMA2,
    T1,
    T2,
    Params,
    VPoly,
    dunkl,
    group_act,
    laplacian,
    laplacian_power,
)

TYPE_LABELS = {(1, 1): "EE", (1, -1): "EO", (-1, 1): "OE", (-1, -1): "OO"}


class NotEigenvector(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class BasisEntry:
    n: int
    i: int
    poly: VPoly
    type_label: str
    nu: Fraction

    def to_json(self) -> dict:
        return {
            "degree": self.n,
            "index": self.i,
            "type": self.type_label,
            "nu": f"{self.nu.numerator}/{self.nu.denominator}",
            "poly": self.poly.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BasisEntry":
        return cls(
            n=int(data["degree"]),
            i=int(data["index"]),
            poly=VPoly.from_json(data["poly"]),
            type_label=data["type"],
            nu=Fraction(data["nu"]),
        )


def valid_indices(n: int) -> Tuple[int, ...]:
    return (1, 2) if n == 0 else (1, 2, 3, 4)


# ---------------------------------------------------------------------------
# Recurrence


def _apply_x(a: VPoly, b: VPoly) -> Tuple[VPoly, VPoly]:
    """``[[x1, x2], [-x2, x1]] @ [a, b]``."""
    return a.mul_x(1) + b.mul_x(2), b.mul_x(1) - a.mul_x(2)


@lru_cache(maxsize=None)
def _block(n: int, params: Params) -> Tuple[VPoly, VPoly, VPoly, VPoly]:
    """``(p[n,1], p[n,2], p[n,3], p[n,4])``; at n = 0 this is the aliased seed."""
    if n == 0:
        return T1, T2, T1, -T2
    if n % 2 == 1:
        # odd: X times the previous even block, column by column
        p1, p2, p3, p4 = _block(n - 1, params)
        q1, q2 = _apply_x(p1, p2)
        q3, q4 = _apply_x(p3, p4)
        return q1, q2, q3, q4
    m = n // 2
    odd = 2 * m - 1
    p1, p2, p3, p4 = _block(n - 1, params)
    km, kp = params.kminus, params.kplus
    q1, q2 = _apply_x(p3.scale((odd + 2 * km) / odd), p4.scale((odd - 2 * km) / odd))
    q3, q4 = _apply_x(p1.scale((odd + 2 * kp) / odd), p2.scale((odd - 2 * kp) / odd))
    return q1, q2, q3, q4


def basis_poly(n: int, i: int, params: Params) -> VPoly:
    if i not in valid_indices(n):
        raise ValueError(f"index {i} is not valid in degree {n}")
    return _block(n, params)[i - 1]


def type_label(f: VPoly) -> str:
    eps = []
    for s in (SIGMA1, SIGMA2):
        image = group_act(s, f)
        if image == f:
            eps.append(1)
        elif image == -f:
            eps.append(-1)
        else:
            raise NotEigenvector(f"{f!r} is not an eigenvector of {s.name}")
    if not f:
        raise NotEigenvector("the zero polynomial has no type")
    return TYPE_LABELS[tuple(eps)]


def build_basis(nmax: int, params: Params) -> List[BasisEntry]:
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    out = []
    for n in range(nmax + 1):
        for i in valid_indices(n):
            poly = basis_poly(n, i, params)
            out.append(BasisEntry(n, i, poly, type_label(poly), norm_pi(n, i, params)))
    return out


# ---------------------------------------------------------------------------
# Norms


def pochhammer(a, k: int):
    out = Fraction(1) if isinstance(a, Fraction) else 1.0
    for j in range(k):
        out *= a + j
    return out


def pochhammer_quotient(a: Fraction, b: Fraction, m: int, eps: str) -> Fraction:
    """The four-factor Pochhammer quotient indexed by a 0/1 string ``eps``."""
    e = [int(ch) for ch in eps]
    q, h, tq = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    num = (pochhammer(q + a * h, m + e[0]) * pochhammer(q - a * h, m + e[1])
           * pochhammer(tq + b * h, m + e[2]) * pochhammer(tq - b * h, m + e[3]))
    den = (pochhammer(q, m + e[0]) * pochhammer(q, m + e[1])
           * pochhammer(tq, m + e[2]) * pochhammer(tq, m + e[3]))
    return num / den


# (n mod 4, i) -> (first argument is k+?, eps); the second argument is the other one
_NORM_TABLE: Dict[Tuple[int, int], Tuple[bool, str]] = {
    (0, 1): (True, "0000"), (0, 2): (True, "0000"),
    (0, 3): (False, "0000"), (0, 4): (False, "0000"),
    (2, 1): (False, "1100"), (2, 2): (False, "1100"),
    (2, 3): (True, "1100"), (2, 4): (True, "1100"),
    (1, 1): (True, "0100"), (1, 2): (True, "1000"),
    (1, 3): (False, "0100"), (1, 4): (False, "1000"),
    (3, 1): (False, "1101"), (3, 2): (False, "1110"),
    (3, 3): (True, "1101"), (3, 4): (True, "1110"),
}


def norm_prime(n: int, i: int, params: Params) -> Fraction:
    """``nu(p[n,i]) / (2^n n!)``."""
    if i not in valid_indices(n):
        raise ValueError(f"index {i} is not valid in degree {n}")
    plus_first, eps = _NORM_TABLE[(n % 4, i)]
    a, b = (params.kplus, params.kminus) if plus_first else (params.kminus, params.kplus)
    return pochhammer_quotient(a, b, n // 4, eps)


def norm_pi(n: int, i: int, params: Params) -> Fraction:
    """Exact ``nu(p[n,i]) = <p[n,i], p[n,i]>_tau`` from the closed form."""
    return 2 ** n * math.factorial(n) * norm_prime(n, i, params)


def radical_indices(params: Params, nmax: int) -> List[Tuple[int, int]]:
    return [(n, i) for n in range(nmax + 1) for i in valid_indices(n)
            if norm_pi(n, i, params) == 0]


# ---------------------------------------------------------------------------
# Operators on harmonics


def u12_apply(f: VPoly, params: Params) -> VPoly:
    """``sigma12+ (x2 D1 - x1 D2) f``."""
    inner = dunkl(1, f, params).mul_x(2) - dunkl(2, f, params).mul_x(1)
    return group_act(SIGMA12P, inner)


def project_harmonic(f: VPoly, params: Params) -> VPoly:
    """Harmonic component of a homogeneous polynomial.

    Uses ``sum_j |x|^{2j} Lap^j f / (4^j j! (1-n)_j)``; with N = 2 and
    gamma = 0 the denominators never vanish for the j that occur.
    """
    if not f.is_homogeneous():
        raise NotHomogeneous("project_harmonic needs a homogeneous input")
    if not f:
        return f
    n = f.degree
    out = f
    lap = f
    for j in range(1, n // 2 + 1):
        lap = laplacian(lap, params)
        coef = Fraction(1, 4 ** j * math.factorial(j)) / pochhammer(Fraction(1 - n), j)
        out = out + lap.mul_normsq(j).scale(coef)
    return out


def harmonic_decomposition(f: VPoly, params: Params) -> List[Tuple[int, VPoly]]:
    """Pairs ``(j, h_j)`` with ``f = sum_j |x|^{2j} h_j`` and each h_j harmonic."""
    if not f.is_homogeneous():
        raise NotHomogeneous("harmonic_decomposition needs a homogeneous input")
    n = f.degree
    parts = []
    for j in range(n // 2 + 1):
        lap = laplacian_power(f, j, params)
        coef = Fraction(1, 4 ** j * math.factorial(j)) / pochhammer(Fraction(1 + n - 2 * j), j)
        parts.append((j, project_harmonic(lap, params).scale(coef)))
    return parts


# ---------------------------------------------------------------------------
# Floating-point evaluation along the recurrence


def basis_values(nmax: int, x1, x2, params) -> np.ndarray:
    """Values of every p[n,i] at the points ``(x1, x2)``.

    Returns an array of shape ``(nmax + 1, 4, 2) + shape(x1)``; the last
    axes hold the two components.  At n = 0 the four slots are the aliased
    seed ``(t1, t2, t1, -t2)``.  ``params`` may be :class:`Params` or a
    ``(k0, k1)`` float pair.  Runs the recurrence on values, so it costs
    O(nmax) per point.
    """
    if isinstance(params, Params):
        k0, k1 = params.as_floats()
    else:
        k0, k1 = params
    kp, km = k0 + k1, k1 - k0
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    out = np.zeros((nmax + 1, 4, 2) + x1.shape)
    ones = np.ones_like(x1)
    out[0, 0, 0] = ones
    out[0, 1, 1] = ones
    out[0, 2, 0] = ones
    out[0, 3, 1] = -ones
    for n in range(1, nmax + 1):
        prev = out[n - 1]
        if n % 2 == 1:
            a1, b1, a2, b2 = prev[0], prev[1], prev[2], prev[3]
        else:
            odd = n - 1
            a1 = prev[2] * ((odd + 2 * km) / odd)
            b1 = prev[3] * ((odd - 2 * km) / odd)
            a2 = prev[0] * ((odd + 2 * kp) / odd)
            b2 = prev[1] * ((odd - 2 * kp) / odd)
        out[n, 0] = x1 * a1 + x2 * b1
        out[n, 1] = -x2 * a1 + x1 * b1
        out[n, 2] = x1 * a2 + x2 * b2
        out[n, 3] = -x2 * a2 + x1 * b2
    return out


def norms_float(nmax: int, params: Params) -> np.ndarray:
    """``nu(p[n,i])`` as floats, shape ``(nmax + 1, 4)``; unused n = 0 slots are nan."""
    out = np.full((nmax + 1, 4), np.nan)
    for n in range(nmax + 1):
        for i in valid_indices(n):
            out[n, i - 1] = float(norm_pi(n, i, params))
    return out


__all__ = [
    "BasisEntry", "NotEigenvector", "NotHomogeneous", "TYPE_LABELS",
    "basis_poly", "basis_values", "build_basis", "harmonic_decomposition",
    "norm_pi", "norm_prime", "norms_float", "pochhammer", "pochhammer_quotient",
    "project_harmonic", "radical_indices", "type_label", "u12_apply",
    "valid_indices", "NORMSQ",
]
