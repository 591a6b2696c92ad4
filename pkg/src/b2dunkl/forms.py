"""The contravariant pairing and the Gaussian form on V-valued polynomials."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .algebra import Monomial, Params, VPoly, dunkl, laplacian
from .harmonic import basis_poly, norm_pi, pochhammer, valid_indices


def _dunkl_images(g: VPoly, monomials, params: Params) -> Dict[Monomial, VPoly]:
    """``D1^a D2^b g`` for each requested ``(a, b)``, sharing intermediate work."""
    cache: Dict[Monomial, VPoly] = {(0, 0): g}

    def get(a: int, b: int) -> VPoly:
        key = (a, b)
        if key not in cache:
            if b:
                cache[key] = dunkl(2, get(a, b - 1), params)
            else:
                cache[key] = dunkl(1, get(a - 1, 0), params)
        return cache[key]

    return {m: get(*m) for m in monomials}


def pair_tau(f: VPoly, g: VPoly, params: Params) -> Fraction:
    """``<f, g>_tau``: apply ``f_i(D1, D2)`` to g, evaluate at 0, contract with t_i."""
    total = Fraction(0)
    for d, fd in f.homogeneous_parts().items():
        gd = g.homogeneous_part(d)
        if not gd:
            continue
        images = _dunkl_images(gd, fd.terms.keys(), params)
        for mono, (c1, c2) in fd.terms.items():
            h1, h2 = images[mono].constant_term()
            total += c1 * h1 + c2 * h2
    return total


def exp_laplacian(f: VPoly, params: Params, sign: int = 1) -> VPoly:
    """``exp(sign * Lap / 2) f`` as the terminating series."""
    out = f
    term = f
    j = 0
    half = Fraction(sign, 2)
    while True:
        term = laplacian(term, params)
        j += 1
        if not term:
            return out
        out = out + term.scale(half ** j / math.factorial(j))


def pair_gauss(f: VPoly, g: VPoly, params: Params) -> Fraction:
    """``<f, g>_G = <exp(Lap/2) f, exp(Lap/2) g>_tau``."""
    return pair_tau(exp_laplacian(f, params), exp_laplacian(g, params), params)


def laguerre_coefficients(m: int, alpha: int):
    """Exact coefficients of ``L_m^(alpha)(s) = sum_j c_j s^j``."""
    return [Fraction((-1) ** j * math.comb(m + alpha, m - j), math.factorial(j))
            for j in range(m + 1)]


def laguerre_radial(m: int, alpha: int, scale: Fraction = Fraction(1, 2)) -> Dict[Monomial, Fraction]:
    """``L_m^(alpha)(scale * |x|^2)`` as a scalar polynomial in x."""
    out: Dict[Monomial, Fraction] = {}
    for j, c in enumerate(laguerre_coefficients(m, alpha)):
        c = c * scale ** j
        for k in range(j + 1):
            mono = (2 * k, 2 * (j - k))
            out[mono] = out.get(mono, Fraction(0)) + c * math.comb(j, k)
    return out


@dataclass(frozen=True)
class LaguerreBasisElement:
    m: int
    n: int
    i: int
    poly: VPoly
    nu_g: Fraction


def laguerre_element(m: int, n: int, i: int, params: Params) -> LaguerreBasisElement:
    """``L_m^(n)(|x|^2 / 2) p[n,i]`` with its Gaussian norm ``(n+1)_m / m! nu``."""
    if i not in valid_indices(n):
        raise ValueError(f"index {i} is not valid in degree {n}")
    poly = basis_poly(n, i, params).mul_scalar_poly(laguerre_radial(m, n))
    nu_g = pochhammer(Fraction(n + 1), m) / math.factorial(m) * norm_pi(n, i, params)
    return LaguerreBasisElement(m, n, i, poly, nu_g)
