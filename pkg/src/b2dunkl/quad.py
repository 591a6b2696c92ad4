"""Polar quadrature for integrals ``int f(x) K(x) g(x)^T exp(-|x|^2/2) dx``.

K is homogeneous of degree 0, so for polynomial f and g the radial integral
is a finite combination of the moments :func:`gaussian_moment`.  The
angular integral is split at the mirror angles (multiples of pi/4) and
done by tanh-sinh quadrature, which tolerates the algebraic singularities
K has at the mirrors.

All K-weighted integrals are folded onto the sector ``0 < phi < pi/4``:
with ``x = x0 w`` the integrand is ``f(x0 w) w^T K(x0) w g(x0 w)^T``, so K
is evaluated once per node.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .algebra import GROUP, Params, VPoly
from .forms import laguerre_radial
from .harmonic import basis_poly
from .kernel import homogeneous_kernel_terms
from .weight import (
    NonConvergence,
    WeightParams,
    K_sector_vec,
    conjectured_c,
)

QUARTER = math.pi / 4
#: tanh-sinh nodes stop where the distance to an endpoint reaches ~1e-275
S_MAX = 317.0


class TruncationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class QuadSpec:
    angular_tol: float = 1e-10
    max_levels: int = 9
    truncN: int = 60
    #: coarsest tanh-sinh step
    h0: float = 0.5

    @property
    def panels(self) -> List[Tuple[float, float]]:
        """The eight octant panels tiling [0, 2 pi)."""
        return [(j * QUARTER, (j + 1) * QUARTER) for j in range(8)]


def gaussian_moment(k: int) -> float:
    """``int_0^inf r^(k+1) exp(-r^2/2) dr = 2^(k/2) Gamma(k/2 + 1)``."""
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    return math.exp(0.5 * k * math.log(2.0) + math.lgamma(0.5 * k + 1))


# ---------------------------------------------------------------------------
# tanh-sinh on [0, a]


class _Nodes(NamedTuple):
    left: np.ndarray   # distance to 0
    right: np.ndarray  # distance to a
    weight: np.ndarray  # without the factor h


def _ts_nodes(a: float, t: np.ndarray) -> _Nodes:
    s = 0.5 * math.pi * np.sinh(t)
    left = a / (1.0 + np.exp(-2 * s))
    right = a / (1.0 + np.exp(2 * s))
    weight = a * 0.5 * math.pi * np.cosh(t) / (2 * np.cosh(s) ** 2)
    return _Nodes(left, right, weight)


def _t_max() -> float:
    return math.asinh(S_MAX / (0.5 * math.pi))


def tanh_sinh(func: Callable[[_Nodes], np.ndarray], a: float, spec: QuadSpec):
    """Integrate over [0, a]; ``func`` sees the node distances to both ends.

    Levels halve the step and reuse earlier nodes.  The result may be an
    array (``func`` returns shape ``(nodes,) + extra``).  Raises
    NonConvergence if successive levels still differ by more than the
    tolerance after ``spec.max_levels`` refinements.
    """
    tmax = _t_max()
    h = spec.h0
    t = np.arange(-math.floor(tmax / h), math.floor(tmax / h) + 1) * h
    nodes = _ts_nodes(a, t)
    acc = np.tensordot(nodes.weight, func(nodes), axes=(0, 0))
    prev = h * acc
    for _ in range(spec.max_levels):
        h /= 2
        k = np.arange(-math.floor(tmax / h), math.floor(tmax / h) + 1)
        t = k[k % 2 == 1] * h
        nodes = _ts_nodes(a, t)
        acc = acc + np.tensordot(nodes.weight, func(nodes), axes=(0, 0))
        cur = h * acc
        scale = max(1.0, float(np.max(np.abs(cur))))
        if float(np.max(np.abs(cur - prev))) <= spec.angular_tol * scale:
            return cur
        prev = cur
    raise NonConvergence(f"tanh-sinh did not reach {spec.angular_tol} in {spec.max_levels} levels")


def angular_integrate(f: Callable[[np.ndarray], np.ndarray], spec: QuadSpec = QuadSpec()):
    """``int_0^{2 pi} f(theta) d theta`` over the eight octant panels.

    ``f`` is vectorized over theta.  Panels are summed in a fixed order.
    """
    total = 0.0
    for lo, _hi in spec.panels:
        total = total + tanh_sinh(lambda nd, lo=lo: f(lo + nd.left), QUARTER, spec)
    return total


# ---------------------------------------------------------------------------
# K-weighted integrals folded onto the sector


_W_MATS = [np.array(w.matrix, dtype=float) for w in GROUP]


def _sector_points(nd: _Nodes):
    """Points ``(cos phi, sin phi)``, ``u = tan phi`` and ``1 - u^2`` at the nodes."""
    phi = nd.left
    c, s = np.cos(phi), np.sin(phi)
    u = np.tan(phi)
    # 1 - tan^2 phi = cos(2 phi) / cos^2 phi with cos(2 phi) = sin(2 * (pi/4 - phi))
    t = np.sin(2 * nd.right) / (c * c)
    return c, s, u, t


def _homogeneous_values(f: VPoly, x1: np.ndarray, x2: np.ndarray):
    """``{d: (2, nodes)}`` values of the degree-d parts at unit-circle points."""
    out = {}
    for d, part in f.homogeneous_parts().items():
        v1, v2 = part.evaluate((x1, x2))
        out[d] = np.stack([np.broadcast_to(np.asarray(v1, float), x1.shape),
                           np.broadcast_to(np.asarray(v2, float), x1.shape)])
    return out


def sector_integrate(profile, wp: WeightParams, spec: QuadSpec):
    """``sum_w int_0^{pi/4} profile(x0 w, w^T K(x0) w) d phi``.

    ``profile(x1, x2, K)`` gets node arrays of the moved points and K with
    shape ``(nodes, 2, 2)``; it returns an array ``(nodes,) + extra``.
    """
    mats = np.stack(_W_MATS)  # (8, 2, 2)

    def func(nd: _Nodes):
        c, s, u, t = _sector_points(nd)
        K0 = K_sector_vec(u, t, wp)
        n = c.shape[0]
        # all eight images in one batch, group index outermost
        y1 = (c[None, :] * mats[:, 0, 0, None] + s[None, :] * mats[:, 1, 0, None]).ravel()
        y2 = (c[None, :] * mats[:, 0, 1, None] + s[None, :] * mats[:, 1, 1, None]).ravel()
        Kw = np.einsum("wki,nkl,wlj->wnij", mats, K0, mats).reshape(8 * n, 2, 2)
        vals = profile(y1, y2, Kw)
        return vals.reshape((8, n) + vals.shape[1:]).sum(axis=0)

    return tanh_sinh(func, QUARTER, spec)


def gaussian_form_integral(f: VPoly, g: VPoly, wp: WeightParams, spec: QuadSpec = QuadSpec()) -> float:
    """``int f(x) K(x) g(x)^T exp(-|x|^2/2) dx`` for real-coefficient f, g."""
    fd_keys = sorted(f.degrees())
    gd_keys = sorted(g.degrees())
    if not fd_keys or not gd_keys:
        return 0.0

    def profile(x1, x2, K):
        fv = _homogeneous_values(f, x1, x2)
        gv = _homogeneous_values(g, x1, x2)
        out = np.zeros_like(x1)
        for d, a in fv.items():
            for e, b in gv.items():
                out = out + gaussian_moment(d + e) * np.einsum("in,nij,jn->n", a, K, b)
        return out

    return float(sector_integrate(profile, wp, spec))


class CEstimate(NamedTuple):
    estimate: float
    conjecture: float
    difference: float


def estimate_c(params, spec: QuadSpec = QuadSpec()) -> CEstimate:
    """Normalization from ``int K11 exp(-|x|^2/2) dx = 1`` with c = 1."""
    k0, k1 = _float_pair(params)
    wp = WeightParams(k0, k1, c_mode="unit")
    one = VPoly.monomial(0, 0, 1, 0)
    value = gaussian_form_integral(one, one, wp, spec)
    est = 1.0 / value
    conj = conjectured_c(k0, k1)
    return CEstimate(est, conj, abs(est - conj))


def _float_pair(params) -> Tuple[float, float]:
    if isinstance(params, Params):
        return params.as_floats()
    if isinstance(params, WeightParams):
        return params.k0, params.k1
    k0, k1 = params
    return float(k0), float(k1)


# ---------------------------------------------------------------------------
# Fourier eigenfunction experiment


LAGUERRE_SCALES = {"half": Fraction(1, 2), "full": Fraction(1)}
PHASES = {"m+2n": lambda m, n: m + 2 * n, "n+2m": lambda m, n: n + 2 * m}


class FourierResult(NamedTuple):
    lhs: np.ndarray
    rhs: np.ndarray
    residual: float
    tail: float


def eigen_function_poly(m: int, n: int, i: int, params: Params, convention: str = "full") -> VPoly:
    """The polynomial part ``L_m^(n)(a |x|^2) p[n,i]`` of the eigenfunction."""
    scale = LAGUERRE_SCALES[convention]
    return basis_poly(n, i, params).mul_scalar_poly(laguerre_radial(m, n, scale))


def fourier_eigen_check(m: int, n: int, i: int, y, params: Params,
                        spec: QuadSpec = QuadSpec(),
                        laguerre_arg_convention: str = "full",
                        phase_convention: str = "n+2m",
                        c_mode="conjecture") -> FourierResult:
    """Compare ``F phi(y)`` by quadrature with ``(-i)^e phi(y)``.

    ``F f(y) = int E(x, -i y) K(x) f(x) dx`` is evaluated with the kernel
    truncated at degree ``spec.truncN``; each E_n is homogeneous in x, so
    the radial integrals are exact moments.  ``phi = L(|x|^2) p e^{-|x|^2/2}``
    with the Laguerre argument scaled by the convention (``full``: |x|^2,
    ``half``: |x|^2/2); the exponent e is ``n + 2m`` or ``m + 2n``.
    """
    if laguerre_arg_convention not in LAGUERRE_SCALES:
        raise ValueError(f"unknown Laguerre convention {laguerre_arg_convention!r}")
    if phase_convention not in PHASES:
        raise ValueError(f"unknown phase convention {phase_convention!r}")
    wp = WeightParams(*params.as_floats(), c_mode=c_mode)
    poly = eigen_function_poly(m, n, i, params, laguerre_arg_convention)
    N = spec.truncN
    y = (float(y[0]), float(y[1]))
    phases = (-1j) ** np.arange(N + 1)
    parts = sorted(poly.degrees())

    def profile(x1, x2, K):
        E = homogeneous_kernel_terms(x1, x2, y, N, params)  # (N+1, 2, 2, nodes)
        fv = _homogeneous_values(poly, x1, x2)
        out = np.zeros((x1.shape[0], 2), dtype=complex)
        for d in parts:
            kf = np.einsum("nij,jn->in", K, fv[d])  # (2, nodes)
            weights = phases * np.array([gaussian_moment(deg + d) for deg in range(N + 1)])
            out += np.einsum("d,dlin,in->nl", weights, E, kf)
        return out

    lhs = sector_integrate(profile, wp, spec)
    val = poly.evaluate(y)
    damp = math.exp(-(y[0] ** 2 + y[1] ** 2) / 2)
    rhs = (-1j) ** PHASES[phase_convention](m, n) * np.array([float(val[0]), float(val[1])]) * damp
    # crude tail bound: size of the last kernel degree times its moment
    tail = _tail_estimate(y, N, params, max(parts))
    if tail > 1e-4:
        warnings.warn(f"kernel truncation tail {tail:.2e} exceeds 1e-4", TruncationWarning)
    return FourierResult(lhs, rhs, float(np.max(np.abs(lhs - rhs))), tail)


def _tail_estimate(y, N: int, params: Params, dmax: int) -> float:
    probe = np.linspace(0.05, 2 * math.pi - 0.05, 16)
    E = homogeneous_kernel_terms(np.cos(probe), np.sin(probe), y, N, params)
    return float(np.max(np.abs(E[N]))) * gaussian_moment(N + dmax) * 2 * math.pi
