"""Matrix weight K(x) built from hypergeometric fundamental solutions.

On the sector ``0 < x2 < x1`` the weight depends only on ``u = x2 / x1``:
``K(u) = L(u)^T diag(d1, d2) L(u)``, where ``L`` solves a first-order
2x2 system with regular singular points at u = 0 and u = 1.  Elsewhere K
is defined by ``K(x w) = w^{-1} K(x) w``.

Two representations of ``L`` are used.  For ``u^2 <= SWITCH`` the entries
are Gauss series in ``u^2``; above it ``L`` is factored through series in
``1 - u^2`` using the connection constants :func:`eta`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from .algebra import GROUP, GroupElement

#: branch point for L_matrix, in the variable s = u^2
SWITCH = 0.5
SERIES_CAP = 100_000
SQRT_PI = math.sqrt(math.pi)

#: (1/sqrt 2) [[1, 1], [1, -1]]; conjugates the diagonal reflection to diag(1, -1)
SIGMA_DIAG = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


class PoleError(ValueError):
    pass


class DomainError(ValueError):
    pass


class NonConvergence(ArithmeticError):
    pass


class OnMirror(ValueError):
    pass


# ---------------------------------------------------------------------------
# Gamma and 2F1


def gamma_fn(x: float) -> float:
    if x <= 0 and float(x).is_integer():
        raise PoleError(f"Gamma has a pole at {x}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """``1 / Gamma(x)``, which is entire (zero at the poles of Gamma)."""
    if x <= 0 and float(x).is_integer():
        return 0.0
    return 1.0 / math.gamma(x)


def _series(a: float, b: float, c: float, s: float, cap: int = SERIES_CAP) -> float:
    terms = [1.0]
    t = 1.0
    running = 1.0
    k = 0
    small = 0
    while True:
        t *= (a + k) * (b + k) / ((c + k) * (k + 1)) * s
        k += 1
        if t == 0.0:
            break
        terms.append(t)
        running += t
        # three consecutive negligible terms: the tail is geometric from here on
        if abs(t) <= 1e-17 * abs(running):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        if k >= cap:
            raise NonConvergence(f"2F1({a}, {b}; {c}; {s}) needs more than {cap} terms")
    return math.fsum(terms)


def gauss_2f1(a: float, b: float, c: float, s: float) -> float:
    """Real ``2F1(a, b; c; s)`` for ``0 <= s < 1``.

    Direct compensated series for ``s <= 0.5``; otherwise the connection
    formula to ``1 - s`` unless ``c - a - b`` is too close to an integer,
    in which case the direct series is summed to at most SERIES_CAP terms.
    """
    if c <= 0 and float(c).is_integer():
        raise PoleError(f"c = {c} is a nonpositive integer")
    if not 0.0 <= s < 1.0:
        raise DomainError(f"argument {s} outside [0, 1)")
    if s <= 0.5:
        return _series(a, b, c, s)
    e = c - a - b
    if abs(e - round(e)) < 1e-3:
        return _series(a, b, c, s)
    t = 1.0 - s
    first = gamma_fn(c) * gamma_fn(e) * rgamma(c - a) * rgamma(c - b)
    second = gamma_fn(c) * gamma_fn(-e) * rgamma(a) * rgamma(b)
    out = 0.0
    if first:
        out += first * _series(a, b, 1.0 - e, t)
    if second:
        out += second * t ** e * _series(c - a, c - b, 1.0 + e, t)
    return out


def eta(k0: float, k1: float) -> float:
    """Connection constant, in the duplication form (regular at k0 = 0)."""
    return (2.0 ** (2 * k0 - 1) / SQRT_PI * gamma_fn(0.5 + k1) * gamma_fn(0.5 + k0)
            / gamma_fn(0.5 + k0 + k1))


def H(a: float, b: float, t: float) -> float:
    """``2F1(a, a + b + 1/2; 2a + 1; t)`` with ``t = 1 - u^2``."""
    return gauss_2f1(a, a + b + 0.5, 2 * a + 1, t)


# ---------------------------------------------------------------------------
# Parameters


@dataclass(frozen=True)
class WeightParams:
    """Floating-point multiplicities plus normalization choice.

    ``c_mode`` is ``"conjecture"`` (cos(pi k0) cos(pi k1) / (2 pi)),
    ``"unit"`` (c = 1) or a float used as c directly.
    ``precision`` is ``"double"`` or ``"extended"`` (mpmath, 30 digits).
    """

    k0: float
    k1: float
    c_mode: Union[str, float] = "conjecture"
    precision: str = "double"

    def __post_init__(self):
        object.__setattr__(self, "k0", float(self.k0))
        object.__setattr__(self, "k1", float(self.k1))
        if not (abs(self.k0 + self.k1) < 0.5 and abs(self.k0 - self.k1) < 0.5):
            raise DomainError(f"(k0, k1) = ({self.k0}, {self.k1}) outside |k0 +/- k1| < 1/2")
        if self.precision not in ("double", "extended"):
            raise ValueError(f"unknown precision {self.precision!r}")
        if isinstance(self.c_mode, str) and self.c_mode not in ("conjecture", "unit"):
            raise ValueError(f"unknown c_mode {self.c_mode!r}")

    @property
    def c(self) -> float:
        if self.c_mode == "conjecture":
            return conjectured_c(self.k0, self.k1)
        if self.c_mode == "unit":
            return 1.0
        return float(self.c_mode)


def conjectured_c(k0: float, k1: float) -> float:
    return math.cos(math.pi * k0) * math.cos(math.pi * k1) / (2 * math.pi)


def d_coefficients(wp: WeightParams):
    """The diagonal entries (d1, d2) so that ``K = L^T diag(d1, d2) L``."""
    k0, k1, c = wp.k0, wp.k1, wp.c
    cos0 = math.cos(math.pi * k0)
    d1 = c * gamma_fn(0.5 - k1) ** 2 / (cos0 * gamma_fn(0.5 + k0 - k1) * gamma_fn(0.5 - k0 - k1))
    d2 = c * gamma_fn(0.5 + k1) ** 2 / (cos0 * gamma_fn(0.5 + k0 + k1) * gamma_fn(0.5 - k0 + k1))
    return d1, d2


def gamma_matrix(k0: float, k1: float) -> np.ndarray:
    return np.array([
        [eta(-k0, k1), eta(k0, k1)],
        [eta(-k0, -k1), -eta(k0, -k1)],
    ])


# ---------------------------------------------------------------------------
# Fundamental solution


def L_direct(u: float, k0: float, k1: float, t: Optional[float] = None) -> np.ndarray:
    """Series-in-u^2 form of L(u); ``t`` optionally supplies 1 - u^2 accurately."""
    s = u * u
    if t is None:
        t = 1.0 - s
    up, um = u ** k1, u ** -k1
    tk = t ** -k0
    f11 = gauss_2f1(-k0, 0.5 - k0 + k1, k1 + 0.5, s)
    f12 = gauss_2f1(1 - k0, 0.5 - k0 + k1, k1 + 1.5, s)
    f21 = gauss_2f1(1 - k0, 0.5 - k0 - k1, 1.5 - k1, s)
    f22 = gauss_2f1(-k0, 0.5 - k0 - k1, 0.5 - k1, s)
    return np.array([
        [up * tk * f11, -k0 / (k1 + 0.5) * up * tk * u * f12],
        [-k0 / (0.5 - k1) * um * tk * u * f21, um * tk * f22],
    ])


def L_connection(u: float, k0: float, k1: float, t: Optional[float] = None) -> np.ndarray:
    """Factored form ``Gamma diag(t^k0, t^-k0) Hmat diag(u^k1, u^-k1)``, t = 1 - u^2."""
    if t is None:
        t = 1.0 - u * u
    hmat = np.array([
        [H(k0, k1, t), H(k0, -k1, t)],
        [H(-k0, k1, t), -H(-k0, -k1, t)],
    ])
    mid = np.diag([t ** k0, t ** -k0])
    right = np.diag([u ** k1, u ** -k1])
    return gamma_matrix(k0, k1) @ mid @ hmat @ right


def _L_extended(u: float, k0: float, k1: float, t: Optional[float] = None) -> np.ndarray:
    import mpmath as mp

    with mp.workdps(30):
        u_ = mp.mpf(u)
        t_ = mp.mpf(t) if t is not None else 1 - u_ * u_
        s = 1 - t_
        k0_, k1_ = mp.mpf(k0), mp.mpf(k1)
        half = mp.mpf(1) / 2
        up, um, tk = u_ ** k1_, u_ ** -k1_, t_ ** -k0_
        entries = [
            [up * tk * mp.hyp2f1(-k0_, half - k0_ + k1_, k1_ + half, s),
             -k0_ / (k1_ + half) * up * tk * u_ * mp.hyp2f1(1 - k0_, half - k0_ + k1_, k1_ + 3 * half, s)],
            [-k0_ / (half - k1_) * um * tk * u_ * mp.hyp2f1(1 - k0_, half - k0_ - k1_, 3 * half - k1_, s),
             um * tk * mp.hyp2f1(-k0_, half - k0_ - k1_, half - k1_, s)],
        ]
        return np.array([[float(v) for v in row] for row in entries])


def L_matrix(u: float, wp: WeightParams, t: Optional[float] = None,
             branch: str = "auto") -> np.ndarray:
    """Fundamental solution L(u), 0 < u < 1, with det L = 1.

    ``t`` may pass ``1 - u^2`` computed without cancellation (used by the
    quadrature near the diagonal).  ``branch`` forces ``"direct"`` or
    ``"connection"``; ``"auto"`` switches at ``u^2 = SWITCH``.
    """
    if not 0.0 < u < 1.0:
        raise DomainError(f"u = {u} outside (0, 1)")
    if branch not in ("auto", "direct", "connection"):
        raise ValueError(f"unknown branch {branch!r}")
    if wp.precision == "extended":
        return _L_extended(u, wp.k0, wp.k1, t)
    if branch == "direct" or (branch == "auto" and u * u <= SWITCH):
        return L_direct(u, wp.k0, wp.k1, t)
    return L_connection(u, wp.k0, wp.k1, t)


def K_fundamental(u: float, wp: WeightParams, t: Optional[float] = None) -> np.ndarray:
    """K at ``(1, u)`` in the sector 0 < u < 1."""
    L = L_matrix(u, wp, t)
    d1, d2 = d_coefficients(wp)
    return L.T @ np.diag([d1, d2]) @ L


# ---------------------------------------------------------------------------
# Vectorized evaluation for quadrature


def _series_vec(a: float, b: float, c: float, s: np.ndarray) -> np.ndarray:
    """Gauss series on an array with ``0 <= s <= SWITCH``, Kahan-summed."""
    total = np.ones_like(s)
    comp = np.zeros_like(s)
    term = np.ones_like(s)
    for k in range(SERIES_CAP):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * s
        y = term - comp
        new = total + y
        comp = (new - total) - y
        total = new
        if not np.any(np.abs(term) > 1e-17 * np.abs(total)):
            return total
    raise NonConvergence("vectorized series did not converge")


def L_vec(u: np.ndarray, t: np.ndarray, k0: float, k1: float) -> np.ndarray:
    """L at many points at once; ``t = 1 - u^2``.  Shape ``u.shape + (2, 2)``."""
    u = np.asarray(u, dtype=float)
    t = np.asarray(t, dtype=float)
    out = np.empty(u.shape + (2, 2))
    lo = u * u <= SWITCH
    if np.any(lo):
        v, s, tt = u[lo], u[lo] ** 2, t[lo]
        up, um, tk = v ** k1, v ** -k1, tt ** -k0
        out[lo, 0, 0] = up * tk * _series_vec(-k0, 0.5 - k0 + k1, k1 + 0.5, s)
        out[lo, 0, 1] = -k0 / (k1 + 0.5) * up * tk * v * _series_vec(1 - k0, 0.5 - k0 + k1, k1 + 1.5, s)
        out[lo, 1, 0] = -k0 / (0.5 - k1) * um * tk * v * _series_vec(1 - k0, 0.5 - k0 - k1, 1.5 - k1, s)
        out[lo, 1, 1] = um * tk * _series_vec(-k0, 0.5 - k0 - k1, 0.5 - k1, s)
    hi = ~lo
    if np.any(hi):
        v, tt = u[hi], t[hi]

        def h(a, b):
            return _series_vec(a, a + b + 0.5, 2 * a + 1, tt)

        g = gamma_matrix(k0, k1)
        tp, tm = tt ** k0, tt ** -k0
        up, um = v ** k1, v ** -k1
        h11, h12, h21, h22 = h(k0, k1), h(k0, -k1), h(-k0, k1), -h(-k0, -k1)
        out[hi, 0, 0] = (g[0, 0] * tp * h11 + g[0, 1] * tm * h21) * up
        out[hi, 0, 1] = (g[0, 0] * tp * h12 + g[0, 1] * tm * h22) * um
        out[hi, 1, 0] = (g[1, 0] * tp * h11 + g[1, 1] * tm * h21) * up
        out[hi, 1, 1] = (g[1, 0] * tp * h12 + g[1, 1] * tm * h22) * um
    return out


def K_sector_vec(u: np.ndarray, t: np.ndarray, wp: WeightParams) -> np.ndarray:
    """K at ``(1, u)`` for an array of 0 < u < 1, with ``t = 1 - u^2``."""
    L = L_vec(u, t, wp.k0, wp.k1)
    d = np.array(d_coefficients(wp))
    return np.einsum("...ki,k,...kj->...ij", L, d, L)


def _as_matrix(w: GroupElement) -> np.ndarray:
    return np.array(w.matrix, dtype=float)


def fold(x) -> tuple:
    """Return ``(x0, w)`` with ``x = x0 w`` and x0 in the sector 0 < x0_2 < x0_1."""
    x1, x2 = float(x[0]), float(x[1])
    if x1 == 0 or x2 == 0 or abs(x1) == abs(x2):
        raise OnMirror(f"{(x1, x2)} lies on a mirror")
    for w in GROUP:
        x0 = w.inverse.apply_point((x1, x2))
        if 0 < x0[1] < x0[0]:
            return x0, w
    raise AssertionError("no fundamental representative found")


def K_matrix(x, wp: WeightParams) -> np.ndarray:
    """The 2x2 weight at a point off the mirrors, via ``K(x0 w) = w^-1 K(x0) w``."""
    x0, w = fold(x)
    k = K_fundamental(x0[1] / x0[0], wp)
    m = _as_matrix(w)
    return m.T @ k @ m


def K_degenerate(x, wp: WeightParams) -> np.ndarray:
    """Closed forms when one multiplicity vanishes (exponents 2 k, see README)."""
    x1, x2 = float(x[0]), float(x[1])
    c = wp.c
    if wp.k0 == 0:
        r = abs(x2 / x1) ** (2 * wp.k1)
        return c * np.diag([r, 1.0 / r])
    if wp.k1 == 0:
        a = abs(x1 - x2) ** (2 * wp.k0) * abs(x1 + x2) ** (-2 * wp.k0)
        return c * SIGMA_DIAG @ np.diag([a, 1.0 / a]) @ SIGMA_DIAG
    raise ValueError("closed form needs k0 == 0 or k1 == 0")


# ---------------------------------------------------------------------------
# Tabulation


@dataclass
class WeightTable:
    theta: np.ndarray
    k11: np.ndarray
    k12: np.ndarray
    k22: np.ndarray
    view: str = "K"
    note: str = ""

    def rows(self):
        return zip(self.theta, self.k11, self.k12, self.k22)

    def to_csv(self) -> str:
        lines = []
        if self.note:
            lines.append(f"# {self.note}")
        lines.append("theta,k11,k12,k22")
        for row in self.rows():
            lines.append(",".join("" if np.isnan(v) else f"{v:.17g}" for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "WeightTable":
        note = ""
        body = []
        for line in text.splitlines():
            if line.startswith("#"):
                note = line[1:].strip()
            elif line.strip():
                body.append(line)
        if body[0] != "theta,k11,k12,k22":
            raise ValueError("unexpected CSV header")
        cols = [[], [], [], []]
        for line in body[1:]:
            for j, v in enumerate(line.split(",")):
                cols[j].append(float(v) if v else np.nan)
        return cls(*(np.array(c) for c in cols), note=note)


def weight_sample(theta_grid: Iterable[float], wp: WeightParams, conjugate: bool = False) -> WeightTable:
    """K(cos theta, sin theta) on a grid; ``conjugate`` gives sigma K sigma.

    Points on a mirror produce NaN rows.
    """
    theta = np.asarray(list(theta_grid), dtype=float)
    out = np.full((len(theta), 3), np.nan)
    for j, th in enumerate(theta):
        octant = th / (math.pi / 4)
        if abs(octant - round(octant)) < 1e-12:
            continue  # a mirror angle up to rounding
        try:
            k = K_matrix((math.cos(th), math.sin(th)), wp)
        except OnMirror:
            continue
        if conjugate:
            k = SIGMA_DIAG @ k @ SIGMA_DIAG
        out[j] = k[0, 0], k[0, 1], k[1, 1]
    note = ""
    if conjugate:
        note = "view=sigma*K*sigma; the (2,2) entry is not rescaled"
    return WeightTable(theta, out[:, 0], out[:, 1], out[:, 2],
                       view="sigmaKsigma" if conjugate else "K", note=note)


def default_theta_grid(steps: int) -> np.ndarray:
    """Midpoint grid on (0, pi/4), avoiding the mirrors."""
    if steps <= 0:
        raise ValueError("steps must be positive")
    return (np.arange(steps) + 0.5) * (math.pi / 4) / steps
