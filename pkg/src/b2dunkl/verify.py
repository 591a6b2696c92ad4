"""Verification suites shared by the CLI and the test-suite.

Each suite returns a list of :class:`Check` records that serialize to
``{test, params, tolerance, measured, pass}``.  Exact checks use
tolerance 0 and report the number of failing cases as ``measured``.
"""
from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

import numpy as np

from .algebra import (
    GROUP,
    NORMSQ,
    POSITIVE_ROOTS,
    REFLECTIONS,
    SIGMA12P,
    SIGMA1,
    Params,
    VPoly,
    dunkl,
    eval_complex,
    group_act,
    laplacian,
    multiplicity,
    partial,
    t_act,
)
from .forms import laguerre_element, pair_gauss, pair_tau
from .harmonic import (
    basis_poly,
    norm_pi,
    norm_prime,
    u12_apply,
    valid_indices,
)
from .kernel import kernel_E, kernel_E_poly, norm_prime_limit
from .quad import (
    QuadSpec,
    estimate_c,
    fourier_eigen_check,
    gaussian_form_integral,
)
from .weight import (
    SIGMA_DIAG,
    WeightParams,
    K_degenerate,
    K_fundamental,
    K_matrix,
    L_matrix,
    d_coefficients,
    eta,
)

SUITES = ("algebra", "harmonic", "forms", "kernel", "weight", "gaussian", "fourier")


@dataclass
class Check:
    test: str
    params: Dict[str, object]
    tolerance: float
    measured: float
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {"test": self.test, "params": self.params, "tolerance": self.tolerance,
               "measured": self.measured, "pass": self.passed}
        if self.note:
            out["note"] = self.note
        return out


def _pdict(params) -> Dict[str, str]:
    return {"k0": str(params.k0), "k1": str(params.k1)}


def _exact(name: str, params, failures: int, note: str = "") -> Check:
    return Check(name, _pdict(params), 0.0, float(failures), failures == 0, note)


def _numeric(name: str, params, tol: float, measured: float, note: str = "") -> Check:
    return Check(name, _pdict(params), tol, float(measured), bool(measured <= tol), note)


def random_vpoly(rng: random.Random, degree: int, terms: int = 4) -> VPoly:
    """A random V-valued polynomial of degree at most ``degree`` with small rationals."""
    out = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        a = rng.randint(0, d)
        out[(a, d - a)] = (Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                           Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return VPoly(out)


def _monomials(degree: int):
    for d in range(degree + 1):
        for a in range(d + 1):
            yield VPoly.monomial(a, d - a, 1, 0)
            yield VPoly.monomial(a, d - a, 0, 1)


# ---------------------------------------------------------------------------
# algebra


def _commutator_rhs(i: int, j: int, f: VPoly, params: Params) -> VPoly:
    out = f if i == j else VPoly.zero()
    for v, key, s in POSITIVE_ROOTS:
        coef = 2 * multiplicity(key, params) * Fraction(v[i - 1] * v[j - 1], v[0] ** 2 + v[1] ** 2)
        if coef:
            out = out + group_act(s, f).scale(coef)
    return out


def _euler_rhs(f: VPoly, params: Params) -> VPoly:
    out = VPoly.zero()
    for (a, b), c in f.terms.items():
        if a + b:
            out = out + VPoly({(a, b): c}).scale(a + b)
    for _v, key, s in POSITIVE_ROOTS:
        out = out + (t_act(s, f) - group_act(s, f)).scale(multiplicity(key, params))
    return out


def suite_algebra(params: Params, nmax: int = 6, seed: int = 0) -> List[Check]:
    rng = random.Random(seed)
    checks = []
    bad = 0
    for f in _monomials(nmax):
        for i in (1, 2):
            for j in (1, 2):
                lhs = dunkl(i, f.mul_x(j), params) - dunkl(i, f, params).mul_x(j)
                bad += lhs != _commutator_rhs(i, j, f, params)
    checks.append(_exact("commutation [D_i, x_j]", params, bad))

    samples = [random_vpoly(rng, nmax) for _ in range(12)]
    bad = sum(dunkl(1, dunkl(2, f, params), params) != dunkl(2, dunkl(1, f, params), params)
              for f in samples)
    checks.append(_exact("D1 D2 = D2 D1", params, bad))

    bad = 0
    for f in samples[:6]:
        for w in REFLECTIONS:
            for u in ((1, 0), (0, 1)):
                lhs = sum((dunkl(i + 1, group_act(w, f), params).scale(u[i])
                           for i in range(2)), VPoly.zero())
                uw = w.apply_point(u)
                inner = sum((dunkl(i + 1, f, params).scale(uw[i]) for i in range(2)), VPoly.zero())
                bad += lhs != group_act(w, inner)
    checks.append(_exact("reflection equivariance of D", params, bad))

    bad = 0
    for f in samples:
        lhs = dunkl(1, f, params).mul_x(1) + dunkl(2, f, params).mul_x(2)
        bad += lhs != _euler_rhs(f, params)
    checks.append(_exact("Euler relation", params, bad))
    return checks


# ---------------------------------------------------------------------------
# harmonic


def _z_values(n: int):
    """Expected ``p[n,i](1, i)`` as ((Re, Im), (Re, Im)) pairs for i = 1..4."""
    scale = Fraction(2) ** (n - 1)
    z = ((scale, 0), (0, scale))          # t1 + i t2
    zbar = ((scale, 0), (0, -scale))

    def times_minus_i(v):
        return tuple((im, -re) for re, im in v)

    if n % 4 in (0, 1):
        return [z, times_minus_i(z), zbar, times_minus_i(zbar)]
    return [zbar, times_minus_i(zbar), z, times_minus_i(z)]


def _dunkl_action_failures(mmax: int, params: Params) -> int:
    kp, km = params.kplus, params.kminus
    bad = 0
    for m in range(1, mmax + 1):
        o = 2 * m - 1
        p = {i: basis_poly(2 * m, i, params) for i in range(1, 5)}
        q = {i: basis_poly(o, i, params) for i in range(1, 5)}
        c = Fraction(2 * m, o)
        expected = [
            (1, 1, q[3].scale(c * (o + 2 * km))), (2, 1, q[4].scale(c * (o - 2 * km))),
            (1, 2, q[4].scale(c * (o - 2 * km))), (2, 2, q[3].scale(-c * (o + 2 * km))),
            (1, 3, q[1].scale(c * (o + 2 * kp))), (2, 3, q[2].scale(c * (o - 2 * kp))),
            (1, 4, q[2].scale(c * (o - 2 * kp))), (2, 4, q[1].scale(-c * (o + 2 * kp))),
        ]
        for axis, i, val in expected:
            bad += dunkl(axis, p[i], params) != val
        n = 2 * m + 1
        r = {i: basis_poly(n, i, params) for i in range(1, 5)}
        vec = [
            (r[1], n - 2 * kp, p[1], p[2]), (r[2], n + 2 * kp, p[2], -p[1]),
            (r[3], n - 2 * km, p[3], p[4]), (r[4], n + 2 * km, p[4], -p[3]),
        ]
        for f, coef, a, b in vec:
            bad += dunkl(1, f, params) != a.scale(coef)
            bad += dunkl(2, f, params) != b.scale(coef)
    return bad


def _rank(polys: Sequence[VPoly]) -> int:
    """Exact rank of the coefficient matrix, by Fraction elimination."""
    keys = sorted({(m, j) for f in polys for m in f.terms for j in (0, 1)})
    rows = [[f.terms.get(m, (0, 0))[j] for m, j in keys] for f in polys]
    rank = 0
    for col in range(len(keys)):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                ratio = rows[r][col] / rows[rank][col]
                rows[r] = [a - ratio * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def suite_harmonic(params: Params, nmax: int = 10) -> List[Check]:
    checks = []
    bad = sum(bool(laplacian(basis_poly(n, i, params), params))
              for n in range(1, nmax + 1) for i in valid_indices(n))
    checks.append(_exact("Laplacian annihilates p[n,i]", params, bad))

    bad = 0
    for n in range(1, nmax + 1):
        exp = _z_values(n)
        for i in range(1, 5):
            got = eval_complex(basis_poly(n, i, params), ((1, 0), (0, 1)))
            want = tuple((Fraction(a), Fraction(b)) for a, b in exp[i - 1])
            bad += got != want
    checks.append(_exact("values at (1, i)", params, bad))

    bad = 0
    for n in range(1, nmax + 1):
        p = [basis_poly(n, i, params) for i in range(1, 5)]
        img = [group_act(SIGMA12P, f) for f in p]
        want = [p[0], -p[1], -p[2], p[3]] if n % 2 else [p[1], p[0], -p[3], -p[2]]
        bad += sum(a != b for a, b in zip(img, want))
    checks.append(_exact("sigma12+ action", params, bad))

    checks.append(_exact("Dunkl action on p[n,i]", params,
                         _dunkl_action_failures(max(1, (nmax - 1) // 2), params)))

    bad = 0
    for m in range(1, nmax // 2 + 1):
        for i, eps in zip(range(1, 5), (-1, 1, 1, -1)):
            f = basis_poly(2 * m, i, params)
            bad += u12_apply(f, params) != f.scale(2 * m * eps)
    checks.append(_exact("U12 eigenvalues", params, bad))

    bad = sum(_rank([basis_poly(n, i, params) for i in range(1, 5)]) != 4
              for n in range(1, nmax + 1))
    checks.append(_exact("four independent harmonics per degree", params, bad))

    bad = 0
    for n in range(nmax + 1):
        for i in valid_indices(n):
            for j in valid_indices(n):
                got = pair_tau(basis_poly(n, i, params), basis_poly(n, j, params), params)
                bad += got != (norm_pi(n, i, params) if i == j else 0)
    checks.append(_exact("pair_tau against closed-form norms", params, bad))

    kp, km = params.kplus, params.kminus
    bad = 0
    for m in range(0, (nmax - 1) // 2 + 1):
        n = 2 * m + 1
        if n > nmax:
            break
        # degree 0 aliases p[0,3] = p[0,1] and p[0,4] = -p[0,2]
        nu = {(d, i): norm_pi(d, i if d or i < 3 else i - 2, params)
              for d in (2 * m, n) for i in range(1, 5)}
        bad += nu[(n, 1)] != 2 * (n - 2 * kp) * nu[(2 * m, 1)]
        bad += nu[(n, 2)] != 2 * (n + 2 * kp) * nu[(2 * m, 1)]
        bad += nu[(n, 3)] != 2 * (n - 2 * km) * nu[(2 * m, 3)]
        bad += nu[(n, 4)] != 2 * (n + 2 * km) * nu[(2 * m, 3)]
    for m in range(1, nmax // 2 + 1):
        o = 2 * m - 1
        nu = lambda d, i: norm_pi(d, i, params)  # noqa: E731
        e12 = 2 * m * ((Fraction(o + 2 * km, o)) ** 2 * nu(o, 3) + (Fraction(o - 2 * km, o)) ** 2 * nu(o, 4))
        e34 = 2 * m * ((Fraction(o + 2 * kp, o)) ** 2 * nu(o, 1) + (Fraction(o - 2 * kp, o)) ** 2 * nu(o, 2))
        bad += (nu(2 * m, 1) != e12) + (nu(2 * m, 2) != e12)
        bad += (nu(2 * m, 3) != e34) + (nu(2 * m, 4) != e34)
    checks.append(_exact("norm recurrences", params, bad))

    k0, k1 = params.k0, params.k1
    want = [2 * (1 - 2 * k0 - 2 * k1), 2 * (1 + 2 * k0 + 2 * k1),
            2 * (1 + 2 * k0 - 2 * k1), 2 * (1 - 2 * k0 + 2 * k1)]
    bad = sum(pair_tau(basis_poly(1, i, params), basis_poly(1, i, params), params) != want[i - 1]
              for i in range(1, 5))
    checks.append(_exact("degree-1 norms", params, bad))
    return checks


# ---------------------------------------------------------------------------
# forms


def _spanning_set(params: Params, nmax: int, amax: int):
    out = []
    for n in range(nmax + 1):
        for i in valid_indices(n):
            for a in range(amax + 1):
                out.append(((a, n, i), basis_poly(n, i, params).mul_normsq(a)))
    return out


def suite_forms(params: Params, nmax: int = 4, seed: int = 0) -> List[Check]:
    rng = random.Random(seed)
    checks = []
    pairs = [(random_vpoly(rng, 4), random_vpoly(rng, 4)) for _ in range(4)]
    bad = sum(pair_tau(group_act(w, f), group_act(w, g), params) != pair_tau(f, g, params)
              for f, g in pairs for w in GROUP)
    checks.append(_exact("W-invariance of pair_tau", params, bad))

    bad = 0
    for _ in range(6):
        f = random_vpoly(rng, 4)
        g = random_vpoly(rng, 5)
        for i in (1, 2):
            bad += pair_tau(f.mul_x(i), g, params) != pair_tau(f, dunkl(i, g, params), params)
    checks.append(_exact("x_i adjoint to D_i", params, bad))

    items = _spanning_set(params, nmax, 2)
    bad = 0
    for (a, n, i), f in items:
        for (b, m, j), g in items:
            got = pair_tau(f, g, params)
            if (a, n, i) == (b, m, j):
                want = (4 ** a * math.factorial(a)
                        * _poch(n + 1, a) * norm_pi(n, i, params))
            else:
                want = 0
            bad += got != want
    checks.append(_exact("orthogonality grid", params, bad))

    if params.is_positive_region():
        bad = sum(pair_tau(f, f, params) <= 0 for _, f in items)
        checks.append(_exact("positivity in the open square", params, bad))
    return checks


def _poch(a: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= a + j
    return out


# ---------------------------------------------------------------------------
# kernel


def suite_kernel(params: Params, nmax: int = 6, y=(Fraction(1, 3), Fraction(-2, 5))) -> List[Check]:
    checks = []
    y = tuple(Fraction(v) for v in y)
    bad = 0
    for n in range(nmax + 1):
        rows = kernel_E_poly(n, y, params)
        for f in _reproduction_targets(n, params):
            got = tuple(pair_tau(row, f, params) for row in rows)
            bad += got != f.evaluate(y)
    checks.append(_exact("reproducing property of E_n", params, bad))

    bad = 0
    for n in range(nmax + 1):
        rows = kernel_E_poly(n, y, params)
        for d in range(nmax + 1):
            if d == n:
                continue
            for f in _reproduction_targets(d, params):
                bad += any(pair_tau(row, f, params) for row in rows)
    checks.append(_exact("E_n orthogonal to other degrees", params, bad))

    bad = 0
    for n in range(1, nmax + 1):
        cur = kernel_E_poly(n, y, params)
        prev = kernel_E_poly(n - 1, y, params)
        for i in (1, 2):
            for l in range(2):
                bad += dunkl(i, cur[l], params) != prev[l].scale(y[i - 1])
    checks.append(_exact("D_i E_n = y_i E_(n-1)", params, bad))

    x = (Fraction(2, 7), Fraction(5, 3))
    bad = 0
    for n in range(nmax + 1):
        a = kernel_E(n, x, y, params)
        rows = kernel_E_poly(n, y, params)
        vals = [row.evaluate(x) for row in rows]
        bad += any(a[l, j] != vals[l][j] for l in range(2) for j in range(2))
    checks.append(_exact("E_n matrix agrees with polynomial rows", params, bad))

    from .kernel import omega

    zeros = [omega(u, u + n) for u in (0.25, 0.75) for n in range(3)]
    checks.append(_numeric("omega(u; u+n) = 0", params, 0.0, max(abs(z) for z in zeros)))

    if params.is_positive_region():
        errs = {}
        for n in (40, 80):
            errs[n] = max(abs(float(norm_prime(n + r, i, params)) - norm_prime_limit((n + r) % 4, i, params))
                          for r in range(4) for i in range(1, 5))
        ratio = errs[40] / errs[80] if errs[80] else math.inf
        ok = errs[80] < errs[40] <= 10 * errs[80]
        checks.append(Check("nu' limit error decays (n=40 vs 80)", _pdict(params), 10.0, ratio, ok,
                            note=f"err40={errs[40]:.3e} err80={errs[80]:.3e}"))
    return checks


def _reproduction_targets(n: int, params: Params):
    out = [basis_poly(n, i, params) for i in valid_indices(n)]
    if n >= 2:
        out += [basis_poly(n - 2, i, params).mul_normsq(1) for i in valid_indices(n - 2)]
    return out


# ---------------------------------------------------------------------------
# weight


def _richardson(f: Callable[[float], np.ndarray], h: float) -> np.ndarray:
    d1 = (f(h) - f(-h)) / (2 * h)
    d2 = (f(h / 2) - f(-h / 2)) / h
    return (4 * d2 - d1) / 3


def _eqnK_residual(x, wp: WeightParams) -> float:
    x = np.asarray(x, dtype=float)
    worst = 0.0
    K = K_matrix(x, wp)
    for i in range(2):
        e = np.zeros(2)
        e[i] = 1.0
        lhs = _richardson(lambda h: K_matrix(x + h * e, wp), 1e-3 * np.linalg.norm(x))
        rhs = np.zeros((2, 2))
        for v, key, s in POSITIVE_ROOTS:
            k = wp.k0 if key == "k0" else wp.k1
            S = np.array(s.matrix, dtype=float)
            rhs += k * v[i] / (x[0] * v[0] + x[1] * v[1]) * (S @ K + K @ S)
        worst = max(worst, float(np.max(np.abs(lhs - rhs)) / max(1e-300, np.max(np.abs(rhs)), np.max(np.abs(K)))))
    return worst


def _slope(xs: np.ndarray, ys: np.ndarray) -> float:
    return float(np.polyfit(np.log(xs), np.log(np.abs(ys)), 1)[0])


def boundary_slopes(wp: WeightParams):
    """Fitted exponents of K12(1, eps) and (K11 - K22)(1, 1 - eps) on eps in [1e-4, 1e-2]."""
    eps = np.logspace(-4, -2, 21)
    k12 = np.array([K_fundamental(e, wp)[0, 1] for e in eps])
    diag = []
    for e in eps:
        k = K_fundamental(1 - e, wp, t=e * (2 - e))
        diag.append(k[0, 0] - k[1, 1])
    return _slope(eps, k12), _slope(eps, np.array(diag))


def suite_weight(wp: WeightParams, seed: int = 0) -> List[Check]:
    rng = np.random.default_rng(seed)
    p = {"k0": wp.k0, "k1": wp.k1}
    checks = []

    def num(name, tol, measured, note=""):
        checks.append(Check(name, p, tol, float(measured), bool(measured <= tol), note))

    us = np.linspace(0.005, 0.995, 200)
    num("det L = 1", 1e-10, max(abs(np.linalg.det(L_matrix(u, wp)) - 1) for u in us))
    u = math.sqrt(0.5)
    a = L_matrix(u, wp, branch="direct")
    b = L_matrix(u, wp, branch="connection")
    num("branch agreement at u^2 = 1/2", 1e-10, np.max(np.abs(a - b)) / np.max(np.abs(a)))

    worst = 0.0
    for u in np.linspace(0.05, 0.95, 19):
        h = 1e-5
        dL = (L_matrix(u + h, wp) - L_matrix(u - h, wp)) / (2 * h)
        A = (wp.k1 / u) * np.diag([1.0, -1.0]) - (2 * wp.k0 / (1 - u * u)) * np.array([[0.0, 1.0], [1.0, 0.0]])
        rhs = L_matrix(u, wp) @ A
        worst = max(worst, np.max(np.abs(dL - rhs)) / max(np.max(np.abs(rhs)), np.max(np.abs(L_matrix(u, wp)))))
    num("ODE residual for L", 1e-6, worst)

    pts = []
    for _ in range(50):
        th = rng.uniform(0.02, math.pi / 4 - 0.02)
        r = rng.uniform(0.5, 2.0)
        pts.append((r * math.cos(th), r * math.sin(th)))
    num("PDE residual for K", 1e-6, max(_eqnK_residual(x, wp) for x in pts))

    s12, sdiag = boundary_slopes(wp)
    num("slope of K12 at x2 -> 0", 0.05, abs(s12 - (1 - 2 * abs(wp.k1))), f"fitted {s12:.4f}")
    # the (1 - u^2)^(-2 k0) part dominates for k0 > 0, so the exponent is 1 - 2|k0|
    num("slope of K11 - K22 at the diagonal", 0.05, abs(sdiag - (1 - 2 * abs(wp.k0))),
        f"fitted {sdiag:.4f}")

    mins = []
    for _ in range(1000):
        th = rng.uniform(0, 2 * math.pi)
        try:
            mins.append(np.linalg.eigvalsh(K_matrix((math.cos(th), math.sin(th)), wp)).min())
        except ValueError:
            continue
    checks.append(Check("K positive definite", p, 0.0, float(min(mins)), bool(min(mins) > 0)))

    worst = 0.0
    for x in pts[:10]:
        for w in GROUP:
            m = np.array(w.matrix, dtype=float)
            xw = np.asarray(x) @ m
            worst = max(worst, np.max(np.abs(K_matrix(xw, wp) - m.T @ K_matrix(x, wp) @ m)))
    num("K(xw) = w^-1 K(x) w", 1e-12, worst)

    worst = 0.0
    for x in pts[:10]:
        for r in (0.5, 2.0):
            worst = max(worst, np.max(np.abs(K_matrix((r * x[0], r * x[1]), wp) - K_matrix(x, wp))))
    num("K homogeneous of degree 0", 1e-12, worst)

    k0, k1 = wp.k0, wp.k1
    ident = eta(k0, k1) * eta(-k0, -k1) + eta(k0, -k1) * eta(-k0, k1)
    num("eta identity", 1e-12, abs(ident - 0.5))
    d1, d2 = d_coefficients(wp)
    want = wp.c ** 2 * (1 - math.tan(math.pi * k0) ** 2 * math.tan(math.pi * k1) ** 2)
    num("det K = d1 d2", 1e-9, max(abs(np.linalg.det(K_matrix(x, wp)) - d1 * d2) for x in pts[:10])
        + abs(d1 * d2 - want))

    if k0 == 0 or k1 == 0:
        worst = 0.0
        for th in np.linspace(0.01, 2 * math.pi - 0.01, 97):
            x = (math.cos(th), math.sin(th))
            try:
                worst = max(worst, np.max(np.abs(K_matrix(x, wp) - K_degenerate(x, wp))))
            except ValueError:
                continue
        num("degenerate closed form", 1e-10, worst)
    return checks


# ---------------------------------------------------------------------------
# quadrature-backed suites


def suite_gaussian(params: Params, nmax: int = 4, spec: QuadSpec = QuadSpec()) -> List[Check]:
    wp = WeightParams(*params.as_floats())
    polys = []
    for n in range(nmax + 1):
        for i in valid_indices(n):
            f = basis_poly(n, i, params)
            polys += [f, f.mul_normsq(1)]
    worst = 0.0
    for a in range(len(polys)):
        for b in range(a, len(polys)):
            exact = float(pair_gauss(polys[a], polys[b], params))
            got = gaussian_form_integral(polys[a], polys[b], wp, spec)
            worst = max(worst, abs(got - exact) / max(1.0, abs(exact)))
    checks = [_numeric("quadrature equals Gaussian form", params, 1e-8, worst)]

    est = estimate_c(params, spec)
    checks.append(_numeric("normalization conjecture", params, 1e-8, est.difference,
                           note=f"estimate={est.estimate:.17g} conjecture={est.conjecture:.17g}"))

    elems = [laguerre_element(m, n, i, params) for m in range(2) for n in range(3)
             for i in valid_indices(n) if m + n <= 2]
    worst = 0.0
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            worst = max(worst, abs(gaussian_form_integral(elems[a].poly, elems[b].poly, wp, spec)))
    worst_norm = max(abs(gaussian_form_integral(e.poly, e.poly, wp, spec) - float(e.nu_g))
                     / max(1.0, float(e.nu_g)) for e in elems)
    checks.append(_numeric("Laguerre elements orthogonal", params, 1e-8, worst))
    checks.append(_numeric("Laguerre element norms", params, 1e-8, worst_norm))

    f, g = basis_poly(2, 1, params), basis_poly(1, 3, params).mul_x(1)
    base = gaussian_form_integral(f, g, wp, spec)
    worst = max(abs(gaussian_form_integral(group_act(w, f), group_act(w, g), wp, spec) - base)
                for w in GROUP)
    checks.append(_numeric("W-invariance of the integral", params, 1e-10, worst))
    return checks


FOURIER_POINTS = ((0.6, -0.8), (0.3, 0.2), (0.0, 0.0))


def fourier_cases():
    return [(m, n, i) for n in range(3) for m in range(5) if m + 2 * n <= 4
            for i in ((1,) if n == 0 else (1, 2, 3, 4))]


def suite_fourier(params: Params, spec: QuadSpec = QuadSpec(angular_tol=1e-8),
                  laguerre_arg_convention: str = "full",
                  phase_convention: str = "n+2m") -> List[Check]:
    worst = 0.0
    worst_case = None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for m, n, i in fourier_cases():
            for y in FOURIER_POINTS:
                r = fourier_eigen_check(m, n, i, y, params, spec,
                                        laguerre_arg_convention, phase_convention)
                if r.residual >= worst:
                    worst, worst_case = r.residual, (m, n, i, y)
    note = (f"laguerre={laguerre_arg_convention} phase=(-i)^({phase_convention}) "
            f"worst case (m,n,i,y)={worst_case}")
    return [_numeric("Fourier eigenfunctions", params, 1e-4, worst, note)]


def run_suite(name: str, params: Params, nmax=None) -> List[Check]:
    if name == "algebra":
        return suite_algebra(params, nmax if nmax is not None else 6)
    if name == "harmonic":
        return suite_harmonic(params, nmax if nmax is not None else 10)
    if name == "forms":
        return suite_forms(params, nmax if nmax is not None else 4)
    if name == "kernel":
        return suite_kernel(params, nmax if nmax is not None else 6)
    if name == "weight":
        return suite_weight(WeightParams(*params.as_floats()))
    if name == "gaussian":
        return suite_gaussian(params, nmax if nmax is not None else 4)
    if name == "fourier":
        return suite_fourier(params)
    raise ValueError(f"unknown suite {name!r}")
