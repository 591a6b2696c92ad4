"""Exact arithmetic for V-valued polynomials on R^2 and the B2 Dunkl operators.

A :class:`VPoly` stores ``f1(x) t1 + f2(x) t2`` as a sparse map from the
exponent pair ``(a, b)`` of ``x1**a * x2**b`` to the coefficient pair
``(c1, c2)``.  All coefficients are :class:`fractions.Fraction`.

Group convention
----------------
Elements act by ``(w f)(x, t) = f(x w, t w)`` with ``x``, ``t`` row vectors.
Composing two actions multiplies matrices in the written order::

    group_act(w1, group_act(w2, f)) == group_act(w1 * w2, f)

where ``w1 * w2`` is the matrix product ``w1 @ w2``.  This is pinned by
``tests/test_algebra.py::test_composition_order``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[int, int]
Coeffs = Tuple[Fraction, Fraction]
ScalarPoly = Dict[Monomial, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)

#: gamma(kappa; tau) for the 2-dimensional representation: every reflection
#: matrix has trace zero.
GAMMA_TAU = Fraction(0)


class DivisionError(ArithmeticError):
    """A difference quotient was not divisible by its linear form.

    This signals a bug in the operator code, never bad user input.
    """


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction.

    Floats are rejected so that exact code paths never silently round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Params:
    """The multiplicity pair (k0, k1) held as exact rationals.

    ``k0`` is the value on the diagonal reflections, ``k1`` on the
    coordinate reflections.
    """

    k0: Fraction
    k1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k0", as_fraction(self.k0))
        object.__setattr__(self, "k1", as_fraction(self.k1))

    @property
    def kplus(self) -> Fraction:
        return self.k0 + self.k1

    @property
    def kminus(self) -> Fraction:
        return self.k1 - self.k0

    def is_positive_region(self) -> bool:
        half = Fraction(1, 2)
        return all(-half < k < half for k in (self.kplus, self.kminus))

    def is_generic(self) -> bool:
        half = Fraction(1, 2)
        for s0 in (1, -1):
            for s1 in (1, -1):
                if (half + s0 * self.k0 + s1 * self.k1).denominator == 1:
                    return False
        return True

    def as_floats(self) -> Tuple[float, float]:
        return float(self.k0), float(self.k1)


# ---------------------------------------------------------------------------
# The group W(B2)

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True)
class GroupElement:
    name: str
    matrix: Matrix

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return element_from_matrix(_matmul(self.matrix, other.matrix))

    @property
    def inverse(self) -> "GroupElement":
        m = self.matrix
        return element_from_matrix(((m[0][0], m[1][0]), (m[0][1], m[1][1])))

    @property
    def is_reflection(self) -> bool:
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0] == -1

    def apply_point(self, x):
        """Row vector ``x`` times the matrix."""
        m = self.matrix
        return (x[0] * m[0][0] + x[1] * m[1][0], x[0] * m[0][1] + x[1] * m[1][1])

    def __repr__(self):
        return f"GroupElement({self.name})"


def _matmul(p: Matrix, q: Matrix) -> Matrix:
    return tuple(
        tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


IDENTITY = GroupElement("e", ((1, 0), (0, 1)))
SIGMA1 = GroupElement("s1", ((-1, 0), (0, 1)))
SIGMA2 = GroupElement("s2", ((1, 0), (0, -1)))
SIGMA12P = GroupElement("s12+", ((0, 1), (1, 0)))
SIGMA12M = GroupElement("s12-", ((0, -1), (-1, 0)))
ROT = GroupElement("r", ((0, 1), (-1, 0)))
ROT2 = GroupElement("r2", ((-1, 0), (0, -1)))
ROT3 = GroupElement("r3", ((0, -1), (1, 0)))

GROUP: Tuple[GroupElement, ...] = (
    IDENTITY, SIGMA1, SIGMA2, SIGMA12P, SIGMA12M, ROT, ROT2, ROT3,
)
REFLECTIONS: Tuple[GroupElement, ...] = (SIGMA12P, SIGMA12M, SIGMA1, SIGMA2)
_BY_MATRIX = {g.matrix: g for g in GROUP}


def element_from_matrix(m: Matrix) -> GroupElement:
    try:
        return _BY_MATRIX[tuple(tuple(int(v) for v in row) for row in m)]
    except KeyError:
        raise ValueError(f"{m} is not an element of W(B2)") from None


# (root, multiplicity key, reflection) for the positive roots.
POSITIVE_ROOTS = (
    ((1, -1), "k0", SIGMA12P),
    ((1, 1), "k0", SIGMA12M),
    ((1, 0), "k1", SIGMA1),
    ((0, 1), "k1", SIGMA2),
)


def multiplicity(key: str, params: Params) -> Fraction:
    return params.k0 if key == "k0" else params.k1


# ---------------------------------------------------------------------------
# Polynomials


def _sort_key(mono: Monomial):
    # graded lexicographic with x1 > x2
    return (mono[0] + mono[1], -mono[0])


@dataclass(frozen=True, eq=False)
class VPoly:
    """``f1(x) t1 + f2(x) t2`` with exact rational coefficients."""

    terms: Mapping[Monomial, Coeffs] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, (c1, c2) in self.terms.items():
            c1, c2 = as_fraction(c1), as_fraction(c2)
            if c1 or c2:
                clean[(int(mono[0]), int(mono[1]))] = (c1, c2)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "VPoly":
        return cls({})

    @classmethod
    def from_components(cls, f1: Mapping[Monomial, object], f2: Mapping[Monomial, object]) -> "VPoly":
        terms: Dict[Monomial, list] = {}
        for mono, c in f1.items():
            terms.setdefault(mono, [ZERO, ZERO])[0] += as_fraction(c)
        for mono, c in f2.items():
            terms.setdefault(mono, [ZERO, ZERO])[1] += as_fraction(c)
        return cls({m: tuple(c) for m, c in terms.items()})

    @classmethod
    def monomial(cls, a: int, b: int, c1=0, c2=0) -> "VPoly":
        return cls({(a, b): (as_fraction(c1), as_fraction(c2))})

    # -- basic protocol ----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, VPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Coeffs]]:
        for mono in sorted(self.terms, key=_sort_key):
            yield mono, self.terms[mono]

    def __repr__(self):
        if not self.terms:
            return "VPoly(0)"
        parts = []
        for (a, b), (c1, c2) in self:
            parts.append(f"x1^{a} x2^{b} ({c1}, {c2})")
        return "VPoly(" + " + ".join(parts) + ")"

    # -- ring operations ---------------------------------------------------
    def __add__(self, other: "VPoly") -> "VPoly":
        terms = dict(self.terms)
        for mono, (d1, d2) in other.terms.items():
            c1, c2 = terms.get(mono, (ZERO, ZERO))
            terms[mono] = (c1 + d1, c2 + d2)
        return VPoly(terms)

    def __neg__(self) -> "VPoly":
        return VPoly({m: (-c1, -c2) for m, (c1, c2) in self.terms.items()})

    def __sub__(self, other: "VPoly") -> "VPoly":
        return self + (-other)

    def scale(self, s) -> "VPoly":
        s = as_fraction(s)
        if not s:
            return VPoly.zero()
        return VPoly({m: (s * c1, s * c2) for m, (c1, c2) in self.terms.items()})

    def __mul__(self, s):
        if isinstance(s, (int, Fraction)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def mul_monomial(self, a: int, b: int) -> "VPoly":
        return VPoly({(m[0] + a, m[1] + b): c for m, c in self.terms.items()})

    def mul_scalar_poly(self, q: Mapping[Monomial, object]) -> "VPoly":
        terms: Dict[Monomial, list] = {}
        for (qa, qb), qc in q.items():
            qc = as_fraction(qc)
            if not qc:
                continue
            for (a, b), (c1, c2) in self.terms.items():
                slot = terms.setdefault((a + qa, b + qb), [ZERO, ZERO])
                slot[0] += qc * c1
                slot[1] += qc * c2
        return VPoly({m: tuple(c) for m, c in terms.items()})

    def mul_x(self, i: int) -> "VPoly":
        return self.mul_monomial(1, 0) if i == 1 else self.mul_monomial(0, 1)

    def mul_normsq(self, power: int = 1) -> "VPoly":
        """Multiply by ``|x|^(2*power)``."""
        out = self
        for _ in range(power):
            out = out.mul_scalar_poly(NORMSQ)
        return out

    # -- structure ---------------------------------------------------------
    def component(self, j: int) -> ScalarPoly:
        return {m: c[j - 1] for m, c in self.terms.items() if c[j - 1]}

    def degrees(self) -> set:
        return {a + b for a, b in self.terms}

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "VPoly":
        return VPoly({m: c for m, c in self.terms.items() if m[0] + m[1] == d})

    def homogeneous_parts(self) -> Dict[int, "VPoly"]:
        return {d: self.homogeneous_part(d) for d in sorted(self.degrees())}

    def constant_term(self) -> Coeffs:
        return self.terms.get((0, 0), (ZERO, ZERO))

    # -- evaluation --------------------------------------------------------
    def evaluate(self, x):
        """Return ``(f1(x), f2(x))`` for any numeric type supporting ``*``/``**``.

        Works for Fractions, floats, complex numbers and numpy arrays.
        """
        x1, x2 = x
        v1 = v2 = 0
        for (a, b), (c1, c2) in self.terms.items():
            mono = x1 ** a * x2 ** b
            if c1:
                v1 = v1 + _coerce(c1, mono) * mono
            if c2:
                v2 = v2 + _coerce(c2, mono) * mono
        return v1, v2

    # -- serialization -----------------------------------------------------
    def to_json(self) -> list:
        return [
            {"a": a, "b": b, "c1": _frac_str(c1), "c2": _frac_str(c2)}
            for (a, b), (c1, c2) in self
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "VPoly":
        terms = {}
        for item in data:
            terms[(int(item["a"]), int(item["b"]))] = (
                Fraction(item["c1"]), Fraction(item["c2"]))
        return cls(terms)


def _coerce(c: Fraction, like):
    # keep Fraction arithmetic exact; convert for floating/complex inputs
    if isinstance(like, (int, Fraction)):
        return c
    return float(c)


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


NORMSQ: ScalarPoly = {(2, 0): ONE, (0, 2): ONE}

T1 = VPoly.monomial(0, 0, 1, 0)
T2 = VPoly.monomial(0, 0, 0, 1)


def poly_arith(op: str, f: VPoly, g: VPoly = None, arg=None) -> VPoly:
    """Dispatch helper over the ring operations.

    ``op`` is one of ``add``, ``sub``, ``scale``, ``mul_monomial``,
    ``mul_scalar_poly``.  ``arg`` carries the scalar, the exponent pair or
    the scalar polynomial.
    """
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "scale":
        return f.scale(arg)
    if op == "mul_monomial":
        return f.mul_monomial(*arg)
    if op == "mul_scalar_poly":
        return f.mul_scalar_poly(arg)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Group action and Dunkl operators


def _substitute_monomial(mono: Monomial, w: GroupElement):
    """Image of ``x1^a x2^b`` under ``x -> x w``: (sign, new monomial)."""
    a, b = mono
    m = w.matrix
    # (x w)_1 = x1 m00 + x2 m10, (x w)_2 = x1 m01 + x2 m11; signed permutation
    if m[0][0] != 0:
        # (x w)_1 = m00 x1, (x w)_2 = m11 x2
        return m[0][0] ** a * m[1][1] ** b, (a, b)
    # (x w)_1 = m10 x2, (x w)_2 = m01 x1
    return m[1][0] ** a * m[0][1] ** b, (b, a)


def _t_mix(w: GroupElement, c: Coeffs) -> Coeffs:
    """Coefficient pair of ``f(x, t w)`` given that of ``f(x, t)``."""
    m = w.matrix
    return (m[0][0] * c[0] + m[0][1] * c[1], m[1][0] * c[0] + m[1][1] * c[1])


def group_act(w: GroupElement, f: VPoly) -> VPoly:
    """``(w f)(x, t) = f(x w, t w)``."""
    terms: Dict[Monomial, Coeffs] = {}
    for mono, c in f.terms.items():
        sign, new = _substitute_monomial(mono, w)
        c1, c2 = _t_mix(w, c)
        terms[new] = (sign * c1, sign * c2)
    return VPoly(terms)


def t_act(w: GroupElement, f: VPoly) -> VPoly:
    """``f(x, t w)``: the representation acting on values only."""
    return VPoly({m: _t_mix(w, c) for m, c in f.terms.items()})


def _divide_scalar(q: ScalarPoly, alpha: int, beta: int) -> ScalarPoly:
    """Exact quotient of ``q`` by ``alpha x1 + beta x2``."""
    by_degree: Dict[int, Dict[int, Fraction]] = {}
    for (a, b), c in q.items():
        by_degree.setdefault(a + b, {})[a] = c
    out: ScalarPoly = {}
    for d, coeffs in by_degree.items():
        if d == 0:
            raise DivisionError("nonzero constant in a difference quotient")
        r = [ZERO] * d  # r[a] multiplies x1^a x2^(d-1-a)
        if alpha:
            r[d - 1] = coeffs.get(d, ZERO) / alpha
            for a in range(d - 1, 0, -1):
                r[a - 1] = (coeffs.get(a, ZERO) - beta * r[a]) / alpha
            if coeffs.get(0, ZERO) != beta * r[0]:
                raise DivisionError(f"not divisible by {alpha}*x1 + {beta}*x2")
        else:
            for a in range(d):
                r[a] = coeffs.get(a, ZERO) / beta
            if coeffs.get(d, ZERO):
                raise DivisionError(f"not divisible by {beta}*x2")
        for a, c in enumerate(r):
            if c:
                out[(a, d - 1 - a)] = c
    return out


def divide_linear(f: VPoly, alpha: int, beta: int) -> VPoly:
    """Exact division of both components by ``alpha x1 + beta x2``."""
    return VPoly.from_components(
        _divide_scalar(f.component(1), alpha, beta),
        _divide_scalar(f.component(2), alpha, beta),
    )


def partial(i: int, f: VPoly) -> VPoly:
    terms = {}
    for (a, b), (c1, c2) in f.terms.items():
        e = a if i == 1 else b
        if e:
            new = (a - 1, b) if i == 1 else (a, b - 1)
            terms[new] = (e * c1, e * c2)
    return VPoly(terms)


@lru_cache(maxsize=65536)
def dunkl(i: int, f: VPoly, params: Params) -> VPoly:
    """The Dunkl operator ``D_i`` on V-valued polynomials, exactly.

    Each reflection term ``(f(x, t s) - f(x s, t s)) / <x, v>`` is divided
    symbolically; a non-divisible numerator raises :class:`DivisionError`.
    """
    if i not in (1, 2):
        raise ValueError("axis index must be 1 or 2")
    out = partial(i, f)
    for v, key, s in POSITIVE_ROOTS:
        vi = v[i - 1]
        k = multiplicity(key, params)
        if not vi or not k:
            continue
        numerator = t_act(s, f) - group_act(s, f)
        if numerator:
            out = out + divide_linear(numerator, v[0], v[1]).scale(k * vi)
    return out


def dunkl_monomial(a: int, b: int, f: VPoly, params: Params) -> VPoly:
    """``D1^a D2^b f``."""
    for _ in range(b):
        f = dunkl(2, f, params)
    for _ in range(a):
        f = dunkl(1, f, params)
    return f


def laplacian(f: VPoly, params: Params) -> VPoly:
    """``D1^2 f + D2^2 f``, built by composing :func:`dunkl`."""
    d1 = dunkl(1, dunkl(1, f, params), params)
    d2 = dunkl(2, dunkl(2, f, params), params)
    return d1 + d2


def laplacian_power(f: VPoly, j: int, params: Params) -> VPoly:
    for _ in range(j):
        f = laplacian(f, params)
    return f


# ---------------------------------------------------------------------------
# Exact complex evaluation

ComplexQ = Tuple[Fraction, Fraction]


def _cmul(p: ComplexQ, q: ComplexQ) -> ComplexQ:
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def _cpow(p: ComplexQ, n: int) -> ComplexQ:
    out = (ONE, ZERO)
    for _ in range(n):
        out = _cmul(out, p)
    return out


def eval_complex(f: VPoly, x) -> Tuple[ComplexQ, ComplexQ]:
    """Evaluate at a point with Gaussian-rational coordinates.

    ``x`` is a pair whose entries are either Python complex numbers with
    exactly representable parts, or ``(re, im)`` pairs of rationals.  The
    result is ``((Re f1, Im f1), (Re f2, Im f2))`` as Fractions.
    """
    pts = []
    for xi in x:
        if isinstance(xi, complex):
            pts.append((Fraction(xi.real), Fraction(xi.imag)))
        elif isinstance(xi, tuple):
            pts.append((as_fraction(xi[0]), as_fraction(xi[1])))
        else:
            pts.append((as_fraction(xi), ZERO))
    v1 = v2 = (ZERO, ZERO)
    for (a, b), (c1, c2) in f.terms.items():
        mono = _cmul(_cpow(pts[0], a), _cpow(pts[1], b))
        v1 = (v1[0] + c1 * mono[0], v1[1] + c1 * mono[1])
        v2 = (v2[0] + c2 * mono[0], v2[1] + c2 * mono[1])
    return v1, v2
