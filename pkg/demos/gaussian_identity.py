"""The integral against K reproduces the exact Gaussian form.

Compares quadrature with exact rationals on low-degree harmonics, measures
the normalization constant with c set to 1, and runs a few Fourier
eigenfunction cases under both Laguerre conventions.
"""
import warnings
from fractions import Fraction

from b2dunkl import Params, WeightParams, basis_poly, estimate_c, gaussian_form_integral, pair_gauss
from b2dunkl.quad import fourier_eigen_check

params = Params(Fraction(3, 10), Fraction(1, 10))
wp = WeightParams(0.3, 0.1)

for (n, i), (m, j) in [((1, 1), (1, 1)), ((2, 3), (2, 3)), ((1, 2), (3, 2))]:
    f = basis_poly(n, i, params)
    g = basis_poly(m, j, params).mul_normsq(1)
    exact = pair_gauss(f, g, params)
    print(f"<p[{n},{i}], |x|^2 p[{m},{j}]>  exact {str(exact):>12}  quadrature "
          f"{gaussian_form_integral(f, g, wp):.12f}")

for k in [(0.0, 0.0), (0.3, 0.1), (0.45, 0.04), (-0.2, -0.25)]:
    est = estimate_c(k)
    print(f"c{k}: measured {est.estimate:.14f}  cos cos / 2pi {est.conjecture:.14f}")

fp = Params(Fraction(1, 4), Fraction(1, 8))
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for m, n, i in [(1, 0, 1), (0, 1, 2), (1, 1, 3), (2, 1, 1)]:
        row = []
        for lag in ("full", "half"):
            for ph in ("n+2m", "m+2n"):
                r = fourier_eigen_check(m, n, i, (0.6, -0.8), fp,
                                        laguerre_arg_convention=lag, phase_convention=ph)
                row.append(f"{lag}/{ph} {r.residual:.1e}")
        print((m, n, i), "  ".join(row))
