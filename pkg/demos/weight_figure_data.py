"""Tabulate K on the fundamental sector at (k0, k1) = (0.3, 0.1).

Writes weight_k0_0.3_k1_0.1.csv and its sigma-conjugated companion next to
this script, then prints the boundary exponents fitted from K itself.
"""
from pathlib import Path

import numpy as np

from b2dunkl.verify import boundary_slopes
from b2dunkl.weight import WeightParams, default_theta_grid, weight_sample

here = Path(__file__).parent
wp = WeightParams(0.3, 0.1)
grid = default_theta_grid(256)

plain = weight_sample(grid, wp)
conj = weight_sample(grid, wp, conjugate=True)
(here / "weight_k0_0.3_k1_0.1.csv").write_text(plain.to_csv())
(here / "weight_k0_0.3_k1_0.1_sigma.csv").write_text(conj.to_csv())

print("c =", wp.c)
print("K11 range", np.nanmin(plain.k11), np.nanmax(plain.k11))
print("K12 range", np.nanmin(plain.k12), np.nanmax(plain.k12))

s12, sdiag = boundary_slopes(wp)
print(f"K12 ~ x2^{s12:.3f} near the x1 axis   (1 - 2|k1| = {1 - 2 * abs(wp.k1):.3f})")
print(f"K11 - K22 ~ eps^{sdiag:.3f} near the diagonal   (1 - 2|k0| = {1 - 2 * abs(wp.k0):.3f})")
