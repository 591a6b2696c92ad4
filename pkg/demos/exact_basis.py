"""Build the harmonic basis at (k0, k1) = (1/4, 1/8) and look at its norms.

Everything here is exact rational arithmetic.
"""
from fractions import Fraction

from b2dunkl import Params, build_basis, laplacian, pair_tau
from b2dunkl.harmonic import norm_prime

params = Params(Fraction(1, 4), Fraction(1, 8))

print("degree index type  nu")
for entry in build_basis(4, params):
    assert not laplacian(entry.poly, params)
    print(f"{entry.n:6d} {entry.i:5d} {entry.type_label:>4}  {entry.nu}")

# the pairing is diagonal on the basis
basis = build_basis(3, params)
off = [pair_tau(a.poly, b.poly, params) for a in basis for b in basis
       if (a.n, a.i) != (b.n, b.i) and a.n == b.n]
print("largest off-diagonal pairing in degrees <= 3:", max(abs(v) for v in off))

# normalized norms settle down slowly as the degree grows
for n in (8, 16, 32, 64):
    print(n, [round(float(norm_prime(n, i, params)), 6) for i in range(1, 5)])
