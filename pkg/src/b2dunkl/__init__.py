"""Vector-valued Dunkl operators for the group B2 and their matrix Gaussian weight."""
from .algebra import (
    GROUP,
    Params,
    VPoly,
    dunkl,
    eval_complex,
    group_act,
    laplacian,
)
from .forms import laguerre_element, pair_gauss, pair_tau
from .harmonic import BasisEntry, basis_poly, build_basis, norm_pi, norm_prime
from .kernel import kernel_E, kernel_E_truncated, kernel_P
from .quad import QuadSpec, estimate_c, fourier_eigen_check, gaussian_form_integral
from .weight import K_matrix, L_matrix, WeightParams, gauss_2f1, weight_sample

__all__ = [
    "GROUP", "Params", "VPoly", "dunkl", "eval_complex", "group_act", "laplacian",
    "laguerre_element", "pair_gauss", "pair_tau",
    "BasisEntry", "basis_poly", "build_basis", "norm_pi", "norm_prime",
    "kernel_E", "kernel_E_truncated", "kernel_P",
    "QuadSpec", "estimate_c", "fourier_eigen_check", "gaussian_form_integral",
    "K_matrix", "L_matrix", "WeightParams", "gauss_2f1", "weight_sample",
]
