"""Numerical radius, its dual norm, operator and nuclear norms via SDP,
with independent sweep oracles and 2 x m x n tensor norm reductions."""

from .backend import EigenConvergenceError, backend_name, jacobi_eigh
from .linalg import (DimensionError, herm_eig, hermitian_part, norms,
                     real_embed, real_restrict, s_embed, svd)
from .oracle import (CrosscheckReport, crosscheck, disk_max, dual_lower_bound,
                     max_over_circle, sweep_radius)
from .radius import (ExtremeDecomposition, InconsistentKernelError,
                     NormResult, NotFeasibleError, Quantity, RadiusWitness,
                     SolverNonConvergence, dual_numerical_radius,
                     extreme_decomposition, numerical_radius, nuclear_norm_sdp,
                     op_norm_sdp, radius_witness)
from .sdp import SdpProblem, SdpSolution, SdpStatus, SolverOptions, solve
from .tensor import (Tensor2, assemble_c, symmetrize_dual_witness,
                     tensor_nuclear, tensor_spectral, tensor_spectral_sweep,
                     trilinear_eval)

__version__ = "0.1.0"

__all__ = [
    "CrosscheckReport",
    "DimensionError",
    "EigenConvergenceError",
    "ExtremeDecomposition",
    "InconsistentKernelError",
    "NormResult",
    "NotFeasibleError",
    "Quantity",
    "RadiusWitness",
    "SdpProblem",
    "SdpSolution",
    "SdpStatus",
    "SolverNonConvergence",
    "SolverOptions",
    "Tensor2",
    "assemble_c",
    "backend_name",
    "crosscheck",
    "disk_max",
    "dual_lower_bound",
    "dual_numerical_radius",
    "extreme_decomposition",
    "herm_eig",
    "hermitian_part",
    "jacobi_eigh",
    "max_over_circle",
    "norms",
    "nuclear_norm_sdp",
    "numerical_radius",
    "op_norm_sdp",
    "radius_witness",
    "real_embed",
    "real_restrict",
    "s_embed",
    "solve",
    "svd",
    "sweep_radius",
    "symmetrize_dual_witness",
    "tensor_nuclear",
    "tensor_spectral",
    "tensor_spectral_sweep",
    "trilinear_eval",
]
