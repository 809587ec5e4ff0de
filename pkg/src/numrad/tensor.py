"""Spectral and nuclear norms of 2 x m x n real tensors.

A tensor with slices F1, F2 reduces to the numerical radius and dual norm
of the assembled complex matrix C = S(F1) + i S(F2), where S(F) is the
block embedding [[0, F], [F', 0]]: the spectral norm equals r(C) and the
nuclear norm equals r_dual(C) / 2.  The Hermitian part of C is S(F1) and
the skew part is S(F2), so sweeping the pencil of C reproduces the
trilinear maximization max_theta ||cos(theta) F1 + sin(theta) F2||.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, oracle, radius
from .linalg import DimensionError
from .radius import NormResult


@dataclass(frozen=True)
class Tensor2:
    """2 x m x n real tensor stored as two real slices."""
    f1: np.ndarray
    f2: np.ndarray

    def __post_init__(self):
        f1 = np.asarray(self.f1, dtype=float)
        f2 = np.asarray(self.f2, dtype=float)
        if f1.ndim != 2 or f1.shape != f2.shape:
            raise DimensionError(
                f"slices must be real matrices of identical shape, got "
                f"{f1.shape} and {f2.shape}")
        if not (np.all(np.isfinite(f1)) and np.all(np.isfinite(f2))):
            raise ValueError("tensor slices contain non-finite values")
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)

    @property
    def m(self) -> int:
        return self.f1.shape[0]

    @property
    def n(self) -> int:
        return self.f1.shape[1]

    def frobenius(self) -> float:
        return float(np.sqrt(np.linalg.norm(self.f1) ** 2 +
                             np.linalg.norm(self.f2) ** 2))


def assemble_c(t: Tensor2) -> np.ndarray:
    """(m+n) x (m+n) complex symmetric matrix S(F1) + i S(F2), with blocks
    [[0, F1 + iF2], [F1' + iF2', 0]]."""
    m, n = t.m, t.n
    out = np.zeros((m + n, m + n), dtype=np.complex128)
    top = t.f1 + 1j * t.f2
    out[:m, m:] = top
    out[m:, :m] = top.T
    return out


def tensor_spectral(t: Tensor2, opts=None) -> NormResult:
    """Spectral norm: the numerical radius of the assembled matrix."""
    return radius.numerical_radius(assemble_c(t), opts)


def tensor_nuclear(t: Tensor2, opts=None) -> NormResult:
    """Nuclear norm: half the dual numerical radius of the assembled matrix."""
    result = radius.dual_numerical_radius(assemble_c(t), opts)
    result.value = result.value / 2.0
    result.quantity = radius.Quantity.NUCLEAR_NORM
    return result


def tensor_spectral_sweep(t: Tensor2, eps: float = 1e-7) -> float:
    """Direct oracle: max over theta of the operator norm of
    cos(theta) F1 + sin(theta) F2."""
    lip = t.frobenius()
    if lip == 0.0:
        return 0.0

    def top_sigma(theta: float) -> float:
        slice_ = np.cos(theta) * t.f1 + np.sin(theta) * t.f2
        s = linalg.svd(slice_).singular_values
        return float(s[0]) if s.size else 0.0

    value, _ = oracle.max_over_circle(top_sigma, lip, eps)
    return value


def trilinear_eval(t: Tensor2, x, y, z) -> float:
    """The trilinear form sum_ijk t_ijk x_i y_j z_k."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    if x.shape != (2,) or y.shape != (t.m,) or z.shape != (t.n,):
        raise DimensionError(
            f"expected shapes (2,), ({t.m},), ({t.n},); got "
            f"{x.shape}, {y.shape}, {z.shape}")
    return float(x[0] * (y @ t.f1 @ z) + x[1] * (y @ t.f2 @ z))


def symmetrize_dual_witness(e, m: int, n: int) -> np.ndarray:
    """Project a dual witness onto the block form [[0, U], [U', 0]].

    Takes the block-anti-diagonal part G of E and returns (G + G') / 2;
    this never increases the numerical radius and preserves Re tr(C D^*)
    when C itself has the block form.
    """
    mat = linalg.as_square(e)
    if mat.shape[0] != m + n:
        raise DimensionError(f"expected dimension {m + n}, got {mat.shape[0]}")
    u = (mat[:m, m:] + mat[m:, :m].T) / 2.0
    out = np.zeros_like(mat)
    out[:m, m:] = u
    out[m:, :m] = u.T
    return out
