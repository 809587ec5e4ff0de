"""Dense complex linear algebra: Hermitian eigendecomposition, SVD through
the off-diagonal block embedding, matrix norms, and the complex-to-real
symmetric embedding.

Matrices are plain numpy arrays; helpers validate shape/finiteness and
Hermitian construction always symmetrizes its input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import jacobi_eigh

#: Default relative tolerance for eigen/SVD residual checks.
TOL_EIG = 1e-10


class DimensionError(ValueError):
    """Input matrix/vector shapes are inconsistent."""


def as_matrix(a) -> np.ndarray:
    """Validate and convert to a dense complex matrix (2-d, finite)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix contains non-finite entries")
    return m


def as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian_part(a) -> np.ndarray:
    """(A + A^*) / 2 with an exactly real diagonal."""
    m = as_square(a)
    h = (m + m.conj().T) / 2.0
    np.fill_diagonal(h, np.real(np.diagonal(h)))
    return h


@dataclass(frozen=True)
class EigDecomposition:
    values: np.ndarray   # real, descending
    vectors: np.ndarray  # unitary, columns aligned with values


@dataclass(frozen=True)
class SvdDecomposition:
    singular_values: np.ndarray  # nonnegative, descending
    left: np.ndarray             # orthonormal columns (m x r)
    right: np.ndarray            # orthonormal columns (n x r)


def herm_eig(a, tol: float = TOL_EIG) -> EigDecomposition:
    """Spectral decomposition of a Hermitian matrix (input is symmetrized)."""
    h = hermitian_part(a)
    values, vectors = jacobi_eigh(h)
    return EigDecomposition(values=values, vectors=vectors)


def s_embed(f) -> np.ndarray:
    """Hermitian block matrix [[0, F], [F^*, 0]] of size (m+n) x (m+n)."""
    m = as_matrix(f)
    rows, cols = m.shape
    out = np.zeros((rows + cols, rows + cols), dtype=np.complex128)
    out[:rows, rows:] = m
    out[rows:, :rows] = m.conj().T
    return out


def real_embed(a) -> np.ndarray:
    """Real symmetric 2n x 2n image [[X, -Y], [Y, X]] of Hermitian A = X + iY.

    PSD-ness is preserved both ways, and tr(AZ) = tr(A_hat Z_hat) / 2 for
    Hermitian pairs.
    """
    h = hermitian_part(a)
    x = h.real
    y = h.imag
    top = np.hstack([x, -y])
    bot = np.hstack([y, x])
    out = np.vstack([top, bot])
    return (out + out.T) / 2.0


def real_restrict(zhat: np.ndarray) -> np.ndarray:
    """Project a real symmetric 2n x 2n matrix onto the embedded image of
    Hermitian n x n matrices and map back to complex form.

    For Z_hat = real_embed(Z) this recovers Z exactly; for a general
    symmetric argument it returns the Hermitian matrix whose embedding is
    the orthogonal projection (PSD-ness is preserved).
    """
    dim = zhat.shape[0]
    if dim % 2 != 0 or zhat.shape[1] != dim:
        raise DimensionError(f"expected an even-dimensional square matrix, got {zhat.shape}")
    n = dim // 2
    p = zhat[:n, :n]
    q = zhat[:n, n:]
    r = zhat[n:, n:]
    x = (p + r) / 2.0
    y = (q.T - q) / 2.0
    return hermitian_part(x + 1j * y)


def svd(a, tol: float = TOL_EIG) -> SvdDecomposition:
    """Singular value decomposition via the eigendecomposition of s_embed(A).

    The nonzero eigenvalues of [[0, A], [A^*, 0]] come in +/- sigma pairs;
    an eigenvector (u; v) for +sigma carries the singular vector pair after
    rescaling by sqrt(2).
    """
    m = as_matrix(a)
    rows, cols = m.shape
    r = min(rows, cols)
    eig = herm_eig(s_embed(m))
    fro = float(np.linalg.norm(m))
    cut = tol * max(1.0, fro)

    sigmas = np.maximum(eig.values[:r], 0.0)
    lefts = []
    rights = []
    for i in range(r):
        if eig.values[i] <= cut:
            continue
        w = eig.vectors[:, i]
        u = w[:rows] * np.sqrt(2.0)
        v = w[rows:] * np.sqrt(2.0)
        lefts.append(u / np.linalg.norm(u))
        rights.append(v / np.linalg.norm(v))

    left = _complete_columns(lefts, rows, r)
    right = _complete_columns(rights, cols, r)
    return SvdDecomposition(singular_values=sigmas, left=left, right=right)


def _complete_columns(cols_list, dim: int, want: int) -> np.ndarray:
    """Extend a set of orthonormal columns to ``want`` orthonormal columns."""
    if len(cols_list) == want:
        return np.column_stack(cols_list) if cols_list else np.zeros((dim, 0))
    have = np.column_stack(cols_list) if cols_list else np.zeros((dim, 0), dtype=np.complex128)
    q, _ = np.linalg.qr(np.hstack([have, np.eye(dim, dtype=np.complex128)]))
    out = np.hstack([have, q[:, have.shape[1]:]])[:, :want]
    # QR may flip phases of the pre-supplied columns; keep the originals.
    out[:, :have.shape[1]] = have
    return out


def norms(a) -> tuple[float, float, float]:
    """(Frobenius, operator, nuclear) norms of a complex matrix."""
    m = as_matrix(a)
    fro = float(np.linalg.norm(m))
    s = svd(m).singular_values
    return fro, float(s[0]) if s.size else 0.0, float(np.sum(s))
