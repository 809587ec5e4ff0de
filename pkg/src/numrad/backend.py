"""Kernel selection: compiled Jacobi extension with pure-Python fallback.

The eigensolver inner loop dominates runtime (it backs the angle-sweep
oracle and every interior-point scaling step), so it lives in a Cython
extension.  If the extension was not built, the numpy implementation in
``_jacobi_py`` is used instead; both run the same algorithm.
"""

import numpy as np

from . import _jacobi_py

try:
    from . import _jacobi as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

_impl = _compiled if _compiled is not None else _jacobi_py

#: Off-diagonal Frobenius mass threshold, relative to ||A||_F.
JACOBI_TOL = 1e-13
#: Hard cap on the number of cyclic sweeps.
JACOBI_MAX_SWEEPS = 64


class EigenConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the off-diagonal threshold."""


def backend_name() -> str:
    return "compiled" if _impl is _compiled else "python"


def jacobi_eigh(a: np.ndarray, tol: float = JACOBI_TOL,
                max_sweeps: int = JACOBI_MAX_SWEEPS, kernel=None):
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Returns (values, vectors) with eigenvalues sorted descending and the
    matching unit eigenvectors as columns.  ``kernel`` overrides the
    module-level backend (used by the benchmark).
    """
    impl = kernel if kernel is not None else _impl
    work = np.array(a, dtype=np.complex128, order="C", copy=True)
    n = work.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    off, _sweeps = impl.jacobi_sweeps(work, vecs, tol, max_sweeps)
    fro = float(np.linalg.norm(np.asarray(a)))
    if fro > 0.0 and off > tol * fro:
        raise EigenConvergenceError(
            f"Jacobi did not converge for dim {n}: off-diagonal residual "
            f"{off:.3e} exceeds {tol * fro:.3e}"
        )
    values = np.real(np.diagonal(work)).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], vecs[:, order]
