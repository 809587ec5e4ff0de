"""Pure-Python (numpy) cyclic-Jacobi kernel for Hermitian eigendecomposition.

Fallback used when the compiled ``numrad._jacobi`` extension is not
available.  Identical algorithm: complex plane rotations applied in
cyclic-by-rows order; each rotation phase-reduces the pivot to a real
off-diagonal entry and annihilates it with a real Givens angle.
"""

import math

import numpy as np


def _offdiag(a: np.ndarray) -> float:
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.linalg.norm(a[mask]))


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int):
    """Run cyclic Jacobi sweeps in place on ``a``, accumulating rotations in ``v``.

    Returns (off, sweeps) like the compiled kernel.
    """
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return 0.0, 0

    thresh = tol * fro
    skip = thresh / (10.0 * n * n)

    off = _offdiag(a)
    sweep = 0
    while off > thresh and sweep < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                absa = abs(apq)
                if absa <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * absa)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                u = apq / absa
                uc = u * c
                us = u * s
                # A <- A J with J = [[u c, u s], [-s, c]] on columns (p, q)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = uc * col_p - s * col_q
                a[:, q] = us * col_p + c * col_q
                # A <- J^* A on rows (p, q)
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(uc) * row_p - s * row_q
                a[q, :] = np.conj(us) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                # V <- V J
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = uc * vp - s * vq
                v[:, q] = us * vp + c * vq
        off = _offdiag(a)
        sweep += 1
    return off, sweep
