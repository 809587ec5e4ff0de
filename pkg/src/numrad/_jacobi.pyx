# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic-Jacobi kernel for Hermitian eigendecomposition.

Same algorithm as ``_jacobi_py`` (complex plane rotations, cyclic-by-rows
ordering); this version carries the inner loops in C.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def jacobi_sweeps(cnp.complex128_t[:, ::1] a, cnp.complex128_t[:, ::1] v,
                  double tol, int max_sweeps):
    """Run cyclic Jacobi sweeps in place on ``a``, accumulating rotations in ``v``.

    Returns (off, sweeps): the final off-diagonal Frobenius mass and the
    number of sweeps performed.  ``a`` ends (numerically) diagonal when
    off <= tol * ||a||_F.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i, sweep
    cdef double fro, off, thresh, skip
    cdef double app, aqq, absa, tau, t, c, s
    cdef double complex apq, u, uc, us, x, y

    fro = 0.0
    for p in range(n):
        for q in range(n):
            x = a[p, q]
            fro += x.real * x.real + x.imag * x.imag
    fro = sqrt(fro)
    if fro == 0.0:
        return 0.0, 0

    thresh = tol * fro
    skip = thresh / (10.0 * n * n)

    off = _offdiag(a, n)
    sweep = 0
    while off > thresh and sweep < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                absa = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if absa <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * absa)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                u = apq / absa
                uc = u * c
                us = u * s
                # A <- A J  (columns p, q); J = [[u c, u s], [-s, c]]
                for i in range(n):
                    x = a[i, p]
                    y = a[i, q]
                    a[i, p] = uc * x - s * y
                    a[i, q] = us * x + c * y
                # A <- J^* A  (rows p, q)
                for i in range(n):
                    x = a[p, i]
                    y = a[q, i]
                    a[p, i] = uc.conjugate() * x - s * y
                    a[q, i] = us.conjugate() * x + c * y
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                # V <- V J
                for i in range(n):
                    x = v[i, p]
                    y = v[i, q]
                    v[i, p] = uc * x - s * y
                    v[i, q] = us * x + c * y
        off = _offdiag(a, n)
        sweep += 1
    return off, sweep


cdef double _offdiag(cnp.complex128_t[:, ::1] a, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef double complex x
    for i in range(n):
        for j in range(n):
            if i != j:
                x = a[i, j]
                acc += x.real * x.real + x.imag * x.imag
    return sqrt(acc)
