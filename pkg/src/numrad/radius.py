"""The four SDP formulations (numerical radius, its dual norm, operator and
nuclear norms), their strictly feasible starting points, and certificate
extraction.

All formulations are stated over complex Hermitian matrices and pushed
through the real symmetric embedding before reaching the solver; dual
variables are mapped back with the factor-2 trace correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import linalg, sdp
from .linalg import DimensionError, as_matrix, as_square, hermitian_part
from .oracle import sweep_radius


class Quantity(Enum):
    NUMERICAL_RADIUS = "r"
    DUAL_NUMERICAL_RADIUS = "rdual"
    OPERATOR_NORM = "opnorm"
    NUCLEAR_NORM = "nuclear"


class SolverNonConvergence(RuntimeError):
    def __init__(self, message: str, gap: float, iterations: int):
        super().__init__(message)
        self.gap = gap
        self.iterations = iterations


class NotFeasibleError(ValueError):
    """Certificate extraction input fails the PSD precondition."""


class InconsistentKernelError(ValueError):
    """Y has mass on the kernel of X beyond tolerance."""


@dataclass(frozen=True)
class RadiusWitness:
    """Certifies r(C) >= Re e^{-i theta} x^* C x for the unit vector x."""
    theta: float
    x: np.ndarray

    def attained(self, c: np.ndarray) -> float:
        return float(np.real(np.exp(-1j * self.theta) * (self.x.conj() @ c @ self.x)))


@dataclass(frozen=True)
class ExtremeDecomposition:
    """Terms (p_j, theta_j, v_j) with Y = sum p_j e^{i theta_j} v_j v_j^*."""
    terms: tuple  # of (weight, phase, unit vector)

    def reconstruct(self, dim: int) -> np.ndarray:
        y = np.zeros((dim, dim), dtype=np.complex128)
        for p, theta, v in self.terms:
            y += p * np.exp(1j * theta) * np.outer(v, v.conj())
        return y

    def total_weight(self) -> float:
        return float(sum(p for p, _, _ in self.terms))


@dataclass
class NormResult:
    quantity: Quantity
    value: float
    gap: float
    iterations: int
    certificate: object | None = None
    dual_witness: np.ndarray | None = None
    primal_matrix: np.ndarray | None = None
    method: str = "ipm"
    dual_residual: float = 0.0


def omega(c) -> int:
    """Integer scale ceil(||C||_F) + 1, inside [||C||_F + 1, ||C||_F + 2]."""
    m = as_square(c)
    return int(math.ceil(float(np.linalg.norm(m)))) + 1


def _herm_basis(n: int) -> list[np.ndarray]:
    """Real basis of the n x n Hermitian matrices: E_ii, then unnormalized
    real and imaginary off-diagonal elements."""
    basis = []
    for i in range(n):
        e = np.zeros((n, n), dtype=np.complex128)
        e[i, i] = 1.0
        basis.append(e)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j] = 1.0
            e[j, i] = 1.0
            basis.append(e)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j] = 1.0j
            e[j, i] = -1.0j
            basis.append(e)
    return basis


def _embed_problem(x0_c, basis_c, cost, start) -> sdp.SdpProblem:
    return sdp.SdpProblem(
        cone_dim=2 * x0_c.shape[0],
        x0=linalg.real_embed(x0_c),
        basis=[linalg.real_embed(b) for b in basis_c],
        cost=np.asarray(cost, dtype=float),
        start=np.asarray(start, dtype=float),
    )


def _run(problem: sdp.SdpProblem, opts: sdp.SolverOptions | None,
         quantity: Quantity) -> sdp.SdpSolution:
    sol = sdp.solve(problem, opts)
    if sol.status is not sdp.SdpStatus.OPTIMAL:
        raise SolverNonConvergence(
            f"{quantity.value} solve did not converge: status {sol.status.value}, "
            f"gap {sol.gap:.3e} after {sol.iterations} iterations",
            gap=sol.gap, iterations=sol.iterations)
    return sol


def _dual_complex(sol: sdp.SdpSolution) -> np.ndarray:
    """Map the embedded real dual variable back to a complex Hermitian PSD
    matrix for the original formulation (factor 2 from the trace bridge)."""
    return 2.0 * linalg.real_restrict(sol.z_star)


def _zero_result(quantity: Quantity) -> NormResult:
    return NormResult(quantity=quantity, value=0.0, gap=0.0, iterations=0)


def numerical_radius(c, opts: sdp.SolverOptions | None = None,
                     witness: bool = False) -> NormResult:
    """r(C) as the minimal c with [[cI+Z, C], [C^*, cI-Z]] PSD."""
    m = as_square(c)
    n = m.shape[0]
    if np.linalg.norm(m) == 0.0:
        return _zero_result(Quantity.NUMERICAL_RADIUS)
    om = omega(m)
    basis_c = [np.eye(2 * n, dtype=np.complex128)]
    for h in _herm_basis(n):
        blk = np.zeros((2 * n, 2 * n), dtype=np.complex128)
        blk[:n, :n] = h
        blk[n:, n:] = -h
        basis_c.append(blk)
    k = len(basis_c)
    cost = np.zeros(k)
    cost[0] = 1.0
    start = np.zeros(k)
    start[0] = 3.0 * om
    problem = _embed_problem(linalg.s_embed(m), basis_c, cost, start)
    sol = _run(problem, opts, Quantity.NUMERICAL_RADIUS)

    z_c = _dual_complex(sol)     # [[X, Y], [Y^*, X]] with tr X = 1/2
    y = z_c[:n, n:]
    result = NormResult(
        quantity=Quantity.NUMERICAL_RADIUS,
        value=max(sol.primal_value, 0.0),
        gap=sol.gap,
        iterations=sol.iterations,
        dual_witness=-2.0 * y,   # r-dual unit matrix with Re tr(C F^*) = r(C)
        dual_residual=sol.dual_residual,
    )
    if witness:
        result.certificate = radius_witness(m)
    return result


def dual_numerical_radius(c, opts: sdp.SolverOptions | None = None,
                          certificate: bool = False) -> NormResult:
    """r_dual(C) as min tr X with [[X, C], [C^*, X]] PSD."""
    m = as_square(c)
    n = m.shape[0]
    if np.linalg.norm(m) == 0.0:
        return _zero_result(Quantity.DUAL_NUMERICAL_RADIUS)
    om = omega(m)
    herm = _herm_basis(n)
    basis_c = []
    for h in herm:
        blk = np.zeros((2 * n, 2 * n), dtype=np.complex128)
        blk[:n, :n] = h
        blk[n:, n:] = h
        basis_c.append(blk)
    cost = np.array([float(np.trace(h).real) for h in herm])
    start = np.zeros(len(herm))
    start[:n] = 2.0 * om   # X = 2 omega I
    problem = _embed_problem(linalg.s_embed(m), basis_c, cost, start)
    sol = _run(problem, opts, Quantity.DUAL_NUMERICAL_RADIUS)

    x_star = np.zeros((n, n), dtype=np.complex128)
    for coeff, h in zip(sol.s_star, herm):
        x_star += coeff * h
    x_star = hermitian_part(x_star)

    z_c = _dual_complex(sol)     # [[P, G], [G^*, Q]] with P + Q = I
    e = -2.0 * z_c[:n, n:]       # r(E) <= 1 and Re tr(C E^*) = r_dual(C)
    result = NormResult(
        quantity=Quantity.DUAL_NUMERICAL_RADIUS,
        value=max(sol.primal_value, 0.0),
        gap=sol.gap,
        iterations=sol.iterations,
        dual_witness=e,
        primal_matrix=x_star,
        dual_residual=sol.dual_residual,
    )
    if certificate:
        result.certificate = extreme_decomposition(x_star, m)
    return result


def op_norm_sdp(c, opts: sdp.SolverOptions | None = None) -> NormResult:
    """||C|| as min a with a*I + [[0, C], [C^*, 0]] PSD (rectangular allowed)."""
    m = as_matrix(c)
    if np.linalg.norm(m) == 0.0:
        return _zero_result(Quantity.OPERATOR_NORM)
    om = int(math.ceil(float(np.linalg.norm(m)))) + 1
    dim = sum(m.shape)
    problem = _embed_problem(
        linalg.s_embed(m),
        [np.eye(dim, dtype=np.complex128)],
        [1.0],
        [2.0 * om],
    )
    sol = _run(problem, opts, Quantity.OPERATOR_NORM)
    return NormResult(
        quantity=Quantity.OPERATOR_NORM,
        value=max(sol.primal_value, 0.0),
        gap=sol.gap,
        iterations=sol.iterations,
        dual_residual=sol.dual_residual,
    )


def nuclear_norm_sdp(c, opts: sdp.SolverOptions | None = None) -> NormResult:
    """||C||_nuclear as min tr X over PSD [[X, C], [C^*, Y]] with tr X = tr Y.

    The trace-equality constraint is kept by restricting the variable basis
    to the slice {tr X = tr Y}.
    """
    m = as_matrix(c)
    rows, cols = m.shape
    if np.linalg.norm(m) == 0.0:
        return _zero_result(Quantity.NUCLEAR_NORM)
    om = int(math.ceil(float(np.linalg.norm(m)))) + 1
    dim = rows + cols

    def block(top: np.ndarray | None, bottom: np.ndarray | None) -> np.ndarray:
        b = np.zeros((dim, dim), dtype=np.complex128)
        if top is not None:
            b[:rows, :rows] = top
        if bottom is not None:
            b[rows:, rows:] = bottom
        return b

    basis_c = []
    cost = []
    start = []
    t = 2.0 * om * max(rows, cols)

    # Shared trace direction: raises tr X and tr Y together.
    e_x = np.zeros((rows, rows), dtype=np.complex128)
    e_x[0, 0] = 1.0
    e_y = np.zeros((cols, cols), dtype=np.complex128)
    e_y[0, 0] = 1.0
    basis_c.append(block(e_x, e_y))
    cost.append(1.0)
    start.append(t)
    # Trace-free diagonal directions within each block.
    for i in range(1, rows):
        d = np.zeros((rows, rows), dtype=np.complex128)
        d[i, i] = 1.0
        d[0, 0] = -1.0
        basis_c.append(block(d, None))
        cost.append(0.0)
        start.append(t / rows)
    for j in range(1, cols):
        d = np.zeros((cols, cols), dtype=np.complex128)
        d[j, j] = 1.0
        d[0, 0] = -1.0
        basis_c.append(block(None, d))
        cost.append(0.0)
        start.append(t / cols)
    # Off-diagonal Hermitian directions of each block.
    for h in _herm_basis(rows)[rows:]:
        basis_c.append(block(h, None))
        cost.append(0.0)
        start.append(0.0)
    for h in _herm_basis(cols)[cols:]:
        basis_c.append(block(None, h))
        cost.append(0.0)
        start.append(0.0)

    problem = _embed_problem(linalg.s_embed(m), basis_c, cost, start)
    sol = _run(problem, opts, Quantity.NUCLEAR_NORM)
    return NormResult(
        quantity=Quantity.NUCLEAR_NORM,
        value=max(sol.primal_value, 0.0),
        gap=sol.gap,
        iterations=sol.iterations,
        dual_residual=sol.dual_residual,
    )


def radius_witness(c, eps: float = 1e-9) -> RadiusWitness:
    """Witness (theta, x) from the angle sweep: x is the top eigenvector of
    cos(theta) A + sin(theta) B for C = A + iB."""
    m = as_square(c)
    if np.linalg.norm(m) == 0.0:
        raise ValueError("radius witness undefined for the zero matrix")
    _, theta = sweep_radius(m, eps)
    a = hermitian_part((m + m.conj().T) / 2.0)
    b = hermitian_part((m - m.conj().T) / 2.0j)
    eig = linalg.herm_eig(math.cos(theta) * a + math.sin(theta) * b)
    x = eig.vectors[:, 0]
    x = x / np.linalg.norm(x)
    return RadiusWitness(theta=float(theta % (2.0 * math.pi)), x=x)


def _unitary_eig(u: np.ndarray, cluster_tol: float = 1e-7):
    """Spectral decomposition of a unitary matrix via its commuting Hermitian
    and skew parts.  Returns (phases, orthonormal eigenvector columns)."""
    n = u.shape[0]
    re = hermitian_part((u + u.conj().T) / 2.0)
    im = hermitian_part((u - u.conj().T) / 2.0j)
    eig = linalg.herm_eig(re)
    q = eig.vectors.copy()
    # Within eigenvalue clusters of the real part, diagonalize the imaginary part.
    i = 0
    while i < n:
        j = i + 1
        while j < n and abs(eig.values[j] - eig.values[i]) <= cluster_tol:
            j += 1
        if j - i > 1:
            qc = q[:, i:j]
            sub = qc.conj().T @ im @ qc
            sub_eig = linalg.herm_eig(sub)
            q[:, i:j] = qc @ sub_eig.vectors
        i = j
    phases = np.angle(np.einsum("ij,ik,kj->j", q.conj(), u, q))
    return phases % (2.0 * math.pi), q


def extreme_decomposition(x, y, psd_tol: float = 1e-8) -> ExtremeDecomposition:
    """Decompose Y = sum p_j e^{i theta_j} v_j v_j^* with sum p_j <= tr X,
    given that [[X, Y], [Y^*, X]] is PSD.

    Follows the constructive route: scale Y to a contraction by X^{-1/2},
    split it into the mean of two unitaries, and spectral-decompose each.
    """
    x = hermitian_part(x)
    y = as_square(y)
    n = x.shape[0]
    if y.shape[0] != n:
        raise DimensionError("X and Y must have the same dimension")

    block = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    block[:n, :n] = x
    block[n:, n:] = x
    block[:n, n:] = y
    block[n:, :n] = y.conj().T
    scale = max(1.0, float(np.linalg.norm(block)))
    lam_min = linalg.herm_eig(block).values[-1]
    if lam_min < -psd_tol * scale:
        raise NotFeasibleError(
            f"[[X, Y], [Y^*, X]] is not PSD: lambda_min = {lam_min:.3e}")
    trx = float(np.trace(x).real)
    if trx <= 0.0:
        raise NotFeasibleError("tr X must be positive")

    eig = linalg.herm_eig(x)
    d = np.maximum(eig.values, 0.0)
    zero_thresh = 1e-12 * max(d[0], 0.0)
    rank = int(np.sum(d > zero_thresh))
    u = eig.vectors
    if rank < n:
        kernel = u[:, rank:]
        mass = max(float(np.linalg.norm(y @ kernel)),
                   float(np.linalg.norm(kernel.conj().T @ y)))
        if mass > 1e-8 * max(1.0, float(np.linalg.norm(y))):
            raise InconsistentKernelError(
                f"Y has mass {mass:.3e} on the kernel of X")
    ur = u[:, :rank]
    dr = d[:rank]
    root = np.sqrt(dr)
    y_r = ur.conj().T @ y @ ur
    contraction = (y_r / root[:, None]) / root[None, :]

    dec = linalg.svd(contraction)
    cvals = np.minimum(dec.singular_values, 1.0)
    svals = np.sqrt(np.maximum(0.0, 1.0 - cvals ** 2))

    terms = []
    for coeffs in (cvals + 1j * svals, cvals - 1j * svals):
        unitary = (dec.left * coeffs[None, :]) @ dec.right.conj().T
        phases, q = _unitary_eig(unitary)
        for j in range(rank):
            w = root * q[:, j]
            weight = 0.5 * float(np.vdot(w, w).real)
            if weight < 1e-12 * trx:
                continue
            vec = ur @ w
            terms.append((weight, float(phases[j]), vec / np.linalg.norm(vec)))
    return ExtremeDecomposition(terms=tuple(terms))
