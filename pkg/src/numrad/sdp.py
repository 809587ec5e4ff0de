"""Primal-dual path-following solver for standard-form semidefinite programs
over the real symmetric PSD cone.

Problem:   min  c's   s.t.  S(s) = X0 + sum_i s_i X_i  PSD
Dual:      max -tr(X0 Z)  s.t.  tr(X_i Z) = c_i,  Z PSD

The solver uses Nesterov-Todd scaling (a symmetrized Newton direction) with
Mehrotra-style adaptive centering.  Newton systems are solved by dense
Cholesky with escalating diagonal regularization.  Everything is
deterministic: identical inputs give identical iterate sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.linalg import solve_triangular

from .backend import jacobi_eigh


class SdpStatus(Enum):
    OPTIMAL = "Optimal"
    ITERATION_CAP = "IterationCap"
    NUMERICAL_FAILURE = "NumericalFailure"


class MissingStartError(RuntimeError):
    """No strictly feasible start supplied and phase-I failed to find one."""


@dataclass(frozen=True)
class SolverOptions:
    eps_gap: float = 1e-9
    eps_feas: float = 1e-8
    max_iter: int = 500


@dataclass
class SdpProblem:
    """Standard-form SDP data: X0 + sum s_i X_i over the PSD cone."""
    cone_dim: int
    x0: np.ndarray
    basis: list        # k real symmetric cone_dim x cone_dim matrices
    cost: np.ndarray   # length k
    start: np.ndarray | None = None

    def __post_init__(self):
        n = self.cone_dim
        self.x0 = np.asarray(self.x0, dtype=float).reshape(n, n)
        self.basis = [np.asarray(b, dtype=float).reshape(n, n) for b in self.basis]
        self.cost = np.asarray(self.cost, dtype=float).reshape(len(self.basis))
        if self.start is not None:
            self.start = np.asarray(self.start, dtype=float).reshape(len(self.basis))

    @property
    def k(self) -> int:
        return len(self.basis)

    def slack(self, s: np.ndarray) -> np.ndarray:
        mat = self.x0 + np.tensordot(np.asarray(s, dtype=float),
                                     np.stack(self.basis), axes=(0, 0))
        return (mat + mat.T) / 2.0

    def gram(self) -> np.ndarray:
        stack = np.stack(self.basis).reshape(self.k, -1)
        return stack @ stack.T

    def validate(self, tol: float = 1e-10) -> None:
        g = self.gram()
        w = np.linalg.eigvalsh(g)
        if w.min() <= tol * max(1.0, w.max()):
            raise ValueError("basis matrices are not linearly independent "
                             f"(Gram eigenvalue {w.min():.3e})")


@dataclass
class SdpSolution:
    s_star: np.ndarray
    z_star: np.ndarray
    primal_value: float
    dual_value: float
    gap: float
    iterations: int
    status: SdpStatus
    dual_residual: float
    trace: list = field(default_factory=list)  # per-iteration (primal, dual, gap, rd)


def check_slater(problem: SdpProblem, s: np.ndarray) -> float:
    """lambda_min of the slack at s; positive means strictly feasible."""
    values, _ = jacobi_eigh(problem.slack(s))
    return float(values[-1])


def _chol(mat: np.ndarray) -> np.ndarray | None:
    try:
        return np.linalg.cholesky(mat)
    except np.linalg.LinAlgError:
        return None


def _chol_regularized(mat: np.ndarray):
    """Cholesky with diagonal regularization 1e-12 escalating x10 to 1e-6."""
    l = _chol(mat)
    if l is not None:
        return l
    reg = 1e-12
    eye = np.eye(mat.shape[0])
    while reg <= 1e-6:
        l = _chol(mat + reg * eye)
        if l is not None:
            return l
        reg *= 10.0
    return None


def _max_step(chol_l: np.ndarray, delta: np.ndarray) -> float:
    """Largest alpha with M + alpha*Delta staying PSD, M = L L'."""
    k = solve_triangular(chol_l, delta, lower=True)
    k = solve_triangular(chol_l, k.T, lower=True).T
    values, _ = jacobi_eigh((k + k.T) / 2.0)
    lam_min = values[-1]
    if lam_min >= -1e-16:
        return np.inf
    return 1.0 / (-lam_min)


def _project_dual_start(problem: SdpProblem, gram: np.ndarray) -> np.ndarray | None:
    """Identity-scaled dual start projected onto the equality constraints.

    Z = beta*I + sum gamma_j X_j with tr(X_i Z) = c_i; returned only if
    positive definite, otherwise the caller falls back to an infeasible
    identity start.
    """
    n = problem.cone_dim
    traces = np.array([np.trace(b) for b in problem.basis])
    beta0 = (1.0 + float(np.linalg.norm(problem.cost))) / n
    stack = np.stack(problem.basis)
    for beta in (beta0, 10.0 * beta0, 100.0 * beta0):
        try:
            gamma = np.linalg.solve(gram, problem.cost - beta * traces)
        except np.linalg.LinAlgError:
            return None
        z = beta * np.eye(n) + np.tensordot(gamma, stack, axes=(0, 0))
        z = (z + z.T) / 2.0
        if _chol(z) is not None:
            return z
    return None


def _phase_one(problem: SdpProblem, opts: SolverOptions) -> np.ndarray:
    """Big-M feasibility fallback: min t s.t. X0 + sum s_i X_i + t I PSD."""
    n = problem.cone_dim
    aug = SdpProblem(
        cone_dim=n,
        x0=problem.x0,
        basis=list(problem.basis) + [np.eye(n)],
        cost=np.concatenate([np.zeros(problem.k), [1.0]]),
        start=np.concatenate([np.zeros(problem.k),
                              [2.0 * float(np.linalg.norm(problem.x0)) + 1.0]]),
    )
    sol = solve(aug, SolverOptions(eps_gap=1e-7, eps_feas=1e-6,
                                   max_iter=opts.max_iter))
    if sol.status is SdpStatus.NUMERICAL_FAILURE or sol.s_star[-1] >= 0.0:
        raise MissingStartError("no strictly feasible start found by phase-I")
    return sol.s_star[:-1]


def solve(problem: SdpProblem, opts: SolverOptions | None = None) -> SdpSolution:
    """Run the path-following iteration to the duality-gap contract.

    Requires a strictly feasible primal start (supplied on the problem, or
    found by the guarded phase-I fallback).  Status OPTIMAL means relative
    gap <= eps_gap and dual feasibility residual <= eps_feas * (1 + ||c||).
    """
    opts = opts or SolverOptions()
    n = problem.cone_dim
    k = problem.k
    stack = np.stack(problem.basis)
    flat = stack.reshape(k, -1)
    c = problem.cost
    c_scale = 1.0 + float(np.linalg.norm(c))
    gram = flat @ flat.T

    if problem.start is not None:
        s = problem.start.astype(float).copy()
    else:
        s = _phase_one(problem, opts)
    slack = problem.slack(s)
    l_s = _chol(slack)
    if l_s is None:
        raise MissingStartError("supplied start is not strictly feasible")

    z = _project_dual_start(problem, gram)
    if z is None:
        z = max(1.0, float(np.linalg.norm(c))) * np.eye(n)

    status = SdpStatus.ITERATION_CAP
    trace = []
    it = 0
    frac = 0.98  # fraction-to-boundary

    for it in range(1, opts.max_iter + 1):
        l_z = _chol(z)
        if l_z is None:
            status = SdpStatus.NUMERICAL_FAILURE
            break

        primal = float(c @ s)
        dual = -float(np.vdot(problem.x0, z).real)
        gap = primal - dual
        rd = c - flat @ z.reshape(-1)
        rd_norm = float(np.linalg.norm(rd))
        trace.append((primal, dual, gap, rd_norm))

        if gap <= opts.eps_gap * (1.0 + abs(primal)) and \
                gap >= -opts.eps_feas * (1.0 + abs(primal)) and \
                rd_norm <= opts.eps_feas * c_scale:
            status = SdpStatus.OPTIMAL
            it -= 1
            break

        # Nesterov-Todd scaling from Cholesky factors of S and Z:
        # T = L_s' Z L_s = V diag(lam^2) V', H = diag(lam)^(1/2) V' L_s^{-1},
        # then W^{-1} = H'H satisfies W^{-1} S W^{-1} = Z.
        t_mat = l_s.T @ z @ l_s
        lam2, v = jacobi_eigh((t_mat + t_mat.T) / 2.0)
        lam2 = np.maximum(lam2.real, 1e-300)
        l_s_inv = solve_triangular(l_s, np.eye(n), lower=True)
        h = (lam2 ** 0.25)[:, None] * (v.T.real @ l_s_inv)

        s_inv = l_s_inv.T @ l_s_inv
        q = flat @ s_inv.reshape(-1)

        scaled = np.matmul(np.matmul(h[None], stack), h.T[None])
        m_flat = scaled.reshape(k, -1)
        schur = m_flat @ m_flat.T
        schur = (schur + schur.T) / 2.0
        l_m = _chol_regularized(schur)
        if l_m is None:
            status = SdpStatus.NUMERICAL_FAILURE
            break

        w_inv = h.T @ h
        mu = float(np.vdot(slack, z).real) / n

        def newton(mu_target):
            rhs = mu_target * q - c
            y = solve_triangular(l_m, rhs, lower=True)
            ds = solve_triangular(l_m.T, y, lower=False)
            d_slack = np.tensordot(ds, stack, axes=(0, 0))
            d_slack = (d_slack + d_slack.T) / 2.0
            dz = mu_target * s_inv - z - w_inv @ d_slack @ w_inv
            dz = (dz + dz.T) / 2.0
            return ds, d_slack, dz

        # Predictor: affine direction fixes sigma.
        _, d_slack_a, dz_a = newton(0.0)
        ap = min(1.0, _max_step(l_s, d_slack_a))
        ad = min(1.0, _max_step(l_z, dz_a))
        gap_aff = float(np.vdot(slack + ap * d_slack_a, z + ad * dz_a).real)
        gap_c = float(np.vdot(slack, z).real)
        sigma = (max(gap_aff, 0.0) / max(gap_c, 1e-300)) ** 3
        sigma = min(max(sigma, 1e-10), 1.0)

        ds, d_slack, dz = newton(sigma * mu)
        ap = min(1.0, frac * _max_step(l_s, d_slack))
        ad = min(1.0, frac * _max_step(l_z, dz))

        # Keep iterates strictly interior under roundoff.
        for _ in range(30):
            s_new = s + ap * ds
            slack_new = problem.slack(s_new)
            l_new = _chol(slack_new)
            if l_new is not None:
                break
            ap *= 0.8
        else:
            status = SdpStatus.NUMERICAL_FAILURE
            break
        for _ in range(30):
            z_new = z + ad * dz
            z_new = (z_new + z_new.T) / 2.0
            if _chol(z_new) is not None:
                break
            ad *= 0.8
        else:
            status = SdpStatus.NUMERICAL_FAILURE
            break

        s, slack, l_s, z = s_new, slack_new, l_new, z_new

    primal = float(c @ s)
    dual = -float(np.vdot(problem.x0, z).real)
    rd_norm = float(np.linalg.norm(c - flat @ z.reshape(-1)))
    return SdpSolution(
        s_star=s,
        z_star=(z + z.T) / 2.0,
        primal_value=primal,
        dual_value=dual,
        gap=primal - dual,
        iterations=it,
        status=status,
        dual_residual=rd_norm,
        trace=trace,
    )
