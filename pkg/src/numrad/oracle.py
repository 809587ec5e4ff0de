"""Solver-independent reference computations: the angle-sweep value of the
numerical radius, the disk maximum of eigenvalue pencils, sampled lower
bounds for the dual norm, and a cross-check report.

The sweep maximizes g(theta) = lambda_max(cos(theta) A + sin(theta) B) on a
coarse circular grid and refines the best few brackets by golden section;
g is a maximum of eigenvalue branches, so refinement runs on the top three
brackets and takes the overall max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .linalg import as_square, hermitian_part

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Hard cap on the number of coarse grid points.  The Lipschitz-certified
#: count 2*pi*L/eps is impractical for tight eps; the golden refinement
#: supplies the accuracy on smooth eigenvalue branches.
GRID_CAP = 4096


def _golden_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Golden-section maximization on [a, b] down to interval width tol."""
    h = b - a
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc = f(c)
    fd = f(d)
    while h > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INV_PHI * h
            fd = f(d)
    theta = c if fc > fd else d
    return (fc if fc > fd else fd), theta


def max_over_circle(f, lipschitz: float, eps: float) -> tuple[float, float]:
    """Maximize a 2*pi-periodic function over the circle.

    Coarse grid of N = max(256, min(ceil(2*pi*L/eps), GRID_CAP)) points,
    then golden-section refinement to width eps/10 on the top three local
    maxima brackets.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    n = max(256, min(int(math.ceil(2.0 * math.pi * lipschitz / eps)), GRID_CAP))
    thetas = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    values = np.array([f(t) for t in thetas])

    prev = np.roll(values, 1)
    nxt = np.roll(values, -1)
    local = np.where((values >= prev) & (values >= nxt))[0]
    if local.size == 0:
        local = np.array([int(np.argmax(values))])
    top = local[np.argsort(-values[local])][:3]

    best_val = float(values[top[0]])
    best_theta = float(thetas[top[0]])
    step = 2.0 * math.pi / n
    for idx in top:
        a = thetas[idx] - step
        b = thetas[idx] + step
        val, theta = _golden_max(f, a, b, eps / 10.0)
        if val > best_val:
            best_val = float(val)
            best_theta = float(theta)
    return best_val, best_theta % (2.0 * math.pi)


def sweep_radius(c, eps: float = 1e-8) -> tuple[float, float]:
    """(value, theta_star) with value within eps of
    max_theta lambda_max(cos(theta) A + sin(theta) B) for C = A + iB."""
    m = as_square(c)
    a = hermitian_part((m + m.conj().T) / 2.0)
    b = hermitian_part((m - m.conj().T) / 2.0j)
    lip = math.hypot(float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    if lip == 0.0:
        return 0.0, 0.0

    def g(theta: float) -> float:
        pencil = math.cos(theta) * a + math.sin(theta) * b
        return float(linalg.herm_eig(pencil).values[0])

    return max_over_circle(g, lip, eps)


def disk_max(a, b, eps: float = 1e-8) -> float:
    """max{lambda_max(x A + y B) : x^2 + y^2 <= 1} for Hermitian A, B.

    The zero combination is feasible, so the result is never below 0; the
    circle maximum itself is always >= 0 because g(theta) + g(theta + pi)
    = lambda_max(M) - lambda_min(M) >= 0.
    """
    am = hermitian_part(a)
    bm = hermitian_part(b)
    if am.shape != bm.shape:
        raise linalg.DimensionError("A and B must have the same dimension")
    value, _ = sweep_radius(am + 1j * bm, eps)
    return max(value, 0.0)


def dual_lower_bound(c, trials: int = 64, seed: int = 0,
                     eps: float = 1e-8) -> float:
    """Sampled lower bound for the dual numerical radius.

    Maximizes Re tr(F^* C) over random Gaussian F normalized to the sweep
    value of their numerical radius, seeded with C itself and the extreme
    point from the radius witness.  Deterministic for a given seed.
    """
    from . import radius as _radius

    m = as_square(c)
    n = m.shape[0]
    if np.linalg.norm(m) == 0.0:
        return 0.0
    if trials < 1:
        raise ValueError("trials must be >= 1")

    best = 0.0

    def consider(f: np.ndarray) -> None:
        nonlocal best
        r_f, _ = sweep_radius(f, eps)
        if r_f <= 0.0:
            return
        # Normalize by an upper estimate so the bound stays one-sided.
        val = abs(float(np.real(np.trace(f.conj().T @ m)))) / (r_f + eps)
        best = max(best, val)

    consider(m)
    wit = _radius.radius_witness(m, eps)
    z = complex(wit.x.conj() @ m @ wit.x)
    consider(np.exp(1j * np.angle(z)) * np.outer(wit.x, wit.x.conj()))

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        consider(f)
    return best


@dataclass
class CrosscheckReport:
    dim: int
    values: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)   # name -> (passed, discrepancy, tol)
    errors: dict = field(default_factory=dict)   # name -> message

    @property
    def passed(self) -> bool:
        return not self.errors and all(ok for ok, _, _ in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "values": self.values,
            "checks": {name: {"passed": ok, "discrepancy": disc, "tol": tol}
                       for name, (ok, disc, tol) in self.checks.items()},
            "errors": dict(self.errors),
            "passed": self.passed,
        }


def crosscheck(c, trials: int = 64, seed: int = 0,
               opts=None) -> CrosscheckReport:
    """Tie every quantity to an independent estimate and report pass/fail.

    Component failures are recorded and do not abort the remaining checks.
    """
    from . import radius as _radius

    m = as_square(c)
    report = CrosscheckReport(dim=m.shape[0])
    vals = report.values

    def attempt(name, fn):
        try:
            vals[name] = fn()
        except Exception as exc:  # aggregate, keep going
            report.errors[name] = f"{type(exc).__name__}: {exc}"

    attempt("r_sdp", lambda: _radius.numerical_radius(m, opts).value)
    attempt("r_sweep", lambda: sweep_radius(m, 1e-7)[0])
    attempt("rdual_sdp", lambda: _radius.dual_numerical_radius(m, opts).value)
    attempt("rdual_lower", lambda: dual_lower_bound(m, trials, seed))
    attempt("opnorm_sdp", lambda: _radius.op_norm_sdp(m, opts).value)
    attempt("nuclear_sdp", lambda: _radius.nuclear_norm_sdp(m, opts).value)

    def svd_norms():
        _, op, nuc = linalg.norms(m)
        vals["opnorm_svd"] = op
        vals["nuclear_svd"] = nuc
        return op
    attempt("opnorm_svd", svd_norms)

    tol = 1e-6

    def check(name, lhs_key, rhs_key, kind):
        if lhs_key not in vals or rhs_key not in vals:
            return
        lhs, rhs = vals[lhs_key], vals[rhs_key]
        if kind == "agree":
            disc = abs(lhs - rhs)
            report.checks[name] = (disc <= tol * max(1.0, abs(rhs)), disc, tol)
        elif kind == "lower":
            disc = lhs - rhs
            report.checks[name] = (disc <= tol, disc, tol)

    check("r_agreement", "r_sdp", "r_sweep", "agree")
    check("rdual_lower_bound", "rdual_lower", "rdual_sdp", "lower")
    check("opnorm_agreement", "opnorm_sdp", "opnorm_svd", "agree")
    check("nuclear_agreement", "nuclear_sdp", "nuclear_svd", "agree")

    if "r_sdp" in vals and "opnorm_svd" in vals:
        r, op = vals["r_sdp"], vals["opnorm_svd"]
        slack = min(r - op / 2.0, op - r)
        report.checks["sandwich_r"] = (slack >= -tol, slack, tol)
    if "rdual_sdp" in vals and "nuclear_svd" in vals:
        rd, nuc = vals["rdual_sdp"], vals["nuclear_svd"]
        slack = min(rd - nuc, 2.0 * nuc - rd)
        report.checks["sandwich_rdual"] = (slack >= -tol, slack, tol)
    return report
