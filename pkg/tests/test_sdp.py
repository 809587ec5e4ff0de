import numpy as np
import pytest

from numrad import sdp


def scalar_lp():
    # min s subject to -1 + s >= 0 (as a 1x1 SDP); optimum s = 1.
    return sdp.SdpProblem(cone_dim=1, x0=[[-1.0]], basis=[[[1.0]]],
                          cost=[1.0], start=[2.0])


def lambda_max_problem(h, bound):
    # min a subject to a*I - H >= 0; optimum a = lambda_max(H).
    n = h.shape[0]
    return sdp.SdpProblem(cone_dim=n, x0=-h, basis=[np.eye(n)],
                          cost=[1.0], start=[bound])


def test_scalar_lp_solves_exactly():
    sol = sdp.solve(scalar_lp())
    assert sol.status is sdp.SdpStatus.OPTIMAL
    assert sol.primal_value == pytest.approx(1.0, abs=1e-8)
    assert sol.dual_value == pytest.approx(1.0, abs=1e-8)
    assert sol.gap <= 1e-8


def test_lambda_max_problem():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((6, 6))
    h = (a + a.T) / 2.0
    problem = lambda_max_problem(h, 2.0 * np.linalg.norm(h))
    sol = sdp.solve(problem)
    assert sol.status is sdp.SdpStatus.OPTIMAL
    lam = np.max(np.linalg.eigvalsh(h))
    assert sol.primal_value == pytest.approx(lam, abs=1e-7)


def test_diagonal_weighted_problem():
    # min 2u + v subject to diag(u - 1, v - 2) >= 0; optimum (1, 2), value 4.
    x0 = np.diag([-1.0, -2.0])
    b1 = np.diag([1.0, 0.0])
    b2 = np.diag([0.0, 1.0])
    problem = sdp.SdpProblem(cone_dim=2, x0=x0, basis=[b1, b2],
                             cost=[2.0, 1.0], start=[5.0, 5.0])
    sol = sdp.solve(problem)
    assert sol.status is sdp.SdpStatus.OPTIMAL
    assert sol.primal_value == pytest.approx(4.0, abs=1e-7)
    assert np.allclose(sol.s_star, [1.0, 2.0], atol=1e-6)


def test_dual_point_is_feasible():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 4))
    h = (a + a.T) / 2.0
    problem = lambda_max_problem(h, 2.0 * np.linalg.norm(h) + 1.0)
    sol = sdp.solve(problem)
    # Z >= 0 and tr(X_i Z) = c_i.
    assert np.min(np.linalg.eigvalsh(sol.z_star)) >= -1e-9
    assert np.trace(sol.z_star) == pytest.approx(1.0, abs=1e-7)
    # Weak duality holds at the returned pair.
    assert sol.dual_value <= sol.primal_value + 1e-8


def test_iteration_cap_status():
    sol = sdp.solve(scalar_lp(), sdp.SolverOptions(max_iter=1))
    assert sol.status is sdp.SdpStatus.ITERATION_CAP
    assert sol.iterations <= 1


def test_trace_records_every_iteration():
    sol = sdp.solve(scalar_lp())
    assert len(sol.trace) >= sol.iterations
    gaps = [entry[2] for entry in sol.trace]
    assert gaps[-1] <= 1e-8
    residuals = [entry[3] for entry in sol.trace]
    assert residuals[-1] <= 1e-8


def test_check_slater_sign():
    problem = scalar_lp()
    assert sdp.check_slater(problem, np.array([2.0])) > 0.0
    assert sdp.check_slater(problem, np.array([0.5])) < 0.0


def test_validate_rejects_dependent_basis():
    problem = sdp.SdpProblem(cone_dim=2, x0=np.zeros((2, 2)),
                             basis=[np.eye(2), 2.0 * np.eye(2)],
                             cost=[1.0, 1.0])
    with pytest.raises(ValueError):
        problem.validate()


def test_missing_start_is_recovered_or_reported():
    # No start supplied; the solver must still reach the optimum via its
    # internal initialization.
    problem = sdp.SdpProblem(cone_dim=1, x0=[[-1.0]], basis=[[[1.0]]],
                             cost=[1.0], start=None)
    sol = sdp.solve(problem)
    assert sol.status is sdp.SdpStatus.OPTIMAL
    assert sol.primal_value == pytest.approx(1.0, abs=1e-7)


def test_deterministic_iterates():
    sol_a = sdp.solve(scalar_lp())
    sol_b = sdp.solve(scalar_lp())
    assert sol_a.iterations == sol_b.iterations
    assert sol_a.primal_value == sol_b.primal_value
    assert np.array_equal(sol_a.s_star, sol_b.s_star)
