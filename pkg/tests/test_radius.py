import numpy as np
import pytest

from numrad import linalg, radius
from numrad.oracle import sweep_radius


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(rng, n):
    a = random_complex(rng, n)
    return (a + a.conj().T) / 2.0


def test_shift_matrix_anchors():
    c = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert radius.numerical_radius(c).value == pytest.approx(0.5, abs=1e-7)
    assert radius.dual_numerical_radius(c).value == pytest.approx(2.0, abs=1e-6)
    assert radius.op_norm_sdp(c).value == pytest.approx(1.0, abs=1e-7)
    assert radius.nuclear_norm_sdp(c).value == pytest.approx(1.0, abs=1e-6)


def test_identity_anchors():
    i2 = np.eye(2)
    assert radius.numerical_radius(i2).value == pytest.approx(1.0, abs=1e-7)
    assert radius.dual_numerical_radius(i2).value == pytest.approx(2.0, abs=1e-6)


def test_zero_matrix_short_circuits():
    z = np.zeros((3, 3))
    for fn in (radius.numerical_radius, radius.dual_numerical_radius,
               radius.op_norm_sdp, radius.nuclear_norm_sdp):
        result = fn(z)
        assert result.value == 0.0
        assert result.iterations == 0


def test_scaling_and_phase_invariance():
    rng = np.random.default_rng(2)
    c = random_complex(rng, 3)
    r = radius.numerical_radius(c).value
    assert radius.numerical_radius(2.5 * c).value == pytest.approx(2.5 * r, rel=1e-7)
    assert radius.numerical_radius(np.exp(0.3j) * c).value == pytest.approx(r, rel=1e-7)


def test_hermitian_specialization():
    rng = np.random.default_rng(3)
    h = random_hermitian(rng, 4)
    lam = np.linalg.eigvalsh(h)
    assert radius.numerical_radius(h).value == pytest.approx(
        np.max(np.abs(lam)), abs=1e-7)
    assert radius.dual_numerical_radius(h).value == pytest.approx(
        np.sum(np.abs(lam)), abs=1e-6)


def test_radius_agrees_with_sweep():
    rng = np.random.default_rng(4)
    for _ in range(5):
        c = random_complex(rng, rng.integers(2, 6))
        value = radius.numerical_radius(c).value
        ref, _ = sweep_radius(c, 1e-8)
        assert value == pytest.approx(ref, abs=1e-7 * max(1.0, ref))


def test_witness_attains_the_radius():
    rng = np.random.default_rng(5)
    c = random_complex(rng, 4)
    result = radius.numerical_radius(c, witness=True)
    wit = result.certificate
    assert np.linalg.norm(wit.x) == pytest.approx(1.0, abs=1e-12)
    assert wit.attained(c) == pytest.approx(result.value, abs=1e-7)


def test_primal_dual_witness_pair_for_r():
    rng = np.random.default_rng(6)
    c = random_complex(rng, 3)
    result = radius.numerical_radius(c)
    f = result.dual_witness
    # F lies in the dual unit ball and pairs to the optimum.
    assert radius.dual_numerical_radius(f).value <= 1.0 + 1e-6
    pairing = float(np.real(np.trace(c @ f.conj().T)))
    assert pairing == pytest.approx(result.value, abs=1e-6)


def test_primal_dual_witness_pair_for_rdual():
    rng = np.random.default_rng(7)
    c = random_complex(rng, 3)
    result = radius.dual_numerical_radius(c)
    e = result.dual_witness
    assert radius.numerical_radius(e).value <= 1.0 + 1e-6
    pairing = float(np.real(np.trace(c @ e.conj().T)))
    assert pairing == pytest.approx(result.value, abs=1e-6)


def test_norm_axioms_via_duality():
    # r_dual(C + D) <= r_dual(C) + r_dual(D).
    rng = np.random.default_rng(8)
    c = random_complex(rng, 3)
    d = random_complex(rng, 3)
    rc = radius.dual_numerical_radius(c).value
    rd = radius.dual_numerical_radius(d).value
    rcd = radius.dual_numerical_radius(c + d).value
    assert rcd <= rc + rd + 1e-6


def test_sandwich_inequalities():
    rng = np.random.default_rng(9)
    for _ in range(5):
        c = random_complex(rng, rng.integers(2, 5))
        _, op, nuc = linalg.norms(c)
        r = radius.numerical_radius(c).value
        rd = radius.dual_numerical_radius(c).value
        assert op / 2.0 - 1e-6 <= r <= op + 1e-6
        assert nuc - 1e-6 <= rd <= 2.0 * nuc + 1e-6


def test_sdp_norms_match_svd():
    rng = np.random.default_rng(10)
    c = random_complex(rng, 4)
    _, op, nuc = linalg.norms(c)
    assert radius.op_norm_sdp(c).value == pytest.approx(op, rel=1e-6)
    assert radius.nuclear_norm_sdp(c).value == pytest.approx(nuc, rel=1e-6)


def test_rectangular_norms():
    rng = np.random.default_rng(11)
    c = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
    sig = np.linalg.svd(c, compute_uv=False)
    assert radius.op_norm_sdp(c).value == pytest.approx(sig[0], rel=1e-6)
    assert radius.nuclear_norm_sdp(c).value == pytest.approx(np.sum(sig), rel=1e-6)


def test_extreme_decomposition_reconstructs():
    rng = np.random.default_rng(12)
    c = random_complex(rng, 4)
    result = radius.dual_numerical_radius(c, certificate=True)
    dec = result.certificate
    assert len(dec.terms) <= 8
    assert dec.total_weight() == pytest.approx(result.value, abs=1e-6)
    resid = np.linalg.norm(dec.reconstruct(4) - c)
    assert resid <= 1e-6 * max(1.0, np.linalg.norm(c))
    for p, theta, v in dec.terms:
        assert p > 0.0
        assert 0.0 <= theta < 2.0 * np.pi + 1e-12
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-10)


def test_extreme_decomposition_of_hermitian():
    # X = |H| pairs with Y = H; the decomposition recovers the spectral one.
    rng = np.random.default_rng(13)
    h = random_hermitian(rng, 3)
    lam, q = np.linalg.eigh(h)
    x = (q * np.abs(lam)) @ q.conj().T
    dec = radius.extreme_decomposition(x, h)
    assert dec.total_weight() == pytest.approx(np.sum(np.abs(lam)), abs=1e-8)
    assert np.linalg.norm(dec.reconstruct(3) - h) < 1e-8


def test_extreme_decomposition_rejects_non_psd():
    with pytest.raises(radius.NotFeasibleError):
        radius.extreme_decomposition(np.eye(2), 5.0 * np.eye(2))


def test_extreme_decomposition_rejects_kernel_mass():
    x = np.diag([1.0, 0.0]).astype(complex)
    y = np.array([[0.0, 0.0], [0.0, 0.5]], dtype=complex)
    with pytest.raises((radius.InconsistentKernelError, radius.NotFeasibleError)):
        radius.extreme_decomposition(x, y)


def test_non_square_raises():
    with pytest.raises(linalg.DimensionError):
        radius.numerical_radius(np.zeros((2, 3)))


def test_nonconvergence_carries_diagnostics():
    rng = np.random.default_rng(14)
    c = random_complex(rng, 4)
    from numrad.sdp import SolverOptions
    with pytest.raises(radius.SolverNonConvergence) as exc:
        radius.numerical_radius(c, SolverOptions(max_iter=2))
    assert exc.value.iterations <= 2
    assert np.isfinite(exc.value.gap)
