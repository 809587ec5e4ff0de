import numpy as np
import pytest

from numrad import linalg, radius, tensor
from numrad.oracle import sweep_radius


def rotation_tensor():
    return tensor.Tensor2(np.eye(2), np.array([[0.0, -1.0], [1.0, 0.0]]))


def random_tensor(rng, m, n):
    return tensor.Tensor2(rng.standard_normal((m, n)), rng.standard_normal((m, n)))


def test_tensor2_validates_shapes():
    with pytest.raises(linalg.DimensionError):
        tensor.Tensor2(np.zeros((2, 3)), np.zeros((3, 2)))
    with pytest.raises(ValueError):
        tensor.Tensor2(np.array([[np.nan]]), np.array([[0.0]]))


def test_tensor2_properties():
    t = random_tensor(np.random.default_rng(0), 3, 5)
    assert t.m == 3 and t.n == 5
    assert t.frobenius() == pytest.approx(
        np.sqrt(np.linalg.norm(t.f1) ** 2 + np.linalg.norm(t.f2) ** 2))


def test_assemble_c_scalar_slices():
    t = tensor.Tensor2(np.array([[1.0]]), np.array([[0.0]]))
    assert np.allclose(tensor.assemble_c(t), [[0.0, 1.0], [1.0, 0.0]])
    t = tensor.Tensor2(np.array([[0.0]]), np.array([[1.0]]))
    assert np.allclose(tensor.assemble_c(t), [[0.0, 1j], [1j, 0.0]])


def test_assemble_c_is_complex_symmetric():
    t = random_tensor(np.random.default_rng(1), 2, 4)
    c = tensor.assemble_c(t)
    assert c.shape == (6, 6)
    assert np.allclose(c, c.T)
    assert np.allclose(c[:2, :2], 0.0)
    assert np.allclose(c[2:, 2:], 0.0)
    assert np.allclose(c[:2, 2:], t.f1 + 1j * t.f2)


def test_assemble_c_pencil_is_the_slice_embedding():
    # Hermitian part S(F1), skew part S(F2): the whole reduction rests here.
    t = random_tensor(np.random.default_rng(2), 3, 2)
    c = tensor.assemble_c(t)
    assert np.allclose((c + c.conj().T) / 2.0, linalg.s_embed(t.f1))
    assert np.allclose((c - c.conj().T) / 2.0j, linalg.s_embed(t.f2))


def test_rank_one_tensor_norms():
    t = tensor.Tensor2(np.array([[1.0, 0.0], [0.0, 0.0]]), np.zeros((2, 2)))
    assert tensor.tensor_spectral(t).value == pytest.approx(1.0, abs=1e-7)
    assert tensor.tensor_nuclear(t).value == pytest.approx(1.0, abs=1e-7)


def test_rotation_tensor_norms():
    t = rotation_tensor()
    assert tensor.tensor_spectral(t).value == pytest.approx(1.0, abs=1e-6)
    assert tensor.tensor_nuclear(t).value == pytest.approx(4.0, abs=1e-5)
    assert tensor.tensor_spectral_sweep(t) == pytest.approx(1.0, abs=1e-7)


def test_single_slice_reduces_to_matrix_norms():
    rng = np.random.default_rng(3)
    f1 = rng.standard_normal((3, 4))
    t = tensor.Tensor2(f1, np.zeros((3, 4)))
    sig = np.linalg.svd(f1, compute_uv=False)
    assert tensor.tensor_spectral(t).value == pytest.approx(sig[0], abs=1e-6)
    assert tensor.tensor_nuclear(t).value == pytest.approx(np.sum(sig), abs=1e-6)
    assert tensor.tensor_spectral_sweep(t) == pytest.approx(sig[0], abs=1e-7)


def test_spectral_matches_sweep_oracle():
    rng = np.random.default_rng(4)
    for _ in range(3):
        t = random_tensor(rng, rng.integers(2, 5), rng.integers(2, 5))
        sdp_value = tensor.tensor_spectral(t).value
        sweep_value = tensor.tensor_spectral_sweep(t, 1e-7)
        assert sdp_value == pytest.approx(sweep_value, abs=1e-6 * max(1.0, sweep_value))


def test_duality_pairing_inequality():
    rng = np.random.default_rng(5)
    t = random_tensor(rng, 3, 3)
    spectral = tensor.tensor_spectral(t).value
    nuclear = tensor.tensor_nuclear(t).value
    assert t.frobenius() ** 2 <= spectral * nuclear * (1.0 + 1e-6)


def test_nuclear_upper_bound_by_slices():
    rng = np.random.default_rng(6)
    t = random_tensor(rng, 3, 3)
    _, _, nuc1 = linalg.norms(t.f1.astype(complex))
    _, _, nuc2 = linalg.norms(t.f2.astype(complex))
    assert tensor.tensor_nuclear(t).value <= nuc1 + nuc2 + 1e-6


def test_trilinear_eval_reads_entries():
    t = rotation_tensor()
    assert tensor.trilinear_eval(t, [1.0, 0.0], [1.0, 0.0], [1.0, 0.0]) == 1.0
    assert tensor.trilinear_eval(t, [0.0, 1.0], [1.0, 0.0], [0.0, 1.0]) == -1.0
    with pytest.raises(linalg.DimensionError):
        tensor.trilinear_eval(t, [1.0, 0.0, 0.0], [1.0, 0.0], [1.0, 0.0])


def test_trilinear_eval_bounded_by_spectral():
    rng = np.random.default_rng(7)
    t = random_tensor(rng, 3, 4)
    spectral = tensor.tensor_spectral_sweep(t)
    for _ in range(10):
        x = rng.standard_normal(2)
        y = rng.standard_normal(3)
        z = rng.standard_normal(4)
        x, y, z = (v / np.linalg.norm(v) for v in (x, y, z))
        assert abs(tensor.trilinear_eval(t, x, y, z)) <= spectral + 1e-8


def test_symmetrized_dual_witness():
    rng = np.random.default_rng(8)
    t = random_tensor(rng, 3, 2)
    c = tensor.assemble_c(t)
    result = radius.dual_numerical_radius(c)
    d = tensor.symmetrize_dual_witness(result.dual_witness, t.m, t.n)
    value, _ = sweep_radius(d, 1e-8)
    assert value <= 1.0 + 1e-5
    pairing = float(np.real(np.trace(c @ d.conj().T)))
    assert pairing == pytest.approx(result.value, abs=1e-5)


def test_symmetrize_dual_witness_dimension_check():
    with pytest.raises(linalg.DimensionError):
        tensor.symmetrize_dual_witness(np.eye(4), 3, 2)
