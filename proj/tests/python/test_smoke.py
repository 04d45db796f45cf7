"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import qganlab as ql


def test_pauli_matrix_tensor_structure():
    xx = ql.pauli_matrix("XX")
    assert xx.shape == (4, 4)
    assert np.allclose(xx, np.fliplr(np.eye(4)))
    with pytest.raises(ValueError):
        ql.pauli_matrix("XQ")


def test_evolution_is_unitary():
    h = ql.pauli_matrix("XZ") + 0.5 * ql.pauli_matrix("ZI")
    u = ql.evolve_unitary(h, 1.0)
    assert np.allclose(u @ u.conj().T, np.eye(4), atol=1e-12)


def test_encode_measure_round_trip():
    p = [0.7, 0.1, 0.05, 0.15]
    rho = ql.encode_distribution(p)
    assert np.allclose(ql.measure_probabilities(rho), p, atol=1e-12)
    assert ql.fidelity(rho, rho) == pytest.approx(1.0)
    assert ql.trace_distance(rho, rho) == pytest.approx(0.0)


def test_distribution_metrics():
    assert ql.tv_distance([0.75, 0.25], [0.5, 0.5]) == pytest.approx(0.25)
    assert ql.kl_divergence([1.0, 0.0], [0.5, 0.5]) == pytest.approx(math.log(2.0))
    assert ql.iterations_to_convergence([0.5, 0.005, 0.005], 0.01, 2) == 3
    assert ql.iterations_to_convergence([0.5, 0.5], 0.01, 1) is None


def test_generator_and_discriminator():
    g = ql.make_generator(1, ["Y"], theta=[math.pi / 4])
    probs = ql.measure_probabilities(ql.generate(g))
    assert probs == pytest.approx([0.5, 0.5], abs=1e-12)
    d = ql.make_discriminator(1, ["X", "Z"])
    assert ql.discriminate(d, ql.DensityMatrix.basis_state(1, 0)) == pytest.approx(1.0)
    assert ql.loss_generator(g, d) == pytest.approx(math.log(2.0))


def test_training_runs_and_is_deterministic():
    cfg = ql.TrainingConfig()
    cfg.n_qubits = 1
    cfg.max_iterations = 150
    cfg.seed = 5
    r1 = ql.train(cfg, [0.75, 0.25])
    r2 = ql.train(cfg, [0.75, 0.25])
    assert [h.tv_to_target for h in r1.history] == [h.tv_to_target for h in r2.history]
    assert r1.error == ""
    assert len(r1.history) <= 150

    classical = ql.train_classical(cfg, [0.75, 0.25])
    assert classical.error == ""
    assert classical.history[0].iteration == 1


def test_grid_search_oracle():
    rho_r = ql.DensityMatrix.basis_state(1, 0)
    rho_g = ql.DensityMatrix.basis_state(1, 1)
    theta, objective = ql.grid_search_discriminator(rho_r, rho_g, ["X"], 101)
    # optimal rotations act as the identity (theta in {-pi, 0, pi} are tied)
    assert abs(math.cos(theta[0])) == pytest.approx(1.0)
    assert objective == pytest.approx(0.0, abs=1e-6)


def test_config_validation_raises():
    cfg = ql.TrainingConfig()
    cfg.epsilon = 1.5
    with pytest.raises(ValueError, match="epsilon"):
        ql.train(cfg, [0.75, 0.25])
