import numpy as np
import pytest

from covspin import clifford, tensor

BASIS = clifford.chiral_gamma_basis()


def test_pauli_algebra():
    for i in range(3):
        for j in range(3):
            anti = clifford.PAULI[i] @ clifford.PAULI[j] \
                + clifford.PAULI[j] @ clifford.PAULI[i]
            np.testing.assert_allclose(anti, 2 * (i == j) * np.eye(2), atol=0)


def test_clifford_relations():
    for mu in range(4):
        for nu in range(4):
            anti = BASIS.gamma[mu] @ BASIS.gamma[nu] + BASIS.gamma[nu] @ BASIS.gamma[mu]
            np.testing.assert_allclose(
                anti, 2 * tensor.METRIC[mu, nu] * np.eye(4), atol=0)


def test_gamma5_diagonal():
    np.testing.assert_allclose(BASIS.gamma5, np.diag([-1, -1, 1, 1]), atol=0)
    for mu in range(4):
        assert np.abs(BASIS.gamma5 @ BASIS.gamma[mu]
                      + BASIS.gamma[mu] @ BASIS.gamma5).max() == 0


def test_sigma_commutes_with_gamma5():
    for k in range(3):
        assert np.abs(BASIS.sigma3v[k] @ BASIS.gamma5
                      - BASIS.gamma5 @ BASIS.sigma3v[k]).max() == 0


def test_sigma_tensor_rotation_block():
    # Sigma^{12} is the z-rotation generator Sigma^3/2
    np.testing.assert_allclose(BASIS.sigma_tensor[1, 2], 0.5 * BASIS.sigma3v[2], atol=0)
    np.testing.assert_allclose(BASIS.sigma_tensor + BASIS.sigma_tensor.transpose(1, 0, 2, 3),
                               0, atol=0)


def test_spin_tensor_flips_boost_blocks_only():
    for k in range(3):
        np.testing.assert_allclose(BASIS.spin_tensor[0, k + 1],
                                   -BASIS.sigma_tensor[0, k + 1], atol=0)
        for l in range(3):
            np.testing.assert_allclose(BASIS.spin_tensor[k + 1, l + 1],
                                       BASIS.sigma_tensor[k + 1, l + 1], atol=0)


def test_boost_rep_closed_form_equals_exponential():
    m = 1.0
    p = tensor.on_shell(m, [0.4, -1.1, 0.6])
    xi = tensor.rapidity_std(p)
    phat = p[1:] / np.linalg.norm(p[1:])
    U_exp = clifford.general_spinor_rep(np.zeros(3), xi * phat, BASIS)
    np.testing.assert_allclose(clifford.boost_spinor_rep(p, m, BASIS), U_exp, atol=1e-14)


def test_boost_rep_hermitian_unit_determinant():
    p = tensor.on_shell(1.0, [2.0, 0.3, -0.9])
    U = clifford.boost_spinor_rep(p, 1.0, BASIS)
    np.testing.assert_allclose(U, U.conj().T, atol=1e-15)
    assert np.linalg.det(U) == pytest.approx(1.0, abs=1e-12)


def test_boost_rep_realizes_standard_boost():
    m = 1.0
    for p3 in ([0.5, 0, 0], [0, 0, 2.5], [1.0, -0.7, 0.2]):
        p = tensor.on_shell(m, p3)
        U = clifford.boost_spinor_rep(p, m, BASIS)
        L = tensor.standard_boost(p, m)
        assert clifford.vector_conjugation_check(U, L, BASIS) < 1e-13


def test_rotation_rep_realizes_rotation():
    axis, angle = np.array([1.0, -2.0, 0.5]), 1.234
    U = clifford.rotation_spinor_rep(axis, angle, BASIS)
    R = tensor.rotation_matrix(axis, angle)
    assert clifford.vector_conjugation_check(U, R, BASIS) < 1e-14
    # unitary, and half-angle: a full turn gives -1
    np.testing.assert_allclose(U @ U.conj().T, np.eye(4), atol=1e-15)
    U2pi = clifford.rotation_spinor_rep(axis, 2 * np.pi, BASIS)
    np.testing.assert_allclose(U2pi, -np.eye(4), atol=1e-15)


def test_general_rep_pure_rotation_matches_closed_form():
    axis = np.array([0.3, 0.4, -1.0])
    n = axis / np.linalg.norm(axis)
    ang = 0.77
    np.testing.assert_allclose(
        clifford.general_spinor_rep(ang * n, np.zeros(3), BASIS),
        clifford.rotation_spinor_rep(axis, ang, BASIS), atol=1e-14)


def test_matrix_exp_against_pauli_identity():
    # e^{i a sigma.n} = cos(a) + i sin(a) sigma.n, scaled up to 4x4
    n = np.array([0.6, 0.0, 0.8])
    a = 0.9
    lhs = clifford.matrix_exp(1j * a * clifford.sigma_dot(BASIS, n))
    rhs = np.cos(a) * np.eye(4) + 1j * np.sin(a) * clifford.sigma_dot(BASIS, n)
    np.testing.assert_allclose(lhs, rhs, atol=1e-14)


def test_boost_rep_rejects_bad_mass():
    with pytest.raises(ValueError):
        clifford.boost_spinor_rep([1.0, 0, 0, 0], -1.0, BASIS)
