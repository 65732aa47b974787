import numpy as np
import pytest

from covspin import clifford, tensor, wigner

BASIS = clifford.chiral_gamma_basis()
M = 1.0
RNG = np.random.default_rng(31)


def test_axis_angle_roundtrip():
    for _ in range(20):
        axis = RNG.normal(size=3)
        axis /= np.linalg.norm(axis)
        ang = RNG.uniform(0.01, np.pi - 0.01)
        R = tensor.rotation_matrix(axis, ang)[1:, 1:]
        a2, g2 = wigner.axis_angle(R)
        assert g2 == pytest.approx(ang, abs=1e-12)
        np.testing.assert_allclose(a2, axis, atol=1e-11)


def test_axis_angle_identity():
    axis, ang = wigner.axis_angle(np.eye(3))
    assert ang == 0.0


def test_wigner_R_is_rotation_fixing_rest():
    rng = np.random.default_rng(7)
    for _ in range(30):
        L = wigner.random_restricted_lorentz(rng)
        p = tensor.random_momenta(1, M, 5.0, rng=rng)[0]
        wr = wigner.wigner_R(L, p, M)
        np.testing.assert_allclose(wr.R @ [M, 0, 0, 0], [M, 0, 0, 0], atol=1e-11)
        assert tensor.is_lorentz(wr.R, 1e-9)


def test_wigner_R_trivial_for_pure_rotation():
    # boosting the rest frame by a rotation: the Wigner rotation is the
    # rotation itself
    R = tensor.rotation_matrix([0, 1, 0], 0.8)
    k = np.array([M, 0.0, 0, 0])
    wr = wigner.wigner_R(R, k, M)
    np.testing.assert_allclose(wr.R, R, atol=1e-12)


def test_wigner_R_rejects_non_lorentz():
    with pytest.raises(ValueError):
        wigner.wigner_R(np.diag([2.0, 1, 1, 1]), [M, 0, 0, 0], M)


def test_two_boost_analytic_angle():
    # orthogonal boosts with tanh(xi) = tanh(eta) = 3/5 compose to a
    # Wigner angle arctan(9/40)
    xi = np.arctanh(0.6)
    pz = tensor.on_shell(M, [0, 0, M * np.sinh(xi)])
    px = tensor.on_shell(M, [M * np.sinh(xi), 0, 0])
    wr = wigner.wigner_R(tensor.standard_boost(px, M), pz, M)
    assert wr.angle == pytest.approx(np.arctan(9 / 40), abs=1e-12)
    np.testing.assert_allclose(np.abs(wr.axis), [0, 1, 0], atol=1e-12)


def test_spinor_rep_of_realizes_its_matrix():
    rng = np.random.default_rng(41)
    for _ in range(15):
        L = wigner.random_restricted_lorentz(rng)
        U = wigner.spinor_rep_of(L, M, BASIS)
        assert clifford.vector_conjugation_check(U, L, BASIS) < 1e-11


def test_little_group_block_structure():
    rng = np.random.default_rng(43)
    L = wigner.random_restricted_lorentz(rng)
    p = tensor.on_shell(M, [0.5, -1.0, 2.0])
    D = wigner.little_group_D(L, p, M, BASIS)
    np.testing.assert_allclose(D.d2 @ D.d2.conj().T, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(D.d4[:2, :2], D.d4[2:, 2:], atol=0)
    # |tr d2| = 2|cos(angle/2)| ties the SU(2) element to the rotation
    wr = wigner.wigner_R(L, p, M)
    assert abs(np.trace(D.d2)) == pytest.approx(2 * abs(np.cos(wr.angle / 2)), abs=1e-11)


def test_spinor_transform_law():
    rng = np.random.default_rng(47)
    for _ in range(20):
        L = wigner.random_restricted_lorentz(rng)
        p = tensor.random_momenta(1, M, 5.0, rng=rng)[0]
        for kind in ('particle', 'antiparticle'):
            assert wigner.spinor_transform_check(L, p, 0.5, kind, M, BASIS) < 1e-11
            assert wigner.spinor_transform_check(L, p, -0.5, kind, M, BASIS) < 1e-11


def test_expectation_rotation():
    rng = np.random.default_rng(53)
    for _ in range(20):
        L = wigner.random_restricted_lorentz(rng)
        p = tensor.random_momenta(1, M, 5.0, rng=rng)[0]
        assert wigner.expectation_rotation_check(L, p, 0.5, 'particle', M, BASIS) < 1e-11


def test_cocycle_composition():
    rng = np.random.default_rng(59)
    for _ in range(10):
        L1 = wigner.random_restricted_lorentz(rng)
        L2 = wigner.random_restricted_lorentz(rng)
        p = tensor.random_momenta(1, M, 5.0, rng=rng)[0]
        R1 = wigner.wigner_R(L1, p, M).R
        R2 = wigner.wigner_R(L2, L1 @ p, M).R
        R12 = wigner.wigner_R(L2 @ L1, p, M).R
        np.testing.assert_allclose(R2 @ R1, R12, atol=1e-10)
