import numpy as np
import pytest

from covspin import tensor


def test_metric_signature():
    assert np.array_equal(np.diag(tensor.METRIC), [1, -1, -1, -1])


def test_eps4_orientation():
    # lower-index orientation eps_{0123} = +1 means the contravariant
    # array stored here has EPS4[0,1,2,3] = -1
    assert tensor.EPS4[0, 1, 2, 3] == -1
    assert tensor.EPS4[1, 0, 2, 3] == 1
    assert tensor.EPS4[0, 0, 2, 3] == 0


def test_eps3():
    assert tensor.EPS3[0, 1, 2] == 1
    assert tensor.EPS3[2, 1, 0] == -1


def test_minkowski_dot_onshell():
    p = tensor.on_shell(1.3, [0.2, -0.7, 1.1])
    assert tensor.minkowski_dot(p, p) == pytest.approx(1.3**2, abs=1e-14)


def test_standard_boost_moves_rest_frame():
    m = 2.0
    p = tensor.on_shell(m, [0.5, 0.0, -1.2])
    L = tensor.standard_boost(p, m)
    np.testing.assert_allclose(L @ [m, 0, 0, 0], p, atol=1e-14)
    # pure boost: symmetric, metric-preserving
    np.testing.assert_allclose(L, L.T, atol=0)
    assert tensor.is_lorentz(L, 1e-12)


def test_standard_boost_rejects_bad_mass():
    with pytest.raises(ValueError):
        tensor.standard_boost([1.0, 0, 0, 0], 0.0)


def test_rapidity_matches_boost_matrix():
    m = 1.0
    p = tensor.on_shell(m, [0, 0, 3.0])
    xi = tensor.rapidity_std(p)
    # boost along z by rapidity xi reproduces the standard boost
    L = np.eye(4)
    L[0, 0] = L[3, 3] = np.cosh(xi)
    L[0, 3] = L[3, 0] = np.sinh(xi)
    np.testing.assert_allclose(L, tensor.standard_boost(p, m), atol=1e-14)


def test_rotation_matrix_quarter_turn():
    R = tensor.rotation_matrix([0, 0, 1], np.pi / 2)
    np.testing.assert_allclose(R @ [0, 1, 0, 0], [0, 0, 1, 0], atol=1e-15)
    assert tensor.is_lorentz(R)


def test_rotation_matrix_zero_axis():
    with pytest.raises(ValueError):
        tensor.rotation_matrix([0, 0, 0], 0.3)


def test_inverse_is_matrix_inverse():
    p = tensor.on_shell(1.0, [1.0, 2.0, -0.5])
    L = tensor.rotation_matrix([1, 2, 3], 0.7) @ tensor.standard_boost(p, 1.0)
    np.testing.assert_allclose(tensor.inverse(L) @ L, np.eye(4), atol=1e-13)


def test_hodge_dual_basis_element():
    # *T for T^{01} = 1: only the {23} slot lights up
    T = np.zeros((4, 4))
    T[0, 1], T[1, 0] = 1.0, -1.0
    D = tensor.hodge_dual(T)
    expect = np.zeros((4, 4))
    expect[2, 3], expect[3, 2] = 1.0, -1.0
    np.testing.assert_allclose(D, expect, atol=0)


def test_hodge_dual_squares_to_minus_one():
    rng = np.random.default_rng(3)
    A = rng.normal(size=(4, 4))
    T = A - A.T
    np.testing.assert_allclose(tensor.hodge_dual(tensor.hodge_dual(T)), -T, atol=1e-14)


def test_hodge_dual_rejects_symmetric():
    with pytest.raises(ValueError):
        tensor.hodge_dual(np.eye(4))


def test_random_momenta_on_shell_and_deterministic():
    ps = tensor.random_momenta(20, m=1.5, pmax=4.0, seed=11)
    ps2 = tensor.random_momenta(20, m=1.5, pmax=4.0, seed=11)
    np.testing.assert_array_equal(ps, ps2)
    mass2 = ps[:, 0]**2 - np.sum(ps[:, 1:]**2, axis=1)
    np.testing.assert_allclose(mass2, 1.5**2, atol=1e-12)
    assert np.all(np.linalg.norm(ps[:, 1:], axis=1) <= 4.0 * 1.5)
