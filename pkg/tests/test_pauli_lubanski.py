import numpy as np
import pytest

from covspin import clifford, pauli_lubanski as pl, tensor

BASIS = clifford.chiral_gamma_basis()
M = 1.0


def momenta(n=40, seed=5):
    return tensor.random_momenta(n, M, 5.0, seed)


def test_rest_W_is_half_m_sigma():
    W = pl.rest_W(M, BASIS)
    assert np.abs(W.w[0]).max() == 0
    for k in range(3):
        np.testing.assert_allclose(W.w[k + 1], 0.5 * M * BASIS.sigma3v[k], atol=0)


def test_covariant_closed_form_matches_boosted_rest():
    for p in momenta():
        a = pl.covariant_W(p, M, BASIS).w
        b = pl.boost_rest_W(p, M, BASIS).w
        np.testing.assert_allclose(a, b, atol=1e-13)


def test_covariant_transversality_and_casimir():
    for p in momenta(20, seed=9):
        W = pl.covariant_W(p, M, BASIS)
        assert pl.transversality_residual(W) < 1e-12
        np.testing.assert_allclose(pl.casimir(W), -0.75 * M * M * np.eye(4), atol=1e-12)


def test_noncovariant_closed_form_matches_tensor_contraction():
    # the epsilon contraction of the internal tensor is the oracle here
    for p in momenta(25, seed=13):
        closed = pl.noncovariant_W(p, M, BASIS).w
        brute = pl.pl_from_tensor(BASIS.spin_tensor, p)
        np.testing.assert_allclose(closed, brute, atol=1e-13)


def test_forms_agree_at_rest_and_share_W0():
    k = np.array([M, 0.0, 0.0, 0.0])
    np.testing.assert_allclose(pl.covariant_W(k, M, BASIS).w,
                               pl.noncovariant_W(k, M, BASIS).w, atol=0)
    p = tensor.on_shell(M, [0.8, -0.3, 1.7])
    np.testing.assert_allclose(pl.covariant_W(p, M, BASIS).w[0],
                               pl.noncovariant_W(p, M, BASIS).w[0], atol=0)


def test_noncovariant_shares_invariants_but_differs_entrywise():
    # transversality is automatic for any epsilon contraction with p, and
    # both forms even share the spin-1/2 Casimir; the matrices themselves
    # are what differ off the rest frame
    p = tensor.on_shell(M, [0, 0, 2.0])
    W = pl.noncovariant_W(p, M, BASIS)
    assert pl.transversality_residual(W) < 1e-12
    np.testing.assert_allclose(pl.casimir(W), -0.75 * M * M * np.eye(4), atol=1e-12)
    assert np.abs(W.w - pl.covariant_W(p, M, BASIS).w).max() > 1.0


def test_pl_from_tensor_rejects_symmetric_tensor():
    S = np.ones((4, 4, 4, 4))
    with pytest.raises(ValueError):
        pl.pl_from_tensor(S, [1.0, 0, 0, 0])


def test_off_shell_momentum_rejected():
    with pytest.raises(ValueError):
        pl.covariant_W([1.0, 0.5, 0, 0], M, BASIS)
    with pytest.raises(ValueError):
        pl.noncovariant_W([2.0, 0, 0, 0], M, BASIS)
