"""Complex 4x4 Dirac algebra in the chiral representation.

Concrete matrices: gamma^0 has identity off-diagonal blocks, the spatial
gamma^k carry the Pauli matrices, and gamma^5 = i gamma^0 gamma^1 gamma^2
gamma^3 = diag(-1,-1,+1,+1).  The block signs are pinned by requiring the
boosted eigenspinors to solve the free Dirac equation; with that choice
the spinor representations below satisfy the direct conjugation law

    U(Lambda)^{-1} gamma^mu U(Lambda) = Lambda^mu_nu gamma^nu.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)


def _chiral(upper, lower):
    return np.block([[upper, _Z2], [_Z2, lower]])


def _offdiag(a, b):
    return np.block([[_Z2, a], [b, _Z2]])


@dataclass(frozen=True)
class GammaBasis:
    """Chiral-representation gamma matrices and derived generators.

    sigma_tensor holds Sigma^{mu nu} = (i/4)[gamma^mu, gamma^nu];
    spin_tensor is its parity conjugate gamma^0 Sigma^{mu nu} gamma^0
    (boost components flipped), which is the internal angular-momentum
    tensor matching the conjugation orientation of the spinor boost.
    """

    gamma: tuple[np.ndarray, ...]
    gamma5: np.ndarray
    sigma3v: tuple[np.ndarray, ...]
    sigma_tensor: np.ndarray = field(repr=False)
    spin_tensor: np.ndarray = field(repr=False)


def chiral_gamma_basis() -> GammaBasis:
    gamma0 = _offdiag(_I2, _I2)
    gammas = [gamma0] + [_offdiag(PAULI[k], -PAULI[k]) for k in range(3)]
    gamma5 = 1j * gammas[0] @ gammas[1] @ gammas[2] @ gammas[3]
    sigma3v = tuple(_chiral(PAULI[k], PAULI[k]) for k in range(3))
    sig = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            sig[mu, nu] = 0.25j * (gammas[mu] @ gammas[nu] - gammas[nu] @ gammas[mu])
    spin = np.einsum('ij,mnjk,kl->mnil', gamma0, sig, gamma0)
    return GammaBasis(tuple(gammas), gamma5, sigma3v, sig, spin)


def sigma_dot(basis: GammaBasis, v) -> np.ndarray:
    """Sigma . v for a real 3-vector v."""
    v = np.asarray(v)
    return sum(v[k] * basis.sigma3v[k] for k in range(3))


def boost_spinor_rep(p, m: float, basis: GammaBasis) -> np.ndarray:
    """Spinor representation of the standard boost L_p.

    Closed form (E + m + gamma^5 Sigma.p) / sqrt(2m(E+m)) =
    exp(+gamma^5 Sigma.phat xi/2) with xi = artanh(|p|/E).  Hermitian and
    positive definite; the exponent sign is the one for which
    (gamma^mu p_mu - m) U u(rest) = 0.
    """
    if m <= 0:
        raise ValueError("mass must be positive")
    p = np.asarray(p, dtype=float)
    E = p[0]
    return ((E + m) * np.eye(4) + basis.gamma5 @ sigma_dot(basis, p[1:])) \
        / np.sqrt(2.0 * m * (E + m))


def general_spinor_rep(theta, xi, basis: GammaBasis) -> np.ndarray:
    """U(Lambda) = exp(-i Sigma.theta/2 + gamma^5 Sigma.xi/2).

    At theta = 0, xi = xi_std * phat this equals boost_spinor_rep; at
    xi = 0 it is the double-cover lift of the Rodrigues rotation about
    theta.  Defined only up to the overall +-1 of the double cover.
    """
    theta = np.asarray(theta, dtype=float)
    xi = np.asarray(xi, dtype=float)
    gen = -0.5j * sigma_dot(basis, theta) + 0.5 * basis.gamma5 @ sigma_dot(basis, xi)
    return matrix_exp(gen)


def matrix_exp(A: np.ndarray) -> np.ndarray:
    """e^A via scipy's scaling-and-squaring Pade implementation."""
    return expm(np.asarray(A, dtype=complex))


def rotation_spinor_rep(axis, angle: float, basis: GammaBasis) -> np.ndarray:
    """Closed-form exp(-i Sigma.n angle/2) = cos(a/2) - i sin(a/2) Sigma.n."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    return np.cos(angle / 2) * np.eye(4) - 1j * np.sin(angle / 2) * sigma_dot(basis, axis)


def vector_conjugation_check(U: np.ndarray, L: np.ndarray, basis: GammaBasis) -> float:
    """max_mu || U^-1 gamma^mu U - L^mu_nu gamma^nu ||_inf.

    Zero residual means U realizes L in the direct orientation (the one
    pinned by the Dirac-equation test; see module docstring).
    """
    Ui = np.linalg.inv(U)
    L = np.asarray(L)
    return max(
        np.abs(Ui @ basis.gamma[mu] @ U
               - sum(L[mu, nu] * basis.gamma[nu] for nu in range(4))).max()
        for mu in range(4)
    )
