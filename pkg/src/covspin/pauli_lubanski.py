"""Pauli-Lubanski vector of operators in its three constructions.

Each construction is a PLVector: four 4x4 complex matrices W^mu
(contravariant) together with the numeric on-shell momentum they were
built at.  The covariant form is the Lorentz transform of the rest-frame
(0, m Sigma/2); the non-covariant form comes from contracting the
constant internal angular-momentum tensor against the momentum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GammaBasis, sigma_dot
from .tensor import EPS3, EPS4, METRIC, standard_boost

_ONSHELL_TOL = 1e-9


@dataclass(frozen=True)
class PLVector:
    w: np.ndarray            # shape (4, 4, 4): w[mu] is the matrix W^mu
    momentum: np.ndarray
    mass: float
    form_tag: str            # 'rest' | 'covariant' | 'noncovariant'


def _check_onshell(p, m):
    p = np.asarray(p, dtype=float)
    if abs(p @ METRIC @ p - m * m) > _ONSHELL_TOL * max(1.0, m * m) or p[0] <= 0:
        raise ValueError("momentum is not on-shell for the given mass")
    return p


def rest_W(m: float, basis: GammaBasis) -> PLVector:
    """W_R = (0, m Sigma/2)."""
    if m <= 0:
        raise ValueError("mass must be positive")
    w = np.zeros((4, 4, 4), dtype=complex)
    for k in range(3):
        w[k + 1] = 0.5 * m * basis.sigma3v[k]
    return PLVector(w, np.array([m, 0.0, 0.0, 0.0]), m, 'rest')


def covariant_W(p, m: float, basis: GammaBasis) -> PLVector:
    """Closed form W^0 = Sigma.p/2, W^i = m Sigma^i/2 + (Sigma.p) p^i / (2(m+E)).

    Identical (to rounding) to transporting rest_W with the standard
    boost component-wise; see boost_rest_W for that second route.
    """
    p = _check_onshell(p, m)
    E, pv = p[0], p[1:]
    sp = sigma_dot(basis, pv)
    w = np.zeros((4, 4, 4), dtype=complex)
    w[0] = 0.5 * sp
    for i in range(3):
        w[i + 1] = 0.5 * m * basis.sigma3v[i] + sp * pv[i] / (2.0 * (m + E))
    return PLVector(w, p, m, 'covariant')


def boost_rest_W(p, m: float, basis: GammaBasis) -> PLVector:
    """W^mu = (L_p)^mu_nu W_R^nu: the independent construction of covariant_W."""
    p = _check_onshell(p, m)
    L = standard_boost(p, m)
    wr = rest_W(m, basis).w
    return PLVector(np.einsum('mn,nij->mij', L, wr), p, m, 'covariant')


def pl_from_tensor(S: np.ndarray, p) -> np.ndarray:
    """W^mu = (1/2) eps^{mu nu rho sigma} S_{nu rho} p_sigma by brute contraction.

    S is a (4, 4, 4, 4) array of matrices, antisymmetric in its first two
    (contravariant) indices; p is a numeric four-vector.  Returns the
    (4, 4, 4) array of W^mu matrices.
    """
    S = np.asarray(S)
    if np.abs(S + np.swapaxes(S, 0, 1)).max() > 1e-12 * max(1.0, np.abs(S).max()):
        raise ValueError("spin tensor is not antisymmetric")
    S_lo = np.einsum('ma,nb,abij->mnij', METRIC, METRIC, S)
    p_lo = METRIC @ np.asarray(p, dtype=float)
    return 0.5 * np.einsum('mnrs,nrij,s->mij', EPS4, S_lo, p_lo)


def noncovariant_W(p, m: float, basis: GammaBasis) -> PLVector:
    """W from the constant internal angular-momentum tensor at momentum p.

    Closed form W^0 = Sigma.p/2,
    W^k = p^0 Sigma^k / 2 - (i/2)(gamma^0 gamma x p)^k; equal to
    pl_from_tensor(basis.spin_tensor, p).  The cross-product term carries
    the opposite sign to a literal transcription because the spinor boost
    here realizes L_p rather than L_p^{-1} (see clifford module).
    """
    p = _check_onshell(p, m)
    E, pv = p[0], p[1:]
    w = np.zeros((4, 4, 4), dtype=complex)
    w[0] = 0.5 * sigma_dot(basis, pv)
    g0 = basis.gamma[0]
    gvec = [g0 @ basis.gamma[k + 1] for k in range(3)]
    for k in range(3):
        # (gamma^0 gamma x p)^k = eps_{klm} (gamma^0 gamma^l) p^m
        cross = np.zeros((4, 4), dtype=complex)
        for l in range(3):
            for mm in range(3):
                if EPS3[k, l, mm]:
                    cross += EPS3[k, l, mm] * gvec[l] * pv[mm]
        w[k + 1] = 0.5 * E * basis.sigma3v[k] - 0.5j * cross
    return PLVector(w, p, m, 'noncovariant')


def casimir(W: PLVector) -> np.ndarray:
    """W_mu W^mu as a matrix; -(3/4) m^2 I for the covariant spin-1/2 form."""
    g = METRIC.diagonal()
    return sum(g[mu] * W.w[mu] @ W.w[mu] for mu in range(4))


def transversality_residual(W: PLVector) -> float:
    """|| p_mu W^mu ||_inf."""
    p_lo = METRIC @ W.momentum
    return np.abs(np.einsum('m,mij->ij', p_lo, W.w)).max()
