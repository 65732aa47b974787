"""Spin operators built from the Pauli-Lubanski vector.

The field spin is S^k = (P^0 W^k - P^k W^0)/m^2 - (i/m^2) gamma^5
eps_{klm} P^l W^m; its two chiral 2x2 blocks are the restricted-group
spin pair.  The Wigner spin is S_W^k = (W^k - W^0 P^k/(m + P^0))/m.
All operators are dense 4x4 complex matrices evaluated at a numeric
on-shell momentum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GammaBasis, boost_spinor_rep, sigma_dot
from .pauli_lubanski import PLVector, covariant_W, noncovariant_W
from .tensor import EPS3, METRIC, hodge_dual, standard_boost


@dataclass(frozen=True)
class SpinTriple:
    s: np.ndarray            # shape (3, 4, 4)
    momentum: np.ndarray
    mass: float
    construction: str


@dataclass(frozen=True)
class ChiralSpinPair:
    s_plus: np.ndarray       # shape (3, 2, 2)
    s_minus: np.ndarray
    momentum: np.ndarray
    mass: float


_FIELD_TAGS = {'rest': 'field_from_restW',
               'covariant': 'field_from_covW',
               'noncovariant': 'field_from_noncovW'}
_WIGNER_TAGS = {'rest': 'wigner_from_restW',
                'covariant': 'wigner_from_covW',
                'noncovariant': 'wigner_from_noncovW'}


def _eps_term(p3, w):
    """eps_{klm} p^l W^m for k = 1..3."""
    out = np.zeros((3, 4, 4), dtype=complex)
    for k in range(3):
        for l in range(3):
            for mm in range(3):
                if EPS3[k, l, mm]:
                    out[k] += EPS3[k, l, mm] * p3[l] * w[mm + 1]
    return out


def field_spin(W: PLVector, basis: GammaBasis) -> SpinTriple:
    """Direct-sum spin from a PL vector.

    The gamma^5 term enters with coefficient -i/m^2 (the b = -i/m^2
    branch of the allowed +-i pair); the +i branch belongs to the
    opposite spinor-boost orientation and breaks the covariant-spin
    identity here.
    """
    m, p = W.mass, W.momentum
    E, p3 = p[0], p[1:]
    eps = _eps_term(p3, W.w)
    s = np.zeros((3, 4, 4), dtype=complex)
    for k in range(3):
        s[k] = (E * W.w[k + 1] - p3[k] * W.w[0]) / m**2 \
            - 1j * basis.gamma5 @ eps[k] / m**2
    return SpinTriple(s, p, m, _FIELD_TAGS.get(W.form_tag, 'field'))


def chiral_spins(W: PLVector, basis: GammaBasis, tol: float = 1e-10) -> ChiralSpinPair:
    """The two 2x2 chiral blocks of the field spin.

    The block on the gamma^5 = -1 subspace is S_+ and the +1 subspace is
    S_-; they exchange under p -> -p.
    """
    S = field_spin(W, basis)
    neg = np.isclose(np.diag(basis.gamma5).real, -1.0)
    idx_plus = np.where(neg)[0]
    idx_minus = np.where(~neg)[0]
    for k in range(3):
        off = np.abs(S.s[k][np.ix_(idx_plus, idx_minus)]).max()
        off = max(off, np.abs(S.s[k][np.ix_(idx_minus, idx_plus)]).max())
        if off > tol:
            raise ValueError("field spin is not block-diagonal in the chiral basis")
    sp = np.stack([S.s[k][np.ix_(idx_plus, idx_plus)] for k in range(3)])
    sm = np.stack([S.s[k][np.ix_(idx_minus, idx_minus)] for k in range(3)])
    return ChiralSpinPair(sp, sm, W.momentum, W.mass)


def covariant_spin_direct(p, m: float, basis: GammaBasis) -> SpinTriple:
    """S^k = U(L_p) (Sigma^k/2) U(L_p)^{-1}."""
    U = boost_spinor_rep(p, m, basis)
    Ui = np.linalg.inv(U)
    s = np.stack([U @ (0.5 * basis.sigma3v[k]) @ Ui for k in range(3)])
    return SpinTriple(s, np.asarray(p, dtype=float), m, 'covariant_direct')


def wigner_spin(W: PLVector) -> SpinTriple:
    """S_W^k = (W^k - W^0 P^k / (m + P^0)) / m."""
    m, p = W.mass, W.momentum
    E, p3 = p[0], p[1:]
    s = np.stack([(W.w[k + 1] - W.w[0] * p3[k] / (m + E)) / m for k in range(3)])
    return SpinTriple(s, p, m, _WIGNER_TAGS.get(W.form_tag, 'wigner'))


def wigner_closed_form(p, m: float, basis: GammaBasis) -> SpinTriple:
    """Direct evaluation of the Wigner spin at the non-covariant PL vector.

    S_W^k = -(i/2m) gamma^5 (Sigma x p)^k + Sigma^k p^0/(2m)
            - (Sigma.p) p^k / (2m(m + p^0)).
    The gamma^5 term sign follows the same orientation repair as
    noncovariant_W.
    """
    p = np.asarray(p, dtype=float)
    E, p3 = p[0], p[1:]
    sp = sigma_dot(basis, p3)
    s = np.zeros((3, 4, 4), dtype=complex)
    for k in range(3):
        cross = np.zeros((4, 4), dtype=complex)
        for l in range(3):
            for mm in range(3):
                if EPS3[k, l, mm]:
                    cross += EPS3[k, l, mm] * basis.sigma3v[l] * p3[mm]
        s[k] = -0.5j / m * basis.gamma5 @ cross \
            + 0.5 * E / m * basis.sigma3v[k] \
            - sp * p3[k] / (2.0 * m * (m + E))
    return SpinTriple(s, p, m, 'wigner_closed_form')


def su2_residual(S: SpinTriple | np.ndarray) -> float:
    """max_{i,j} || [S^i, S^j] - i eps_{ijk} S^k ||_inf."""
    s = S.s if isinstance(S, SpinTriple) else np.asarray(S)
    res = 0.0
    for i in range(3):
        for j in range(3):
            comm = s[i] @ s[j] - s[j] @ s[i]
            target = sum(1j * EPS3[i, j, k] * s[k] for k in range(3))
            res = max(res, np.abs(comm - target).max())
    return res


def spectrum_residual(S: SpinTriple, values=(0.5, 0.5, -0.5, -0.5)) -> float:
    """Max deviation of each component's eigenvalues from the given multiset."""
    target = np.sort(np.asarray(values))
    res = 0.0
    for k in range(3):
        ev = np.sort(np.linalg.eigvals(S.s[k]).real)
        res = max(res, np.abs(ev - target).max())
    return res


def dual_contraction_check(p, m: float, basis: GammaBasis) -> dict:
    """Boost the internal spin tensor and compare its dual {k0} slots
    with the directly conjugated covariant spin.

    Returns both residuals: 'dual' for the Hodge-dual reading
    *T^{k0} and 'literal' for the bare L^k_mu L^0_nu S^{mu nu}
    contraction.  The dual reading is the one that matches.
    """
    p = np.asarray(p, dtype=float)
    L = standard_boost(p, m)
    T = np.einsum('ma,nb,abij->mnij', L, L, basis.spin_tensor)
    dual = hodge_dual(T)
    direct = covariant_spin_direct(p, m, basis).s
    res_dual = max(np.abs(dual[k + 1, 0] - direct[k]).max() for k in range(3))
    S_lo = np.einsum('ma,nb,abij->mnij', METRIC, METRIC, basis.spin_tensor)
    lit = np.einsum('ka,b,abij->kij', L[1:], L[0], S_lo)
    res_lit = max(np.abs(lit[k] - direct[k]).max() for k in range(3))
    return {'dual': float(res_dual), 'literal': float(res_lit)}


def field_spin_at(p, m: float, basis: GammaBasis, which: str = 'covariant') -> SpinTriple:
    """Convenience: field spin from the named PL construction at p."""
    W = covariant_W(p, m, basis) if which == 'covariant' else noncovariant_W(p, m, basis)
    return field_spin(W, basis)
