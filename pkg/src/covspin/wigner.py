"""Wigner rotations, little-group D-matrices, and the spin transformation law."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.transform import Rotation

from .clifford import GammaBasis, boost_spinor_rep, rotation_spinor_rep
from .spin_ops import field_spin_at
from .spinors import boosted_spinor
from .tensor import inverse, is_lorentz, standard_boost


@dataclass(frozen=True)
class WignerRotation:
    R: np.ndarray
    axis: np.ndarray
    angle: float
    transform: np.ndarray
    momentum: np.ndarray


@dataclass(frozen=True)
class LittleGroupD:
    d2: np.ndarray
    d4: np.ndarray


def axis_angle(R3: np.ndarray) -> tuple[np.ndarray, float]:
    """Robust axis/angle from a 3x3 rotation; angle in [0, pi], axis sign
    tie-broken toward a positive leading component."""
    rotvec = Rotation.from_matrix(R3).as_rotvec()
    angle = float(np.linalg.norm(rotvec))
    if angle < 1e-15:
        return np.array([0.0, 0.0, 1.0]), 0.0
    axis = rotvec / angle
    if angle > np.pi - 1e-9:
        # at a half turn the axis sign is ambiguous
        for c in axis:
            if abs(c) > 1e-12:
                if c < 0:
                    axis = -axis
                break
    return axis, angle


def wigner_R(L, p, m: float) -> WignerRotation:
    """R = L_{Lam p}^{-1} Lam L_p."""
    L = np.asarray(L, dtype=float)
    if not is_lorentz(L, 1e-9):
        raise ValueError("Lambda is not a Lorentz transformation")
    p = np.asarray(p, dtype=float)
    q = L @ p
    R = inverse(standard_boost(q, m)) @ L @ standard_boost(p, m)
    axis, angle = axis_angle(R[1:, 1:])
    return WignerRotation(R, axis, angle, L, p)


def spinor_rep_of(L, m_scale: float, basis: GammaBasis) -> np.ndarray:
    """Spinor representation of a restricted Lorentz matrix.

    Polar-decomposes L into rotation * standard boost and lifts both
    factors; defined up to the double-cover sign.
    """
    L = np.asarray(L, dtype=float)
    p = L[:, 0] * m_scale          # image of the rest momentum (m, 0)
    B = standard_boost(p, m_scale)
    R = inverse(B) @ L
    axis, angle = axis_angle(R[1:, 1:])
    UB = boost_spinor_rep(p, m_scale, basis)
    # L = B' R with B' the boost part on the left: L L^T = B'^2
    return UB @ rotation_spinor_rep(axis, angle, basis)


def little_group_D(L, p, m: float, basis: GammaBasis, tol: float = 1e-10) -> LittleGroupD:
    """D(R) = U(L_{Lam p})^{-1} U(Lam) U(L_p): block-diag(d2, d2).

    Built from the spinor product, which fixes the double-cover sign by
    construction.
    """
    p = np.asarray(p, dtype=float)
    L = np.asarray(L, dtype=float)
    q = L @ p
    ULam = spinor_rep_of(L, m, basis)
    D = np.linalg.inv(boost_spinor_rep(q, m, basis)) @ ULam @ boost_spinor_rep(p, m, basis)
    off = max(np.abs(D[:2, 2:]).max(), np.abs(D[2:, :2]).max())
    if off > tol:
        raise ValueError("little-group element is not block diagonal")
    d2 = D[:2, :2]
    if np.abs(d2 - D[2:, 2:]).max() > tol:
        raise ValueError("little-group blocks differ")
    if np.abs(d2 @ d2.conj().T - np.eye(2)).max() > tol:
        raise ValueError("little-group block is not unitary")
    d4 = np.zeros((4, 4), dtype=complex)
    d4[:2, :2] = d2
    d4[2:, 2:] = d2
    return LittleGroupD(d2, d4)


_LAMS = (0.5, -0.5)


def spinor_transform_check(L, p, lam: float, kind: str, m: float,
                           basis: GammaBasis) -> float:
    """|| U(Lam) psi(p, lam) - sum_l' D_{l'l} psi(Lam p, l') ||."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(L, dtype=float) @ p
    D = little_group_D(L, p, m, basis)
    lhs = spinor_rep_of(L, m, basis) @ boosted_spinor(p, lam, kind, m, basis).amplitude
    col = _LAMS.index(lam)
    rhs = sum(D.d2[row, col] * boosted_spinor(q, _LAMS[row], kind, m, basis).amplitude
              for row in range(2))
    return float(np.linalg.norm(lhs - rhs))


def expectation_rotation_check(L, p, lam: float, kind: str, m: float,
                               basis: GammaBasis) -> float:
    """Wigner rotation of the spin expectation value.

    Compares (D psi)^dag S^l (D psi) with R^l_m <S^m> at q = Lam p, both
    sides normalized by psi^dag psi; uses the field spin at q.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(L, dtype=float) @ p
    wr = wigner_R(L, p, m)
    D = little_group_D(L, p, m, basis)
    S = field_spin_at(q, m, basis).s
    psi = boosted_spinor(q, lam, kind, m, basis).amplitude
    col = _LAMS.index(lam)
    dpsi = sum(D.d2[row, col] * boosted_spinor(q, _LAMS[row], kind, m, basis).amplitude
               for row in range(2))
    expect = np.array([np.vdot(psi, S[k] @ psi) for k in range(3)]) / np.vdot(psi, psi)
    rotated = np.array([np.vdot(dpsi, S[k] @ dpsi) for k in range(3)]) / np.vdot(dpsi, dpsi)
    return float(np.abs(rotated - wr.R[1:, 1:] @ expect).max())


def random_restricted_lorentz(rng: np.random.Generator, xi_max: float | None = None) -> np.ndarray:
    """Random rotation composed with a random standard boost (bounded rapidity)."""
    from .tensor import on_shell, rotation_matrix
    if xi_max is None:
        xi_max = float(np.arctanh(5.0 / np.sqrt(26.0)))
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    ang = rng.uniform(0.0, np.pi)
    bdir = rng.normal(size=3)
    bdir /= np.linalg.norm(bdir)
    xi = rng.uniform(0.0, xi_max)
    p = on_shell(1.0, np.sinh(xi) * bdir)
    return rotation_matrix(axis, ang) @ standard_boost(p, 1.0)
