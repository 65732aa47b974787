"""Real Minkowski-space kinematics.

Four-vectors are plain length-4 float arrays with the time component first,
metric diag(+,-,-,-), natural units (c = hbar = 1).  Lorentz matrices are
4x4 float arrays with the row index contravariant (Lambda^mu_nu).
"""

from __future__ import annotations

import itertools

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

#: 4d Levi-Civita with upper indices, orientation eps_{0123} = +1
#: (hence eps^{0123} = -1 in Lorentzian signature).
EPS4 = np.zeros((4, 4, 4, 4))
for _perm in itertools.permutations(range(4)):
    _parity = 1
    for _i in range(4):
        for _j in range(_i + 1, 4):
            if _perm[_i] > _perm[_j]:
                _parity = -_parity
    EPS4[_perm] = -_parity
del _perm, _parity, _i, _j

#: 3d Levi-Civita, eps_{123} = +1 (0-based indices here).
EPS3 = np.zeros((3, 3, 3))
for _p in itertools.permutations(range(3)):
    EPS3[_p] = np.sign((_p[1] - _p[0]) * (_p[2] - _p[1]) * (_p[2] - _p[0]))
del _p


def minkowski_dot(a, b) -> float:
    """a.b with metric (+,-,-,-)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[0] * b[0] - a[1:] @ b[1:]


def on_shell(m: float, p3) -> np.ndarray:
    """Four-momentum (E, p3) with E = sqrt(|p3|^2 + m^2)."""
    p3 = np.asarray(p3, dtype=float)
    return np.concatenate(([np.sqrt(p3 @ p3 + m * m)], p3))


def rapidity_std(p: np.ndarray) -> float:
    """Standard rapidity artanh(|p3|/E) of an on-shell momentum.

    Note: this is half the value a literal reading of the
    2*artanh(|p|/E) convention would give; the closed-form spinor boost
    is consistent with this one.
    """
    p = np.asarray(p)
    return float(np.arctanh(np.linalg.norm(p[1:]) / p[0]))


def standard_boost(p, m: float) -> np.ndarray:
    """Pure boost L_p with L_p (m,0,0,0) = p.  Symmetric, no rotation part."""
    if m <= 0:
        raise ValueError("mass must be positive")
    p = np.asarray(p, dtype=float)
    E, pv = p[0], p[1:]
    L = np.eye(4)
    L[0, 0] = E / m
    L[0, 1:] = pv / m
    L[1:, 0] = pv / m
    L[1:, 1:] = np.eye(3) + np.outer(pv, pv) / (m * (E + m))
    return L


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """block-diag(1, R) with R the Rodrigues rotation about a unit axis."""
    axis = np.asarray(axis, dtype=float)
    n = np.linalg.norm(axis)
    if n == 0:
        raise ValueError("rotation axis must be nonzero")
    axis = axis / n
    K = np.array([[0.0, -axis[2], axis[1]],
                  [axis[2], 0.0, -axis[0]],
                  [-axis[1], axis[0], 0.0]])
    R = np.eye(4)
    R[1:, 1:] = np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)
    return R


def compose(L1, L2) -> np.ndarray:
    return np.asarray(L1) @ np.asarray(L2)


def inverse(L) -> np.ndarray:
    """Metric-preserving inverse g L^T g."""
    return METRIC @ np.asarray(L).T @ METRIC


def is_lorentz(L, tol: float = 1e-10) -> bool:
    L = np.asarray(L)
    return bool(np.abs(L.T @ METRIC @ L - METRIC).max() <= tol)


def hodge_dual(T: np.ndarray) -> np.ndarray:
    """*T^{mu nu} = (1/2) eps^{mu nu rho sigma} T_{rho sigma}.

    Works for real 4x4 antisymmetric tensors and for 4x4 arrays of
    matrices alike (T indexed as T[mu, nu, ...]).  Applying twice
    returns -T.
    """
    T = np.asarray(T)
    if np.abs(T + np.swapaxes(T, 0, 1)).max() > 1e-12 * max(1.0, np.abs(T).max()):
        raise ValueError("input tensor is not antisymmetric")
    T_lo = np.einsum('ma,nb,ab...->mn...', METRIC, METRIC, T)
    return 0.5 * np.einsum('mnrs,rs...->mn...', EPS4, T_lo)


def random_momenta(n: int, m: float = 1.0, pmax: float = 5.0, seed: int = 42,
                   rng: np.random.Generator | None = None) -> np.ndarray:
    """n on-shell momenta: direction uniform on the sphere, |p3| uniform in (0, pmax*m]."""
    if rng is None:
        rng = np.random.default_rng(seed)
    direc = rng.normal(size=(n, 3))
    direc /= np.linalg.norm(direc, axis=1)[:, None]
    mag = rng.uniform(0.0, pmax * m, size=n)
    p3 = direc * mag[:, None]
    E = np.sqrt(np.sum(p3 * p3, axis=1) + m * m)
    return np.column_stack([E, p3])
