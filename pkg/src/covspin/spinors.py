"""Dirac eigenspinors, plane-wave modes, and the field-spin matrix elements.

Rest spinors follow the direct-sum pattern u(k,+) = (1,0,1,0)^T,
u(k,-) = (0,1,0,1)^T, v(k,+) = (1,0,-1,0)^T, v(k,-) = (0,1,0,-1)^T;
boosted states are U(L_p) times these.  Normalization is the rest-frame
psi^dagger psi = 2, which boosts to 2E/m.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .clifford import GammaBasis, boost_spinor_rep
from .spin_ops import field_spin_at
from .tensor import METRIC

_REST = {
    (0.5, 'particle'): np.array([1, 0, 1, 0], dtype=complex),
    (-0.5, 'particle'): np.array([0, 1, 0, 1], dtype=complex),
    (0.5, 'antiparticle'): np.array([1, 0, -1, 0], dtype=complex),
    (-0.5, 'antiparticle'): np.array([0, 1, 0, -1], dtype=complex),
}


@dataclass(frozen=True)
class DiracSpinor:
    amplitude: np.ndarray
    momentum: np.ndarray
    lam: float               # +-1/2
    kind: str                # 'particle' | 'antiparticle'

    def phase(self, x) -> complex:
        """Plane-wave phase at event x: e^{-ip.x} for particles, e^{+ip.x} otherwise."""
        px = self.momentum @ METRIC @ np.asarray(x, dtype=float)
        return np.exp(-1j * px) if self.kind == 'particle' else np.exp(1j * px)


def rest_spinor(lam: float, kind: str = 'particle') -> DiracSpinor:
    amp = _REST[(lam, kind)].copy()
    return DiracSpinor(amp, np.array([0.0, 0, 0, 0]), lam, kind)


def boosted_spinor(p, lam: float, kind: str, m: float, basis: GammaBasis) -> DiracSpinor:
    U = boost_spinor_rep(p, m, basis)
    return DiracSpinor(U @ _REST[(lam, kind)], np.asarray(p, dtype=float), lam, kind)


def dirac_residual(psi: DiracSpinor, m: float, basis: GammaBasis) -> float:
    """|| (gamma^mu p_mu -+ m) psi ||, minus for particles, plus for antiparticles."""
    p_lo = METRIC @ psi.momentum
    slash = sum(p_lo[mu] * basis.gamma[mu] for mu in range(4))
    sign = -1.0 if psi.kind == 'particle' else 1.0
    return float(np.linalg.norm((slash + sign * m * np.eye(4)) @ psi.amplitude))


def spin_eigen_residual(psi: DiracSpinor, m: float, basis: GammaBasis) -> float:
    """|| S^3(p) psi - lambda psi || with the field spin at psi's momentum."""
    S3 = field_spin_at(psi.momentum, m, basis).s[2]
    return float(np.linalg.norm(S3 @ psi.amplitude - psi.lam * psi.amplitude))


def spatial_flip(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return np.concatenate(([p[0]], -p[1:]))


def orthogonality_check(p, m: float, basis: GammaBasis) -> float:
    """max over helicities of |u^dagger(p, l) v(pbar, l')| with pbar = (E, -p3)."""
    pbar = spatial_flip(p)
    res = 0.0
    for lu, lv in product((0.5, -0.5), repeat=2):
        u = boosted_spinor(p, lu, 'particle', m, basis).amplitude
        v = boosted_spinor(pbar, lv, 'antiparticle', m, basis).amplitude
        res = max(res, abs(np.vdot(u, v)))
    return res


def grid_momenta(n: int, m: float = 1.0, pmax: float = 2.0, seed: int = 7) -> np.ndarray:
    """A labeled momentum grid closed under p3 -> -p3 (pairs exercise the
    particle/antiparticle cross terms in the matrix-element table)."""
    rng = np.random.default_rng(seed)
    half = max(1, n // 2)
    d = rng.normal(size=(half, 3))
    d /= np.linalg.norm(d, axis=1)[:, None]
    p3 = d * rng.uniform(0.2, pmax * m, size=half)[:, None]
    p3 = np.concatenate([p3, -p3])[:n]
    E = np.sqrt(np.sum(p3 * p3, axis=1) + m * m)
    return np.column_stack([E, p3])


class MatrixElementTable:
    """Field-spin S^3 matrix elements between grid-labeled mode states.

    Each state psi(x; p, lambda) is the equal-weight, unit-normalized
    superposition of the particle and antiparticle plane waves at p.  The
    continuum integral over x collapses on the grid to Kronecker deltas
    in spatial momentum; the particle-antiparticle cross terms pair p
    with -p and vanish through u^dagger(p) v(pbar) = 0, which is computed,
    not assumed.
    """

    def __init__(self, grid: np.ndarray, m: float, basis: GammaBasis, t: float = 0.0):
        self.grid = np.asarray(grid, dtype=float)
        self.m = m
        self.basis = basis
        self.t = t
        self._states = {}
        for i, p in enumerate(self.grid):
            for lam in (0.5, -0.5):
                u = boosted_spinor(p, lam, 'particle', m, basis)
                v = boosted_spinor(p, lam, 'antiparticle', m, basis)
                self._states[(i, lam)] = (u, v)
        self._s3 = {i: field_spin_at(p, m, basis).s[2]
                    for i, p in enumerate(self.grid)}

    def _grid_index(self, p3) -> int | None:
        for i, q in enumerate(self.grid):
            if np.allclose(q[1:], p3, atol=1e-12):
                return i
        return None

    def element(self, iq: int, lam_q: float, ip: int, lam_p: float) -> complex:
        """S^3_{q, lam'; p, lam} from the mode superpositions.

        The x-integral is carried out analytically: a particle component
        with spatial momentum q3 only meets the ket's particle component
        when q3 = p3, and the ket's antiparticle component when q3 = -p3
        (each with its e^{-+iEt} phase).
        """
        uq, vq = self._states[(iq, lam_q)]
        up, vp = self._states[(ip, lam_p)]
        q, p = self.grid[iq], self.grid[ip]
        s3p = self._s3[ip]
        val = 0.0 + 0.0j
        norm = 0.5 / np.sqrt((uq.amplitude @ uq.amplitude.conj()).real
                             * (up.amplitude @ up.amplitude.conj()).real).real
        Eq, Ep = q[0], p[0]
        if np.allclose(q[1:], p[1:], atol=1e-12):
            # particle-particle and antiparticle-antiparticle terms
            val += np.exp(1j * (Eq - Ep) * self.t) * np.vdot(uq.amplitude, s3p @ up.amplitude)
            val += np.exp(-1j * (Eq - Ep) * self.t) * np.vdot(vq.amplitude, s3p @ vp.amplitude)
        if np.allclose(q[1:], -p[1:], atol=1e-12):
            # cross terms: bra particle at q = pbar against ket antiparticle, and back
            val += np.exp(1j * (Eq + Ep) * self.t) * np.vdot(uq.amplitude, s3p @ vp.amplitude)
            val += np.exp(-1j * (Eq + Ep) * self.t) * np.vdot(vq.amplitude, s3p @ up.amplitude)
        return val * norm

    def full(self) -> np.ndarray:
        n = len(self.grid)
        lams = (0.5, -0.5)
        out = np.zeros((2 * n, 2 * n), dtype=complex)
        for iq in range(n):
            for a, lq in enumerate(lams):
                for ip in range(n):
                    for b, lp in enumerate(lams):
                        out[2 * iq + a, 2 * ip + b] = self.element(iq, lq, ip, lp)
        return out


def spin_matrix_element(q, lam_q: float, p, lam_p: float,
                        table: MatrixElementTable) -> complex:
    """Table lookup by momentum; raises for momenta off the grid."""
    iq = table._grid_index(np.asarray(q, dtype=float)[1:])
    ip = table._grid_index(np.asarray(p, dtype=float)[1:])
    if iq is None or ip is None:
        raise ValueError("momentum not on the table grid")
    return table.element(iq, lam_q, ip, lam_p)


def hermiticity_check(table: MatrixElementTable) -> float:
    """max |S^3_{q,l';p,l} - conj(S^3_{p,l;q,l'})| over the table."""
    M = table.full()
    return float(np.abs(M - M.conj().T).max())


def diagonality_check(table: MatrixElementTable) -> float:
    """Max deviation from lambda * delta_{pq} delta_{ll'}."""
    M = table.full()
    n = len(table.grid)
    target = np.zeros_like(M)
    for i in range(n):
        target[2 * i, 2 * i] = 0.5
        target[2 * i + 1, 2 * i + 1] = -0.5
    return float(np.abs(M - target).max())
