"""A first tour of the covariant field spin.

Boost a spin-1/2 rest frame to a generic momentum and watch which
properties survive: the su(2) algebra and the +-1/2 spectrum do, while
componentwise Hermiticity does not (it is restored in physical matrix
elements, see demo 03).
"""

import numpy as np

from covspin import (chiral_gamma_basis, chiral_spins, covariant_W,
                     field_spin, on_shell, spectrum_residual, su2_residual)

basis = chiral_gamma_basis()
m = 1.0
p = on_shell(m, [0.8, -1.3, 2.1])
print(f"momentum p = {np.round(p, 4)}  (m = {m})")

W = covariant_W(p, m, basis)
S = field_spin(W, basis)

print("\nS^3 at this momentum:")
print(np.round(S.s[2], 3))

print(f"\nsu(2) residual          : {su2_residual(S):.2e}")
print(f"spectrum residual        : {spectrum_residual(S):.2e}")
nh = max(np.abs(S.s[k] - S.s[k].conj().T).max() for k in range(3))
print(f"non-Hermiticity (raw)    : {nh:.2e}   <- not zero, and not a bug")

pair = chiral_spins(W, basis)
print("\nThe operator is a direct sum of two 2x2 chiral spins.")
print(f"S_+ su(2) residual: {su2_residual(pair.s_plus):.2e}")
print(f"S_- su(2) residual: {su2_residual(pair.s_minus):.2e}")

pbar = np.concatenate(([p[0]], -p[1:]))
flip = chiral_spins(covariant_W(pbar, m, basis), basis)
swap = np.abs(pair.s_plus - flip.s_minus).max()
print(f"blocks exchange under p -> -p, residual {swap:.2e}")
