"""Dirac eigenspinors and why the field spin is Hermitian where it counts.

The raw S^k(p) matrices are not Hermitian, but the boosted eigenspinors
they act on carry exactly the compensating weight.  On a momentum grid
closed under p -> -p, the matrix elements between normalized mode states
come out real, Hermitian, and diagonal with values +-1/2.
"""

import numpy as np

from covspin import (MatrixElementTable, boosted_spinor, chiral_gamma_basis,
                     diagonality_check, dirac_residual, grid_momenta,
                     hermiticity_check, on_shell, spin_eigen_residual)

basis = chiral_gamma_basis()
m = 1.0

p = on_shell(m, [0.3, 1.8, -0.6])
print(f"p = {np.round(p, 4)}")
for lam in (0.5, -0.5):
    for kind in ('particle', 'antiparticle'):
        psi = boosted_spinor(p, lam, kind, m, basis)
        print(f"  {kind:13s} lambda={lam:+.1f}: "
              f"Dirac residual {dirac_residual(psi, m, basis):.1e}, "
              f"spin eigenresidual {spin_eigen_residual(psi, m, basis):.1e}")
u = boosted_spinor(p, 0.5, 'particle', m, basis).amplitude
print(f"  u^dag u = {np.vdot(u, u).real:.6f}  (2E/m = {2 * p[0] / m:.6f})")

grid = grid_momenta(8, m)
table = MatrixElementTable(grid, m, basis)
M = table.full()

print(f"\n8-point grid (closed under p -> -p), 16x16 element table:")
print(f"  Hermiticity residual : {hermiticity_check(table):.2e}")
print(f"  distance from lambda*delta : {diagonality_check(table):.2e}")
print("  leading 4x4 corner:")
print(np.round(M[:4, :4].real, 6))
