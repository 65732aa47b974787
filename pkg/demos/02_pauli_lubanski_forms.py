"""Three roads to the Pauli-Lubanski vector.

The rest-frame form (0, m Sigma/2) can be carried to momentum p two
ways: by Lorentz-transporting it with the standard boost, or in closed
form.  A third, genuinely different object comes from contracting the
constant internal angular-momentum tensor with p.  The first two agree
entrywise; the third agrees only in W^0, yet shares transversality and
the Casimir, and feeds the same field spin in the end.
"""

import numpy as np

from covspin import (boost_rest_W, casimir, chiral_gamma_basis, covariant_W,
                     field_spin, noncovariant_W, on_shell, pl_from_tensor,
                     transversality_residual)

basis = chiral_gamma_basis()
m = 1.0
p = on_shell(m, [1.1, 0.4, -1.9])

Wa = covariant_W(p, m, basis)
Wb = boost_rest_W(p, m, basis)
Wc = noncovariant_W(p, m, basis)

print(f"p = {np.round(p, 4)}")
print(f"closed form vs transported rest form : {np.abs(Wa.w - Wb.w).max():.2e}")
print(f"covariant vs tensor-contraction form : {np.abs(Wa.w - Wc.w).max():.2e}  (differ!)")
print(f"  ... but their W^0 agree            : {np.abs(Wa.w[0] - Wc.w[0]).max():.2e}")

brute = pl_from_tensor(basis.spin_tensor, p)
print(f"tensor form vs brute epsilon contraction : {np.abs(Wc.w - brute).max():.2e}")

print("\nshared invariants:")
for name, W in (("covariant", Wa), ("noncovariant", Wc)):
    tr = transversality_residual(W)
    cd = np.abs(casimir(W) + 0.75 * m * m * np.eye(4)).max()
    print(f"  {name:13s} p.W = 0 to {tr:.1e}, W.W = -3/4 m^2 to {cd:.1e}")

# both roads reach a spin operator; the covariant W gives the momentum
# dependent field spin, the noncovariant one collapses onto Sigma/2
Sa = field_spin(Wa, basis)
Sc = field_spin(Wc, basis)
half = np.stack([0.5 * basis.sigma3v[k] for k in range(3)])
print(f"\nfield_spin(noncovariant W) == Sigma/2 : {np.abs(Sc.s - half).max():.2e}")
print(f"field_spin(covariant W) is momentum dependent, distance from Sigma/2 "
      f"= {np.abs(Sa.s - half).max():.3f}")
