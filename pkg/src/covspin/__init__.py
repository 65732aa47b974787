"""Covariant spin operators for massive spin-1/2 fields.

Numerical constructions of the Pauli-Lubanski vector, the covariant
field spin operator, Dirac eigenspinors, and the Wigner rotation of
spin under restricted Lorentz transformations, together with a
verification suite that checks the algebraic identities tying them
together at machine precision.
"""

from .tensor import (METRIC, EPS3, EPS4, minkowski_dot, on_shell,
                     rapidity_std, standard_boost, rotation_matrix,
                     compose, inverse, is_lorentz, hodge_dual,
                     random_momenta)
from .clifford import (PAULI, GammaBasis, chiral_gamma_basis, sigma_dot,
                       boost_spinor_rep, general_spinor_rep, matrix_exp,
                       rotation_spinor_rep, vector_conjugation_check)
from .pauli_lubanski import (PLVector, rest_W, covariant_W, boost_rest_W,
                             pl_from_tensor, noncovariant_W, casimir,
                             transversality_residual)
from .spin_ops import (SpinTriple, ChiralSpinPair, field_spin,
                       chiral_spins, covariant_spin_direct, wigner_spin,
                       wigner_closed_form, su2_residual, spectrum_residual,
                       dual_contraction_check, field_spin_at)
from .spinors import (DiracSpinor, rest_spinor, boosted_spinor,
                      dirac_residual, spin_eigen_residual, spatial_flip,
                      orthogonality_check, grid_momenta,
                      MatrixElementTable, spin_matrix_element,
                      hermiticity_check, diagonality_check)
from .wigner import (WignerRotation, LittleGroupD, axis_angle, wigner_R,
                     spinor_rep_of, little_group_D,
                     spinor_transform_check, expectation_rotation_check,
                     random_restricted_lorentz)
from .verify import Config, VerificationReport, run_all

__version__ = "0.1.0"
