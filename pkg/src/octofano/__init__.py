"""Exact toolkit for Galois numbers, finite projective geometry, the
Cayley-Dickson tower, Fano-plane octonion tables and N-square identities."""

from .cayley_dickson import CDElement, Law, LawReport, cd_multiply, conjugate, find_zero_divisors, inverse, norm, probe_law
from .fano_octonions import (
    FANO_LABELING,
    FANO_RULES,
    POINT_LABELING,
    OrientedLine,
    UnitLabeling,
    ValidationReport,
    cd_octonion_table,
    fano_lines,
    fano_table,
    find_isomorphism,
    quaternion_subalgebra,
    recode,
    sweep_orientations,
    table_from_oriented_lines,
    validate_table,
)
from .finite_geometry import (
    GFVector,
    ProjectiveSpace,
    Subspace,
    SubspaceLattice,
    build_lattice,
    duality_check,
    enumerate_subspaces,
    lattice_to_dot,
    plane_axioms,
    projective_space,
)
from .identities import NSquareIdentity, derive_identity, emit_identity, verify_identity
from .qcalc import FormalSeries, galois_number, gaussian_binomial, q_factorial, verify_qexp_squared
from .symbolic import Poly, is_zero, poly_add, poly_mul
from .tables import MultTable

__version__ = "0.1.0"
