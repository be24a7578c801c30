"""Group-algebra codes over prime fields.

Right ideals of F_p[G] carry the Hamming metric; this package computes their
parameters, verifies the distance-dimension bound and its equality structure,
forms componentwise products and power chains, and machine-checks the
structural statements on concrete small groups.
"""

from .constructions import GolaySearchResult, golay_search, reed_muller, rm_schur_square_check
from .errors import GuardExceeded, UnsupportedCover, VerificationError
from .ffield import FieldElem, PrimeField
from .galg import AlgElem
from .gcode import (
    GCode,
    ParamReport,
    augmentation_ideal,
    full_algebra,
    ideal_from_generators,
    is_ideal,
    load_code,
    save_code,
    trivial_induced,
    zero_code,
)
from .groups import (
    Group,
    Subgroup,
    direct_product,
    from_spec,
    is_p_group,
    is_subgroup,
    load_group,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion8,
    make_symmetric,
    normal_p_complement,
    p_part,
    right_cosets,
    save_group,
    subgroup_generated,
)
from .linalg import RowBasis, equal_spaces, kernel, rank, rref, subspace_intersect, subspace_sum
from .schur import (
    SchurChainReport,
    binary_chain_monotone_check,
    fixed_point_structure,
    schur_power_chain,
    schur_product,
)
from .theorems import (
    EqualityWitness,
    ProjectiveCoverResult,
    UncertaintyResult,
    enumerate_cyclic_ideals,
    equality_analysis,
    greedy_support_rank,
    idempotent_generator,
    projective_cover_trivial,
    schur_square_theorem_check,
    solv_check,
    uncertainty_check,
    verify_all,
    verify_bound,
    verify_equality,
    verify_schur,
    verify_uncertainty,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
