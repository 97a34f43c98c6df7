"""Exact transfers V: G -> H/K and the noncommutative determinant over group algebras."""
from .algebra import (
    AlgebraElement,
    alg_add,
    alg_mul,
    chi_dot,
    inverse,
    is_invertible,
    parse_element,
    project_element,
    regular_matrix,
    render_element,
)
from .cosets import (
    CosetPermutation,
    CosetSystem,
    coset_permutation,
    decompose,
    h_factor,
    inverse_reps,
    representative,
    resample,
)
from .errors import GroupTheoryError
from .groups import (
    FiniteGroup,
    QuotientGroup,
    SubgroupRef,
    build_from_table,
    commutator_subgroup,
    construct_named,
    cyclic,
    dihedral,
    direct_product,
    is_abelian,
    is_normal,
    quotient_group,
    subgroup_closure,
    symmetric,
)
from .matrices import (
    AlgebraMatrix,
    change_of_basis,
    det_cofactor,
    det_commutative,
    left_regular_rep,
    mat_mul,
    psi_matrix,
    right_regular_rep,
)
from .rings import F2, QQ, ZZ, ModRing, ring_from_name
from .transfer import (
    TransferValue,
    VerificationReport,
    det_transfer,
    left_transfer,
    right_transfer,
    sign_of,
    verify_properties,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "alg_add",
    "alg_mul",
    "chi_dot",
    "inverse",
    "is_invertible",
    "parse_element",
    "project_element",
    "regular_matrix",
    "render_element",
    "CosetPermutation",
    "CosetSystem",
    "coset_permutation",
    "decompose",
    "h_factor",
    "inverse_reps",
    "representative",
    "resample",
    "GroupTheoryError",
    "FiniteGroup",
    "QuotientGroup",
    "SubgroupRef",
    "build_from_table",
    "commutator_subgroup",
    "construct_named",
    "cyclic",
    "dihedral",
    "direct_product",
    "is_abelian",
    "is_normal",
    "quotient_group",
    "subgroup_closure",
    "symmetric",
    "AlgebraMatrix",
    "change_of_basis",
    "det_cofactor",
    "det_commutative",
    "left_regular_rep",
    "mat_mul",
    "psi_matrix",
    "right_regular_rep",
    "F2",
    "QQ",
    "ZZ",
    "ModRing",
    "ring_from_name",
    "TransferValue",
    "VerificationReport",
    "det_transfer",
    "left_transfer",
    "right_transfer",
    "sign_of",
    "verify_properties",
]
