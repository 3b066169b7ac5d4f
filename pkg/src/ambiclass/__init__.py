"""Exact two-sided verification of the ambiguous class number formula.

For a quadratic field of fundamental discriminant D and a cycle choice
(ordinary or narrow class group), this package counts the Galois-fixed
ideal classes two independent ways: directly, by enumerating reduced
binary quadratic forms and letting conjugation act as form inversion,
and through the closed formula driven by ramification counts and unit
norm indices obtained from Hilbert symbols.  verify() checks the two
counts agree exactly, along with the norm-residue group order and the
direct-sum decomposition that applies when the subgroup of squares has
odd order.
"""

from .arith import Factorization, ext_gcd, factorize, is_prime, kronecker
from .chevalley import (
    ChevalleyReport,
    InternalInconsistencyError,
    base_class_number,
    norm_group_order,
    remark_decomposition_check,
    rhs_ambiguous_number,
    verify,
    verify_discriminant,
)
from .normlocal import (
    OO,
    CycleChoice,
    CycleVariant,
    UnitNormIndexResult,
    hilbert_symbol,
    is_global_norm,
    local_norm_index_product,
    relevant_places,
    unit_norm_index,
)
from .pell import SurdExpansion, fundamental_unit_norm, surd_expansion
from .quadform import (
    DEFAULT_DISC_BOUND,
    DiscriminantBoundError,
    FormClassGroup,
    FundamentalDiscriminant,
    InfiniteBehavior,
    InvalidFormError,
    NotFundamentalError,
    QuadraticForm,
    ambiguous_count,
    compose,
    fundamental_discriminant,
    galois_apply,
    group_structure,
    is_fundamental,
    narrow_class_group,
    one_minus_sigma_image_order,
    principal_form,
    reduce_form,
)

__version__ = "0.1.0"

__all__ = [
    "OO",
    "DEFAULT_DISC_BOUND",
    "ChevalleyReport",
    "CycleChoice",
    "CycleVariant",
    "DiscriminantBoundError",
    "Factorization",
    "FormClassGroup",
    "FundamentalDiscriminant",
    "InfiniteBehavior",
    "InternalInconsistencyError",
    "InvalidFormError",
    "NotFundamentalError",
    "QuadraticForm",
    "SurdExpansion",
    "UnitNormIndexResult",
    "ambiguous_count",
    "base_class_number",
    "compose",
    "ext_gcd",
    "factorize",
    "fundamental_discriminant",
    "fundamental_unit_norm",
    "galois_apply",
    "group_structure",
    "hilbert_symbol",
    "is_fundamental",
    "is_global_norm",
    "is_prime",
    "kronecker",
    "local_norm_index_product",
    "narrow_class_group",
    "norm_group_order",
    "one_minus_sigma_image_order",
    "principal_form",
    "reduce_form",
    "relevant_places",
    "remark_decomposition_check",
    "rhs_ambiguous_number",
    "surd_expansion",
    "unit_norm_index",
    "verify",
    "verify_discriminant",
]
