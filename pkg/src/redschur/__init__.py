"""Reduced Schur functions and their basic-set decomposition."""

from .affine import WeightLabel, multiplicity_series, r_core_partitions, weight_basis, weight_of
from .lr import lr_coefficient, lr_multi, schur_product_expand
from .maya import (
    CoreQuotient,
    MayaDiagram,
    delta2_column_hooks,
    from_partition,
    is_r_core,
    r_compose,
    r_decompose,
    sort_sign,
)
from .partition import BorderStripRemoval, Partition, border_strip_removals, conjugate, partitions_of
from .polyring import Monomial, TPolynomial, graded_component, linear_rank, omega, reduce_r
from .reduce import (
    Decomposition,
    VerificationResult,
    basic_set,
    basis_rank_check,
    counting_check,
    decompose,
    verify_theorem,
)
from .schur import CycleType, mn_character, reduced_schur, schur_in_t, schur_times_power_sum

__version__ = "0.1.0"

__all__ = [
    "BorderStripRemoval",
    "CoreQuotient",
    "CycleType",
    "Decomposition",
    "MayaDiagram",
    "Monomial",
    "Partition",
    "TPolynomial",
    "VerificationResult",
    "WeightLabel",
    "basic_set",
    "basis_rank_check",
    "border_strip_removals",
    "conjugate",
    "counting_check",
    "decompose",
    "delta2_column_hooks",
    "from_partition",
    "graded_component",
    "is_r_core",
    "linear_rank",
    "lr_coefficient",
    "lr_multi",
    "mn_character",
    "multiplicity_series",
    "omega",
    "partitions_of",
    "r_compose",
    "r_core_partitions",
    "r_decompose",
    "reduce_r",
    "reduced_schur",
    "schur_in_t",
    "schur_product_expand",
    "schur_times_power_sum",
    "sort_sign",
    "verify_theorem",
    "weight_basis",
    "weight_of",
]
