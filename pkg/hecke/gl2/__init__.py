from hecke.gl2.kernels import (
    HeckeKernel,
    InductionElement,
    apply_kernel,
    build_kernel,
    convolve,
    explicit_coset_sum,
    twist_kernel,
)
from hecke.gl2.padic import (
    PAdicMatrix,
    cartan_decompose,
    cartan_decomposition,
    coset_canonicalize,
    coset_decompose,
    double_coset_points,
)
from hecke.gl2.reps import FiniteRep, finite_rep_invariants
from hecke.gl2.transform import (
    ChangingWeightResult,
    HeckeRelationResult,
    hecke_relation_check,
    satake_transform,
    verify_changing_weight_identity,
)

__all__ = [
    "ChangingWeightResult",
    "FiniteRep",
    "HeckeKernel",
    "HeckeRelationResult",
    "InductionElement",
    "PAdicMatrix",
    "apply_kernel",
    "build_kernel",
    "cartan_decompose",
    "cartan_decomposition",
    "convolve",
    "coset_canonicalize",
    "coset_decompose",
    "double_coset_points",
    "explicit_coset_sum",
    "finite_rep_invariants",
    "hecke_relation_check",
    "satake_transform",
    "twist_kernel",
    "verify_changing_weight_identity",
]
