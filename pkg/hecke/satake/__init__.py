from hecke.satake.algebra import LaurentPolynomial, MonoidAlgebraElement, multiply
from hecke.satake.irreducibility import (
    brute_force_laurent_factor_search,
    coroot_binomial,
    tau_coroot_minus_one_irreducible,
)
from hecke.satake.parameter import (
    SatakeParameter,
    all_parameters,
    character_of_group,
    dominant_box,
    evaluate,
    evaluate_element,
    is_algebra_homomorphism_consistent,
    parameterize_from_oracle,
    restrict_to_sublattice,
    tensor,
    twist,
)

__all__ = [
    "LaurentPolynomial",
    "MonoidAlgebraElement",
    "SatakeParameter",
    "all_parameters",
    "brute_force_laurent_factor_search",
    "character_of_group",
    "coroot_binomial",
    "dominant_box",
    "evaluate",
    "evaluate_element",
    "is_algebra_homomorphism_consistent",
    "multiply",
    "parameterize_from_oracle",
    "restrict_to_sublattice",
    "tau_coroot_minus_one_irreducible",
    "tensor",
    "twist",
]
