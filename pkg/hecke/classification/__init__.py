from hecke.classification.parameters import (
    ClassificationParameter,
    Enumeration,
    IrrRepDescriptor,
    PrincipalSeries,
    SpecialRepDescriptor,
    SupersingularDatum,
    build_descriptor,
    character_extends,
    enumerate_parameters,
    induction_factors,
    is_supersingular_descriptor,
    k_type_compatible,
    orthogonal_to_levi,
    orthogonality_variants_agree,
    parameter_violations,
    pi_sigma,
    principal_series_analyze,
    supersingular_data_from_model,
    torus_datum,
    trivial_parameter_factors,
    validate_parameter,
)
from hecke.classification.weights import (
    WeightStep,
    changing_weight_applicable,
    minimize_weight,
)

__all__ = [
    "ClassificationParameter",
    "Enumeration",
    "IrrRepDescriptor",
    "PrincipalSeries",
    "SpecialRepDescriptor",
    "SupersingularDatum",
    "WeightStep",
    "build_descriptor",
    "changing_weight_applicable",
    "character_extends",
    "enumerate_parameters",
    "induction_factors",
    "is_supersingular_descriptor",
    "k_type_compatible",
    "minimize_weight",
    "orthogonal_to_levi",
    "orthogonality_variants_agree",
    "parameter_violations",
    "pi_sigma",
    "principal_series_analyze",
    "supersingular_data_from_model",
    "torus_datum",
    "trivial_parameter_factors",
    "validate_parameter",
]
