from hecke.rootdatum.catalog import list_builtin, load_datum, parse_datum, shipped_data
from hecke.rootdatum.datum import (
    Cocharacter,
    ParabolicSubset,
    Root,
    RootDatum,
    Weight,
    cartan_type,
    datum_violations,
    mask,
    positive_coroots,
    subsets,
    validate_datum,
    weyl_group_order,
)
from hecke.rootdatum.geometry import (
    dominance_leq,
    fundamental_weight,
    in_orthogonal_sublattice,
    is_derived_simply_connected,
    levi_datum,
    lowest_weight_window,
    lowest_weights_equivalent,
    orthogonal_partitions,
    orthogonal_sublattice,
    probe_cocharacter,
    sub_datum,
)
from hecke.rootdatum.quotient import quotient_datum_isomorphic
from hecke.rootdatum.verifiers import verify_cone_lemmas

__all__ = [
    "Cocharacter",
    "ParabolicSubset",
    "Root",
    "RootDatum",
    "Weight",
    "cartan_type",
    "datum_violations",
    "dominance_leq",
    "fundamental_weight",
    "in_orthogonal_sublattice",
    "is_derived_simply_connected",
    "levi_datum",
    "list_builtin",
    "load_datum",
    "lowest_weight_window",
    "lowest_weights_equivalent",
    "mask",
    "orthogonal_partitions",
    "orthogonal_sublattice",
    "parse_datum",
    "positive_coroots",
    "probe_cocharacter",
    "quotient_datum_isomorphic",
    "shipped_data",
    "sub_datum",
    "subsets",
    "validate_datum",
    "verify_cone_lemmas",
    "weyl_group_order",
]
