from hecke.scalars.characters import (
    SmoothCharacter,
    TorusCharacterDatum,
    character_from_model,
    compose_with_cocharacter,
    field_for,
    is_trivial,
    smooth_from_model,
    trivial_character,
)
from hecke.scalars.field import CONWAY, Field, FieldElement, get_field, prime_power

__all__ = [
    "CONWAY",
    "Field",
    "FieldElement",
    "SmoothCharacter",
    "TorusCharacterDatum",
    "character_from_model",
    "compose_with_cocharacter",
    "field_for",
    "get_field",
    "is_trivial",
    "prime_power",
    "smooth_from_model",
    "trivial_character",
]
