"""
JSON schemas for inputs and reports.

Every document carries "schema": 1. Reports are written with sorted keys
so the same command always produces the same bytes.
"""
import json
from typing import Any, Optional, Type, TypeVar, Union

from pydantic import BaseModel, Field, ValidationError

from hecke.exceptions import SchemaError

SCHEMA_VERSION = 1

Model = TypeVar("Model", bound=BaseModel)


class Document(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")

    class Config:
        allow_population_by_field_name = True


# Inputs


class RootDatumModel(Document):
    name: str = "custom"
    rank: int
    simple_roots: list[list[int]]
    simple_coroots: list[list[int]]


class SmoothCharacterModel(BaseModel):
    unit_exponent: int = 0
    # Coefficients of the value at the uniformizer, constant term first.
    # A bare integer is accepted for prime fields.
    pi_value: Union[int, list[int]] = 1


class CharacterModel(Document):
    q: int
    field_degree: int = 1
    basis_chars: list[SmoothCharacterModel]
    # Defaults to the standard basis of X_*.
    basis: Optional[list[list[int]]] = None


class SupersingularDatumModel(BaseModel):
    label: str
    levi: list[int] = []
    basis_chars: list[SmoothCharacterModel]
    # Defaults to the Hermite basis of the lattice orthogonal to the levi.
    basis: Optional[list[list[int]]] = None


class SupersingularDataModel(Document):
    datum: Optional[str] = None
    q: int
    field_degree: int = 1
    data: list[SupersingularDatumModel]


class SatakeTermModel(BaseModel):
    weight: list[int] = Field(alias="lambda")
    coeff: Union[int, list[int]]

    class Config:
        allow_population_by_field_name = True


class SatakeBasisValueModel(BaseModel):
    lattice_vector: list[int]
    pi_value: Union[int, list[int]]


class SatakeParameterModel(BaseModel):
    levi: list[int]
    chi_basis: list[SatakeBasisValueModel]


# Reports


class LemmaReport(Document):
    lemma: str
    datum: str
    cases: int
    counterexamples: list[dict[str, Any]] = []
    reading: Optional[str] = None
    passed: bool = True


class PartitionReport(BaseModel):
    pi1: list[int]
    pi2: list[int]
    quotient_isomorphic: bool


class RootDataCheckReport(Document):
    datum: str
    valid: bool
    violations: list[str] = []
    cartan_matrix: list[list[int]] = []
    cartan_type: list[str] = []
    weyl_group_order: Optional[int] = None
    derived_simply_connected: Optional[bool] = None
    fundamental_weights: dict[str, list[int]] = {}
    probe_cocharacters: dict[str, list[int]] = {}
    orthogonal_partitions: list[PartitionReport] = []
    passed: bool = True


class LemmaSuiteReport(Document):
    datum: str
    bound: int
    lemmas: list[LemmaReport]
    passed: bool


class DescriptorModel(BaseModel):
    pi1: list[int]
    pi2: list[int]
    label: str
    inducing_parabolic: list[int]
    special_part: list[int]
    supersingular: bool
    satake: SatakeParameterModel


class EnumerationReport(Document):
    datum: str
    expected: int
    parameters: list[DescriptorModel]
    collisions: list[list[int]] = []
    injective: bool
    passed: bool


class PrincipalSeriesReport(Document):
    datum: str
    q: int
    C: int
    length: int
    irreducible: bool
    factors: list[DescriptorModel]


class ChangingWeightReport(Document):
    p: int
    m: int
    c: Optional[int] = None
    terms: list[SatakeTermModel]
    passed: bool


class HeckeRelationReport(Document):
    p: int
    relation: bool
    multiplicative: bool
    passed: bool


class ErrorReport(Document):
    error: str
    kind: str
    details: dict[str, Any] = {}


class SelftestItem(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelftestReport(Document):
    items: list[SelftestItem]
    passed: bool


def load_model(model: Type[Model], raw: Union[str, bytes, dict]) -> Model:
    """
    Parse a document, turning every parse or validation problem into
    SchemaError.
    """
    try:
        if isinstance(raw, dict):
            return model.parse_obj(raw)
        return model.parse_raw(raw)
    except ValidationError as exc:
        raise SchemaError(f"{model.__name__}: {exc}") from exc
    except ValueError as exc:
        raise SchemaError(f"{model.__name__}: invalid JSON: {exc}") from exc


def load_file(model: Type[Model], filename: str) -> Model:
    try:
        with open(filename, "r", encoding="utf-8") as f:
            raw = f.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {filename}: {exc}") from exc
    return load_model(model, raw)


def dump(model: BaseModel) -> str:
    return json.dumps(model.dict(by_alias=True), sort_keys=True, indent=2)
