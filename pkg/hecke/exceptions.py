"""
Exceptions raised by the hecke library.

Every exception carries the process exit status the CLI should use:
2 for rejected input, 1 for a verification that ran and failed.
"""
from typing import Any, Optional

EXIT_FAILED = 1
EXIT_INPUT = 2


class HeckeException(Exception):
    def __init__(self, msg: Optional[str] = None, exit_code: int = EXIT_INPUT):
        super().__init__(msg)
        self.msg = msg
        self.exit_code = exit_code

    def details(self) -> dict[str, Any]:
        return {}


class SchemaError(HeckeException):
    pass


class DimensionMismatch(HeckeException):
    pass


class InvalidDatum(HeckeException):
    def __init__(self, violations: list[str], msg: Optional[str] = None):
        super().__init__(msg or "; ".join(violations))
        self.violations = violations

    def details(self) -> dict[str, Any]:
        return {"violations": self.violations}


class NonCartan(InvalidDatum):
    pass


class InfiniteType(InvalidDatum):
    pass


class UnknownDatum(HeckeException):
    pass


class NoIntegralLift(HeckeException):
    pass


class NotSimplyConnected(HeckeException):
    pass


class BadPartition(HeckeException):
    pass


class GroupTooLarge(HeckeException):
    pass


class NotDominantOrAntiDominant(HeckeException):
    pass


class FieldMismatch(HeckeException):
    pass


class ExtensionRequired(HeckeException):
    def __init__(self, degree: int, msg: Optional[str] = None):
        super().__init__(
            msg or f"computation needs a field extension of degree {degree}"
        )
        self.degree = degree

    def details(self) -> dict[str, Any]:
        return {"degree": self.degree}


class NotInLattice(HeckeException):
    pass


class NotDominant(HeckeException):
    pass


class InvalidSatakeParameter(HeckeException):
    pass


class InconsistentOracle(HeckeException):
    pass


class CorootNotContained(HeckeException):
    pass


class SearchSpaceTooLarge(HeckeException):
    pass


class InvalidParameter(HeckeException):
    def __init__(self, violations: list[str], msg: Optional[str] = None):
        super().__init__(msg or "; ".join(violations))
        self.violations = violations

    def details(self) -> dict[str, Any]:
        return {"violations": self.violations}


class WindowViolated(HeckeException):
    pass


class IncompatibleWeights(HeckeException):
    pass


class UnsupportedPrime(HeckeException):
    pass


class IdentityFailed(HeckeException):
    def __init__(self, transform: dict[str, Any], msg: Optional[str] = None):
        super().__init__(
            msg or "Satake transform does not have the expected shape",
            exit_code=EXIT_FAILED,
        )
        self.transform = transform

    def details(self) -> dict[str, Any]:
        return {"transform": self.transform}


class InvalidSubset(HeckeException):
    pass
