"""Exception hierarchy shared by the model, certifiers and the CLI."""

from __future__ import annotations

from .series import NearZeroConstantTerm


class ModelError(ValueError):
    """A function descriptor does not define a valid member of the class."""


class NotNormalized(ModelError):
    pass


class PoleMissingAtP(ModelError):
    pass


class DegeneratePole(ModelError):
    pass


class ExtraPoleInDisk(ModelError):
    pass


class ZeroInDisk(ModelError):
    pass


class InvalidLambda(ModelError):
    pass


class InvalidParameter(ModelError):
    pass


class BadOrder(ValueError):
    pass


class DegenerateDerivative(ValueError):
    pass


class ConsistencyError(ArithmeticError):
    """Two independent computation routes disagree beyond tolerance."""


class DescriptorError(ValueError):
    """Malformed JSON descriptor; ``where`` names the line or field."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


__all__ = [
    "ModelError",
    "NotNormalized",
    "PoleMissingAtP",
    "DegeneratePole",
    "ExtraPoleInDisk",
    "ZeroInDisk",
    "InvalidLambda",
    "InvalidParameter",
    "BadOrder",
    "DegenerateDerivative",
    "ConsistencyError",
    "DescriptorError",
    "NearZeroConstantTerm",
]
