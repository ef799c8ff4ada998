"""
Exception hierarchy for cellricci.

Every error raised on purpose by the library derives from CellRicciError so
callers (and the CLI) can separate input problems from failed verifications.
"""

from typing import Any, Optional


class CellRicciError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(CellRicciError, ValueError):
    """A parameter is outside the documented domain (n = 0, k < 4, bad alpha, ...)."""


class ComplexFormatError(CellRicciError):
    """The cell/face text format could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class ComplexValidationError(CellRicciError):
    """A complex failed the structural checks a computation relies on."""

    def __init__(self, message: str, report: Any = None) -> None:
        self.report = report
        super().__init__(message)


class StructuralError(CellRicciError):
    """A structural identity (counting proposition, Lipschitz witness, ...) does not hold."""


class UndefinedMeasureError(CellRicciError):
    """m^alpha is undefined at a cell of degree 0."""


class TransportError(CellRicciError):
    """A transport problem is infeasible or its certificate is inconsistent."""


class CouplingFeasibilityError(TransportError):
    """An explicit coupling table has an entry outside [0, 1] at the requested alpha."""


class LimitNotStabilizedError(CellRicciError):
    """kappa_alpha / (1 - alpha) did not stabilise before the iteration cap."""


class SpectralError(CellRicciError):
    """Eigen-solve failure: asymmetric input, no convergence or an ambiguous gap."""


class BochnerIdentityError(CellRicciError):
    """Ric(omega) deviates from (2 - #N0) * omega^2 beyond tolerance."""


__all__ = [
    "CellRicciError",
    "InvalidParameterError",
    "ComplexFormatError",
    "ComplexValidationError",
    "StructuralError",
    "UndefinedMeasureError",
    "TransportError",
    "CouplingFeasibilityError",
    "LimitNotStabilizedError",
    "SpectralError",
    "BochnerIdentityError",
]
