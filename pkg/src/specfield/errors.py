"""Exception hierarchy shared by the library and the CLI.

Each error class maps to a stable CLI exit code (see ``cli.EXIT_CODES``);
library users catch them as ordinary exceptions.
"""

from __future__ import annotations


class SpecfieldError(Exception):
    """Base class for all errors raised by this package."""


class MatrixFormatError(SpecfieldError):
    """Input could not be parsed as a valid Hermitian matrix."""


class HermiticityError(MatrixFormatError):
    """Matrix deviates from self-adjointness beyond the allowed tolerance."""


class DimensionMismatchError(SpecfieldError):
    """Operands have incompatible dimensions."""


class EigenConvergenceError(SpecfieldError):
    """The dense eigensolver failed to converge.

    Carries whatever diagnostic the backend exposes (LAPACK info code /
    message); the iteration count itself is not surfaced by the backend.
    """

    def __init__(self, message: str, info: int | None = None):
        super().__init__(message)
        self.info = info


class WellDefinednessError(SpecfieldError):
    """The requested value depends on an arbitrary eigenbasis choice.

    Raised when a vector field is evaluated at a spectrum with repeated
    eigenvalues without being block-constant there, or when the
    permutation-equivariant extension of a non-block-constant field is
    requested.
    """


class StructureViolationError(SpecfieldError):
    """The Jacobian does not have the permutation-forced block form.

    Carries the worst offending subblock and the fitted structure so
    callers can inspect how badly the constraint failed.
    """

    def __init__(self, message: str, worst_block: tuple[int, int] | None = None,
                 residual: float | None = None, structure=None):
        super().__init__(message)
        self.worst_block = worst_block
        self.residual = residual
        self.structure = structure


class EvaluationError(SpecfieldError):
    """A numeric evaluation produced NaN/Inf or left the field's domain."""


class ContourGapError(SpecfieldError):
    """Spectral gap too small to place a resolvent contour."""


class ContourConditioningError(SpecfieldError):
    """Contour passes too close to an eigenvalue; quadrature unreliable."""


class UnknownFieldError(SpecfieldError):
    """Requested vector field is not in the builtin catalog."""
