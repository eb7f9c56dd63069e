"""Exception hierarchy shared by all nldtn modules."""

from __future__ import annotations


class NldtnError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDim(NldtnError):
    """Dimension outside the supported set."""


class InvalidResolution(NldtnError):
    """Grid resolution too coarse."""


class InvalidParam(NldtnError):
    """Parameter outside its admissible range."""


class GridMismatch(NldtnError):
    """Operands live on different grids."""


class NotPositive(NldtnError):
    """Conductivity violates the uniform positivity bound."""


class NoConvergence(NldtnError):
    """Linear solver hit its iteration cap above tolerance."""


class NonContraction(NldtnError):
    """Fixed-point iteration diverged; boundary data too large."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotNull(NldtnError):
    """Complex frequency vector fails the null condition rho.rho = 0."""


class InconsistentSamples(NldtnError):
    """Probe samples violate an algebraic consistency relation."""


class BadIndices(NldtnError):
    """Axis indices outside 1..3 or unordered."""


class NotNormalized(NldtnError):
    """Frame weights fail alpha^2 + beta^2 = 1."""


class QuadratureBudget(NldtnError):
    """Quadrature failed to reach its accuracy target."""


class NonMonotone(NldtnError):
    """Extrapolation input has no stable leading-order behaviour."""


class IllConditioned(NldtnError):
    """Recovery system condition number above the admissible bound."""


class MissingProbe(NldtnError):
    """Measurement set lacks a required (frame, axis) entry."""


class ConfigInvalid(NldtnError):
    """Experiment configuration failed schema validation."""


class IoError(NldtnError):
    """Report files could not be written."""
