"""Shared exception types."""


class CompliantWingError(Exception):
    """Base class for all package errors."""


class ConfigurationError(CompliantWingError):
    """Inconsistent or invalid configuration (dimension mismatch, bad parameter)."""


class DomainError(CompliantWingError):
    """Input outside the physical or trained domain."""


class NumericsError(CompliantWingError):
    """Numerical failure (root bracketing, singular matrix, instability)."""


class UnsupportedOrderError(CompliantWingError):
    """Requested derivative order not supported."""


class TrainingDivergedError(CompliantWingError):
    """Non-finite loss or gradient during network training."""


class DivergenceError(CompliantWingError):
    """Simulated state became non-finite."""


class ExtrapolationError(DomainError):
    """Query outside the domain a surrogate was trained on."""
