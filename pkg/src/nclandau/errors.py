"""Exception types shared across the package."""


class NCLandauError(Exception):
    """Base class for all errors raised by nclandau."""


class ConfigurationError(NCLandauError):
    """Inconsistent setup: mismatched hbar, bad grid, invalid run config."""


class DomainError(NCLandauError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DegenerateRegimeError(NCLandauError):
    """Effective-oscillator prefactor is non-positive; the closed-form
    spectrum assumes a positive frequency."""


class StructuralError(NCLandauError):
    """An operator polynomial does not have the expected symmetric-gauge
    Landau structure."""


class AccuracyError(NCLandauError):
    """A numerical estimate failed its self-convergence check."""
