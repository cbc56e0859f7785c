"""Exception types shared across the package."""


class GreeksError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedDimensionError(GreeksError):
    """Requested more coordinates than the Sobol' direction numbers support."""


class DomainError(GreeksError, ValueError):
    """Numeric argument outside the mathematical domain of an operation."""


class InvalidGridError(GreeksError, ValueError):
    """Time grid cannot support the requested construction (needs d >= 2)."""


class FactorizationError(GreeksError):
    """Covariance matrix could not be factorized (not symmetric positive definite)."""


class MissingPilotError(GreeksError, ValueError):
    """Gradient-PCA construction was requested without a pilot specification."""


class ShapeError(GreeksError, ValueError):
    """Array argument has the wrong shape for the operation."""


class DegenerateWeightError(GreeksError):
    """A weight denominator that is almost surely nonzero evaluated to ~0.

    This signals a bug in the caller's inputs rather than a recoverable
    numerical condition, so the sample is aborted instead of skipped.
    """


class OracleFailureError(GreeksError):
    """A reference computation (quadrature) failed to converge; the test
    relying on it must abort rather than silently pass."""


class ConfigError(GreeksError, ValueError):
    """Experiment configuration failed validation."""
