"""Exception types shared across the package."""


class TreebecError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(TreebecError):
    """Requested graph exceeds the configured vertex budget."""


class InvalidKindError(TreebecError):
    """Perturbation kind parameters are structurally invalid (e.g. q >= Q)."""


class DomainError(TreebecError):
    """Argument lies on the spectral branch cut, outside the analytic domain."""


class SizeLimitError(TreebecError):
    """Dense computation requested above the configured size limit."""


class ConvergenceError(TreebecError):
    """Iterative solver failed to reach tolerance.

    Carries the last residual and iteration count when available.
    """

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class PreconditionError(TreebecError):
    """A mathematical precondition was violated (e.g. indefinite shift)."""


class NoCrossingError(TreebecError):
    """Secular norm never reaches 1 above the band edge at this truncation."""


class NearSingularError(TreebecError):
    """Linear system too close to singular to solve reliably."""

    def __init__(self, message, smallest_eigenvalue=None):
        super().__init__(message)
        self.smallest_eigenvalue = smallest_eigenvalue


class DegreeCapError(TreebecError):
    """Polynomial expansion degree cap exceeded; raise the cap to proceed."""


class RefusalError(TreebecError):
    """Requested object does not exist for this model class."""


class StaleEstimateError(TreebecError):
    """A norm estimate does not belong to the model it is used with."""


class ConfigError(TreebecError):
    """Run configuration failed validation."""
