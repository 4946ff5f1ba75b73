"""Exception types shared by the kernel and the verification harness."""


class SpecfunError(Exception):
    """Base class for all kernel errors."""


class DomainError(SpecfunError, ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation exactly at a pole (e.g. gamma at a nonpositive integer)."""


class ParameterError(SpecfunError, ValueError):
    """Parameter combination violates an admissibility constraint."""


class RegimeError(SpecfunError, ValueError):
    """Argument is valid but outside the regime this routine handles."""


class ConvergenceError(SpecfunError, RuntimeError):
    """Series or iteration failed to converge within its budget.

    ``partial`` carries whatever partial result was available (for a
    truncated series, a SeriesEval with ``converged=False``).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConfigurationError(SpecfunError, ValueError):
    """Invalid configuration value (unknown option, out-of-range setting)."""


class QuadratureError(SpecfunError, RuntimeError):
    """Adaptive quadrature failed to reach its accuracy target."""
