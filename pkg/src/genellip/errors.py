"""Exception hierarchy shared by all evaluation modules.

The CLI maps these onto process exit codes: domain-type errors (bad inputs,
poles, wrong regime, out-of-range degree) exit with 2, convergence failures
with 3.
"""


class GenellipError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GenellipError):
    """An argument lies outside the domain of the requested function."""


class ParameterError(DomainError):
    """A parameter tuple violates its validity constraints."""


class PoleError(DomainError):
    """Evaluation requested at a pole (gamma at a nonpositive integer)."""


class RegimeError(DomainError):
    """A specialized routine was called outside its regime of validity."""


class SaturationError(DomainError):
    """The degree K lies outside [1e-3, 1e3]; the modular function would
    saturate to 0 or 1 in double precision.  The saturated endpoint is
    carried in ``endpoint`` so callers can decide to use it explicitly."""

    def __init__(self, message: str, endpoint: float):
        super().__init__(message)
        self.endpoint = endpoint


class ConvergenceError(GenellipError):
    """An iteration budget was exhausted before reaching tolerance."""
