"""Evaluation result carrying a value, an error estimate and a method tag."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Method(enum.Enum):
    """How a value was produced; useful when auditing accuracy claims."""

    SERIES = "series"
    RECURRENCE_SHIFT = "recurrence_shift"
    ASYMPTOTIC = "asymptotic"
    REFLECTION = "reflection"
    TRANSFORM_NEAR_ONE = "transform_near_one"
    CLOSED_FORM = "closed_form"
    SOLVER = "solver"


@dataclass(frozen=True)
class EvalResult:
    """A computed value with a conservative absolute error estimate.

    ``value`` may be ``math.inf`` for quantities whose endpoint value is
    defined as a limit (for example the complete integral at r=1); the
    infinity marker is a legitimate result, not an error.
    """

    value: float
    abs_err_est: float
    method: Method

    def __post_init__(self):
        if self.abs_err_est < 0 or math.isnan(self.abs_err_est):
            raise ValueError("abs_err_est must be nonnegative")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    def __float__(self) -> float:
        return self.value
