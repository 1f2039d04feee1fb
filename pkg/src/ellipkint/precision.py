"""Shared precision settings and error types for the numeric routes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iteration failed to converge within its budget."""


class ToleranceNotReached(RuntimeError):
    """Quadrature exhausted its refinement levels above the requested tolerance."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class Precision:
    """Numeric working parameters.

    abs_tol        target absolute error for iterations / quadrature
    max_iterations AGM iteration budget
    max_level      tanh-sinh refinement levels (step halves per level)
    dps            significant decimal digits carried by the float type
    """

    abs_tol: float = 1e-12
    max_iterations: int = 200
    max_level: int = 12
    dps: int = 40

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be positive")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1")
        if self.max_level < 1:
            raise DomainError("max_level must be >= 1")
        if self.dps < 15:
            raise DomainError("dps must be >= 15")

    @property
    def working_dps(self) -> int:
        # guard digits over the requested precision
        return self.dps + 10

    def workdps(self):
        return mpmath.workdps(self.working_dps)


DEFAULT_PRECISION = Precision()


def to_mpf(x) -> mpf:
    """Convert reals (including Fraction) to mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)
