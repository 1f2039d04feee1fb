"""Exact closed forms for the integral family.

The n-th derivative of F(z) = ArcCot(sqrt(z)) / sqrt(z(z+1)) stays in the shape

    F^(n)(z) = [A_n(z)*ArcCot(sqrt(z)) + B_n(z)*sqrt(z)] / (c_n * (z(z+1))^(n+1/2))

with integer-coefficient polynomials A_n, B_n and c_n = 2**n, because the
shape closes under differentiation:

    A_{m+1} = 2z(z+1)A'_m - (2m+1)(2z+1)A_m
    B_{m+1} = 2z(z+1)B'_m - ((4m+1)z + 2m)B_m - A_m
    c_{m+1} = 2*c_m

The family value is then I_n(z) = (-2)**n / (2n+1)!! * F^(n)(z).  The
recurrence is cross-checked against quadrature and finite differences by the
verification suite before anything downstream trusts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

from .polynomials import Polynomial
from .precision import DomainError, to_mpf

_Z = Polynomial([0, 1])
_TWO_Z_ZP1 = Polynomial([0, 2, 2])  # 2z(z+1)


def double_factorial_odd(n: int) -> int:
    """(2n+1)!! = 1*3*5*...*(2n+1)."""
    result = 1
    for i in range(3, 2 * n + 2, 2):
        result *= i
    return result


@dataclass(frozen=True)
class ClosedForm:
    n: int
    A: Polynomial
    B: Polynomial
    c: int

    @property
    def prefactor(self) -> Fraction:
        """(-2)**n / ((2n+1)!! * c_n), the scalar in front of the bracket."""
        return Fraction((-2) ** self.n, double_factorial_odd(self.n) * self.c)


@lru_cache(maxsize=None)
def closed_form(n: int) -> ClosedForm:
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    if n == 0:
        return ClosedForm(0, Polynomial([1]), Polynomial(), 1)
    prev = closed_form(n - 1)
    m = n - 1
    A = _TWO_Z_ZP1 * prev.A.derivative() - (2 * m + 1) * Polynomial([1, 2]) * prev.A
    B = (
        _TWO_Z_ZP1 * prev.B.derivative()
        - Polynomial([2 * m, 4 * m + 1]) * prev.B
        - prev.A
    )
    return ClosedForm(n, A, B, 2 * prev.c)


def _poly_mpf(p: Polynomial, z: mpf) -> mpf:
    value = mpf(0)
    for c in reversed(p.coefficients):
        value = value * z + to_mpf(c)
    return value


def In_exact_real(n: int, z, dps: int = 40) -> mpf:
    """Floating-point evaluation of the closed-form route for I_n(z)."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    with mpmath.workdps(dps + 10):
        z = to_mpf(z)
        if z <= 0:
            raise DomainError("z must be positive")
        form = closed_form(n)
        arccot = mpmath.atan(1 / mpmath.sqrt(z))
        bracket = _poly_mpf(form.A, z) * arccot / mpmath.sqrt(z * (z + 1)) + _poly_mpf(
            form.B, z
        ) / mpmath.sqrt(z + 1)
        return to_mpf(form.prefactor) * bracket / (z * (z + 1)) ** n
