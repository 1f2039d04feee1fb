"""Exact values of the family at algebraic special points.

At a special point z the three ingredients of the closed form become
algebraic: sqrt(z) and z itself live in a quadratic field, and
ArcCot(sqrt(z)) is a rational multiple of pi.  The exact value then takes the
shape  coeff_pi * pi / surd_pi + coeff_alg / surd_alg  with quadratic-field
coefficients and normalized denominator radicals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

from .closedform import closed_form
from .precision import DomainError, to_mpf
from .quadfield import UNIT_SURD, QuadExt, Surd, surd_normalize

_ZERO = QuadExt(Fraction(0))
_ONE = QuadExt(Fraction(1))


@dataclass(frozen=True)
class SpecialPoint:
    """(z, theta, d) with ArcCot(sqrt(z)) = theta*pi and z in Q(sqrt(d))."""

    label: str
    z: QuadExt
    theta_over_pi: Fraction
    field_d: int

    def __post_init__(self):
        if self.z.sign() <= 0:
            raise DomainError("special point must have z > 0")
        if not 0 < self.theta_over_pi < Fraction(1, 2):
            raise DomainError("theta/pi must lie in (0, 1/2)")


CATALOG: dict[str, SpecialPoint] = {
    p.label: p
    for p in (
        SpecialPoint("1", QuadExt(Fraction(1)), Fraction(1, 4), 1),
        SpecialPoint("3", QuadExt(Fraction(3)), Fraction(1, 6), 1),
        SpecialPoint("1/3", QuadExt(Fraction(1, 3)), Fraction(1, 3), 1),
        # Cot^2(pi/10) = 5 + 2*sqrt(5)
        SpecialPoint("cot2-pi-10", QuadExt(Fraction(5), Fraction(2), 5), Fraction(1, 10), 5),
        # Cot^2(pi/12) = 7 + 4*sqrt(3)
        SpecialPoint("cot2-pi-12", QuadExt(Fraction(7), Fraction(4), 3), Fraction(1, 12), 3),
    )
}


@dataclass(frozen=True)
class ExactValue:
    """pi_coeff*pi/pi_surd + alg_coeff/alg_surd, all surds normalized."""

    pi_coeff: QuadExt
    pi_surd: Surd
    alg_coeff: QuadExt
    alg_surd: Surd

    def is_zero(self) -> bool:
        return self.pi_coeff.is_zero() and self.alg_coeff.is_zero()

    def to_mpf(self, dps: int = 40) -> mpf:
        with mpmath.workdps(dps + 10):
            value = mpf(0)
            if not self.pi_coeff.is_zero():
                value += self.pi_coeff.to_mpf() * mpmath.pi / self.pi_surd.to_mpf()
            if not self.alg_coeff.is_zero():
                value += self.alg_coeff.to_mpf() / self.alg_surd.to_mpf()
            return +value


def _normalized_term(raw, radical: QuadExt) -> tuple[QuadExt, Surd]:
    """Canonicalize raw / sqrt(radical) into (coefficient, unit-scale surd)."""
    if not isinstance(raw, QuadExt):
        raw = QuadExt(Fraction(raw))
    if raw.is_zero():
        return _ZERO, UNIT_SURD
    normalized = surd_normalize(Surd(radical))
    if isinstance(normalized, QuadExt):  # radical was a perfect square
        return raw / normalized, UNIT_SURD
    coeff = raw / normalized.scale
    return coeff, Surd(normalized.radicand)


def make_exact_value(pi_raw: QuadExt, pi_radical: QuadExt, alg_raw: QuadExt, alg_radical: QuadExt) -> ExactValue:
    pi_coeff, pi_surd = _normalized_term(pi_raw, pi_radical)
    alg_coeff, alg_surd = _normalized_term(alg_raw, alg_radical)
    return ExactValue(pi_coeff, pi_surd, alg_coeff, alg_surd)


def eval_at_special(n: int, point: SpecialPoint) -> ExactValue:
    """Exact I_n(z) at a special point, via the closed-form recurrence."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    form = closed_form(n)
    z = point.z
    zp1 = z + 1
    power = (z * zp1) ** n
    prefactor = form.prefactor  # Fraction
    pi_raw = prefactor * point.theta_over_pi * form.A(z) / power
    alg_raw = prefactor * form.B(z) / power
    return make_exact_value(pi_raw, z * zp1, alg_raw, zp1)


def relation(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Rationals (P, Q) with sqrt(2)*I_n(1) + P*sqrt(2)*I_m(1) + Q = 0.

    Uses the exact decomposition sqrt(2)*I_k(1) = a_k + b_k*pi.
    """
    a_n, b_n = in1_pair(n)
    a_m, b_m = in1_pair(m)
    if b_m == 0:
        raise DomainError(f"relation undefined: pi-coefficient of I_{m}(1) is zero")
    P = -b_n / b_m
    Q = -a_n - P * a_m
    return P, Q


def in1_pair(k: int) -> tuple[Fraction, Fraction]:
    """(a_k, b_k) with sqrt(2)*I_k(1) = a_k + b_k*pi, exactly."""
    value = eval_at_special(k, CATALOG["1"])
    # at z = 1 both surds are sqrt(2) (or absent for zero terms)
    sqrt2 = Surd(QuadExt(Fraction(2)))
    for coeff, surd in ((value.pi_coeff, value.pi_surd), (value.alg_coeff, value.alg_surd)):
        if not coeff.is_zero() and surd != sqrt2:
            raise AssertionError(f"unexpected surd at z=1: {surd}")
        if not coeff.is_rational():
            raise AssertionError(f"unexpected irrational coefficient at z=1: {coeff}")
    return value.alg_coeff.a, value.pi_coeff.a
