"""Arithmetic in a real quadratic field Q(sqrt(d)) plus formal square roots.

QuadExt is a + b*sqrt(d) with rational a, b and square-free d > 0 (d = 1 is
the plain rationals).  Surd is a formal sqrt of a positive QuadExt with a
rational scale factor pulled out front; normalization extracts rational
square factors from the radicand and demotes radicands that are perfect
squares inside their own field.  Square factors whose root leaves the field
(e.g. 2+sqrt(3) = (1+sqrt(3))**2 / 2) are deliberately left nested; see
surd_denest for the optional cosmetic rewrite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath
from mpmath import mpf

from .precision import DomainError, to_mpf


def square_part(n: int) -> tuple[int, int]:
    """n = s**2 * f with f square-free; returns (s, f).  Requires n > 0."""
    if n <= 0:
        raise DomainError("square_part requires a positive integer")
    s, f = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            count = 0
            while n % p == 0:
                n //= p
                count += 1
            s *= p ** (count // 2)
            if count % 2:
                f *= p
        p += 1 if p == 2 else 2
    return s, f * n


def is_squarefree(n: int) -> bool:
    return n >= 1 and square_part(n)[0] == 1


def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(d) with rational a, b; d square-free positive, d=1 rational."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not is_squarefree(self.d):
            raise DomainError(f"d must be a square-free positive integer, got {self.d}")
        if self.d == 1 and self.b != 0:
            # fold sqrt(1) into the rational part
            object.__setattr__(self, "a", self.a + self.b)
            object.__setattr__(self, "b", Fraction(0))
        if self.b == 0 and self.d != 1:
            object.__setattr__(self, "d", 1)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _coerce(x, d: int) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExt(Fraction(x), Fraction(0), 1)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(sqrt(d))")

    def _same_field(self, other: "QuadExt") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise DomainError(f"mixed quadratic fields d={self.d} and d={other.d}")

    # -- ring / field operations ------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other, self.d)
        except TypeError:
            return NotImplemented
        d = self._same_field(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            other = self._coerce(other, self.d)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other, self.d)
        except TypeError:
            return NotImplemented
        d = self._same_field(other)
        return QuadExt(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        try:
            other = self._coerce(other, self.d)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        d = self._same_field(other)
        n = other.norm()
        conj = other.conjugate()
        num = self * conj
        return QuadExt(num.a / n, num.b / n, d)

    def __rtruediv__(self, other):
        return self._coerce(other, self.d) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return QuadExt(1) / self ** (-exponent)
        result = QuadExt(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Sign of the real value a + b*sqrt(d), computed exactly."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # mixed signs: compare a^2 with b^2 d
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if self.a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return 1 if lhs < rhs else -1  # a < 0, b > 0

    def __abs__(self) -> "QuadExt":
        return self if self.sign() >= 0 else -self

    def sqrt_in_field(self) -> Optional["QuadExt"]:
        """The positive x + y*sqrt(d) with (x+y*sqrt(d))**2 == self, if any."""
        if self.is_zero():
            return QuadExt(Fraction(0))
        if self.sign() < 0:
            return None
        if self.b == 0:
            root = _sqrt_fraction(self.a)
            return QuadExt(root) if root is not None else None
        disc = _sqrt_fraction(self.norm())
        if disc is None:
            return None
        for candidate in ((self.a + disc) / 2, (self.a - disc) / 2):
            x = _sqrt_fraction(candidate)
            if x is not None and x != 0:
                y = self.b / (2 * x)
                root = QuadExt(x, y, self.d)
                if root * root == self:
                    return abs(root)
        return None

    def to_mpf(self) -> mpf:
        value = to_mpf(self.a)
        if self.b:
            value += to_mpf(self.b) * mpmath.sqrt(self.d)
        return value

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.d}))"


@dataclass(frozen=True)
class Surd:
    """rational_scale * sqrt(radicand) with radicand a positive QuadExt."""

    radicand: QuadExt
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.radicand.sign() <= 0:
            raise DomainError("surd radicand must be positive")

    def is_unit(self) -> bool:
        return self.radicand == QuadExt(Fraction(1)) and self.scale == 1

    def to_mpf(self) -> mpf:
        return to_mpf(self.scale) * mpmath.sqrt(self.radicand.to_mpf())

    def __repr__(self):
        if self.scale == 1:
            return f"Surd(sqrt({self.radicand}))"
        return f"Surd({self.scale}*sqrt({self.radicand}))"


UNIT_SURD = Surd(QuadExt(Fraction(1)))


def surd_normalize(s: Surd) -> Union[Surd, QuadExt]:
    """Canonical form of a surd.

    Rational square factors of the radicand move into the scale, leaving an
    integer radicand with square-free content; a radicand that is a perfect
    square inside its field collapses the surd to a QuadExt.
    """
    r = s.radicand
    den = math.lcm(r.a.denominator, r.b.denominator)
    ai = r.a.numerator * (den // r.a.denominator) * den
    bi = r.b.numerator * (den // r.b.denominator) * den
    # r == (ai + bi*sqrt(d)) / den**2 with integer ai, bi
    g = math.gcd(ai, bi)
    sq, _ = square_part(g)
    radicand = QuadExt(Fraction(ai // (sq * sq)), Fraction(bi // (sq * sq)), r.d)
    scale = s.scale * Fraction(sq, den)
    root = radicand.sqrt_in_field()
    if root is not None:
        return scale * root
    return Surd(radicand, scale)


def surd_denest(s: Surd) -> Optional[tuple[Surd, Surd]]:
    """Denest sqrt(a + b*sqrt(d)) as sqrt(x) + sqrt(y) when possible.

    Works when rho = sqrt(a**2 - b**2*d) is rational; then
    sqrt(a + b*sqrt(d)) = sqrt((a+rho)/2) + sign(b)*sqrt((a-rho)/2).
    Returns the two rational-radicand surds of the sum, or None.  This is a
    cosmetic rewrite (the result leaves Q(sqrt(d))) and is never applied
    automatically.
    """
    r = s.radicand
    if r.b == 0:
        return None
    rho = _sqrt_fraction(r.norm())
    if rho is None:
        return None
    first = (r.a + rho) / 2
    second = (r.a - rho) / 2
    if second < 0:
        return None
    sign = 1 if r.b > 0 else -1
    lhs = surd_normalize(Surd(QuadExt(first), s.scale))
    rhs = surd_normalize(Surd(QuadExt(second), s.scale * sign))
    def as_surd(x):
        return x if isinstance(x, Surd) else Surd(QuadExt(Fraction(1)), x.a)
    return as_surd(lhs), as_surd(rhs)
