"""Exact scalar arithmetic.

Rationals are plain ``fractions.Fraction`` values: arbitrary precision,
always in lowest terms, positive denominator.  This module adds the string
form used in all CLI/JSON output ("num/den", bare "num" when den is 1) and
an exact complex extension with rational real and imaginary parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

Rational = Fraction

RationalLike = int | Fraction


def rational_to_str(x: RationalLike) -> str:
    """Serialize exactly, e.g. Fraction(-1, 6) -> "-1/6", Fraction(3) -> "3"."""
    return str(Fraction(x))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


def decimal_str(x: RationalLike, digits: int) -> str:
    """Fixed-point decimal rendering (display only; round half to even)."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits + 30
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar a + b*i with rational a, b."""

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    @staticmethod
    def of(value: "GaussianRational | RationalLike") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(Fraction(0), Fraction(1))

    @property
    def is_real(self) -> bool:
        return self.imag == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def norm(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.real * self.real + self.imag * self.imag

    def __bool__(self) -> bool:
        return self.real != 0 or self.imag != 0

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.of(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.of(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.real * other, self.imag * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.real / other, self.imag / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() / n

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GaussianRational(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        if self.imag == 0:
            return str(self.real)
        if self.real == 0:
            return f"{self.imag}i"
        sign = "+" if self.imag > 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"
