"""Truncated power series with exact rational coefficients.

A :class:`RatSeries` holds coefficients a_0 .. a_N of a series truncated at
order N.  Arithmetic between two series truncates to the smaller order.
Everything is exact ``fractions.Fraction`` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Tuple


@dataclass(frozen=True)
class RatSeries:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @staticmethod
    def zero(order: int) -> "RatSeries":
        return RatSeries((Fraction(0),) * (order + 1))

    @staticmethod
    def identity(order: int) -> "RatSeries":
        """The series x."""
        if order < 1:
            raise ValueError("order must be at least 1 for the identity series")
        return RatSeries((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def egf_value(self, n: int) -> Fraction:
        """n! times the n-th coefficient."""
        return factorial(n) * self.coefficient(n)

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return RatSeries(self.coeffs[: order + 1])

    def __neg__(self) -> "RatSeries":
        return RatSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: n + 1])

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return RatSeries(tuple(out))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "RatSeries":
        c = Fraction(c)
        return RatSeries(tuple(c * a for a in self.coeffs))

    def scale_arg(self, c) -> "RatSeries":
        """The series f(c*x)."""
        c = Fraction(c)
        out = []
        power = Fraction(1)
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return RatSeries(tuple(out))

    def exp(self) -> "RatSeries":
        """exp(f) for a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc += k * self.coeffs[k] * out[m - k]
            out[m] = acc / m
        return RatSeries(tuple(out))

    def log1p(self) -> "RatSeries":
        """log(1 + f) for a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("log1p needs a zero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = m * self.coeffs[m]
            for j in range(1, m):
                acc -= (m - j) * self.coeffs[j] * out[m - j]
            out[m] = acc / m
        return RatSeries(tuple(out))

    def pow1p(self, exponent) -> "RatSeries":
        """(1 + f) ** exponent for rational exponents, f with zero constant
        term."""
        return (Fraction(exponent) * self.log1p()).exp()

    def even_part(self) -> "RatSeries":
        """The series keeping only even powers: (f(x) + f(-x)) / 2."""
        return Fraction(1, 2) * (self + self.scale_arg(-1))


def lambert_w(order: int) -> RatSeries:
    """Series of the Lambert W function, W(x) = sum (-n)^(n-1) x^n / n!.

    Satisfies W(x) * exp(W(x)) = x; the signed reversal -W(-x) is the
    exponential generating function of rooted labeled trees, n^(n-1).
    """
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(Fraction((-n) ** (n - 1), factorial(n)))
    return RatSeries(tuple(coeffs))
