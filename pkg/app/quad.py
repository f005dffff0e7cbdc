"""Exact scalars a + b*sqrt(p) with rational a, b.

sqrt(p) is kept formal even when p is a perfect square, so equality and the
zero test compare the (a, b) pairs.
"""
from fractions import Fraction
from typing import Union

from app.errors import ArgumentError, CertificationError

Scalar = Union[int, Fraction, "QuadScalar"]


class QuadScalar:
    __slots__ = ("a", "b", "p")

    def __init__(self, a=0, b=0, p: int = 2):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.p = p

    @classmethod
    def sqrt(cls, p: int) -> "QuadScalar":
        return cls(0, 1, p)

    def _coerce(self, other: Scalar) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other.p != self.p:
                raise ArgumentError(f"Cannot mix sqrt({self.p}) and sqrt({other.p})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.p)
        return NotImplemented

    def __add__(self, other: Scalar) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.a + other.a, self.b + other.b, self.p)

    __radd__ = __add__

    def __neg__(self) -> "QuadScalar":
        return QuadScalar(-self.a, -self.b, self.p)

    def __sub__(self, other: Scalar) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.a - other.a, self.b - other.b, self.p)

    def __rsub__(self, other: Scalar) -> "QuadScalar":
        return -self + other

    def __mul__(self, other: Scalar) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(
            self.a * other.a + self.p * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.p,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.p)

    def norm(self) -> Fraction:
        return self.a * self.a - self.p * self.b * self.b

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_pure(self) -> bool:
        """Rational or a rational multiple of sqrt(p)"""
        return not self.a or not self.b

    def inverse(self) -> "QuadScalar":
        if self.is_zero():
            raise ZeroDivisionError("QuadScalar division by zero")
        if not self.b:
            return QuadScalar(1 / self.a, 0, self.p)
        if not self.a:
            return QuadScalar(0, 1 / (self.b * self.p), self.p)
        n = self.norm()
        if not n:
            raise CertificationError(f"{self} is a zero divisor for the perfect square p={self.p}")
        return self.conjugate() * QuadScalar(1 / n, 0, self.p)

    def __truediv__(self, other: Scalar) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "QuadScalar":
        return self.inverse() * other

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        if isinstance(other, QuadScalar):
            return self.p == other.p and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.p))

    def __repr__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt({self.p})"
        return f"{self.a} + {self.b}*sqrt({self.p})"
