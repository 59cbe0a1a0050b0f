"""Gaussian rationals: Q extended by the imaginary unit."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _norm_scalar(c):
    """Collapse integral Fractions to int so equality and hashing stay cheap."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, bool):
        return int(c)
    return c


class GaussianRational:
    """re + im*i with rational parts. Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            raise TypeError("GaussianRational parts must be rational")
        object.__setattr__(self, "re", _norm_scalar(Fraction(re) if not isinstance(re, int) else re))
        object.__setattr__(self, "im", _norm_scalar(Fraction(im) if not isinstance(im, int) else im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, Rational):
            return cls(other, 0)
        return None

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return _norm_scalar(Fraction(self.re * self.re + self.im * self.im))

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(Fraction(self.re) / n, Fraction(-self.im) / n)

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = GaussianRational(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}*i"
        if self.re == 0:
            return im
        if im.startswith("-"):
            return f"{self.re} - {im[1:]}"
        return f"{self.re} + {im}"


I = GaussianRational(0, 1)
