"""Quadratic extensions u + v*sqrt(D) over an exact base field.

The discriminant D is any base-ring element that is not a square; it is
kept formal, so an element is zero exactly when both components are zero
and no identity check ever depends on a choice of square root.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .gaussian import GaussianRational
from .poly import DensePolynomial
from .ratfunc import RationalFunction


class IncompatibleExtensionError(ValueError):
    """Operands live in quadratic extensions with different discriminants."""


_BASE_TYPES = (int, Fraction, GaussianRational, RationalFunction, DensePolynomial)


def _div(a, b):
    if isinstance(a, Rational) and isinstance(b, Rational):
        return Fraction(a) / b
    return a / b


def _base(c):
    if isinstance(c, DensePolynomial):
        return RationalFunction(c)
    return c


class QuadraticElement:
    """u + v*sqrt(disc); immutable."""

    __slots__ = ("u", "v", "disc")

    def __init__(self, u, v, disc):
        object.__setattr__(self, "u", _base(u))
        object.__setattr__(self, "v", _base(v))
        object.__setattr__(self, "disc", _base(disc))

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticElement is immutable")

    def _lift(self, other):
        if isinstance(other, QuadraticElement):
            if other.disc != self.disc:
                if other.v == 0:
                    return QuadraticElement(other.u, 0, self.disc)
                if self.v == 0:
                    # self is really a base element; adopt other's context
                    return other
                raise IncompatibleExtensionError(
                    f"sqrt({self.disc}) and sqrt({other.disc}) are different extensions")
            return other
        if isinstance(other, _BASE_TYPES) or isinstance(other, Rational):
            return QuadraticElement(other, 0, self.disc)
        return None

    def _disc_for(self, other):
        return self.disc if self.v != 0 or other.v == 0 else other.disc

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.u + o.u, self.v + o.v, self._disc_for(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.u, -self.v, self.disc)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.u - o.u, self.v - o.v, self._disc_for(o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return QuadraticElement(self.u * other, self.v * other, self.disc)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return quad_mul(self, o)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticElement(self.u, -self.v, self.disc)

    def norm(self):
        """u^2 - v^2*disc, an element of the base field."""
        return self.u * self.u - self.v * self.v * self.disc

    def inverse(self):
        return quad_inv(self)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            f = Fraction(1, other) if isinstance(other, int) else 1 / Fraction(other)
            return QuadraticElement(self.u * f, self.v * f, self.disc)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            if o.u == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticElement(_div(self.u, o.u), _div(self.v, o.u), self.disc)
        return self * quad_inv(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * quad_inv(self)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = quad_inv(self), -e
        result = QuadraticElement(1, 0, self.disc)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_zero(self):
        return self.u == 0 and self.v == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadraticElement):
            if other.disc != self.disc:
                return self.v == 0 and other.v == 0 and self.u == other.u
            return self.u == other.u and self.v == other.v
        if isinstance(other, _BASE_TYPES) or isinstance(other, Rational):
            return self.v == 0 and self.u == _base(other)
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.disc))

    def __repr__(self):
        return f"QuadraticElement({self.u!r}, {self.v!r}, disc={self.disc!r})"

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        root = f"sqrt({self.disc})"
        vs = str(self.v)
        vpart = root if self.v == 1 else f"({vs})*{root}"
        if self.u == 0:
            return vpart
        return f"{self.u} + {vpart}"


def quad_mul(a, b):
    """(u1 + v1 r)(u2 + v2 r) with r^2 = disc."""
    if a.disc != b.disc and a.v != 0 and b.v != 0:
        raise IncompatibleExtensionError(
            f"sqrt({a.disc}) and sqrt({b.disc}) are different extensions")
    disc = a.disc if a.v != 0 or b.v == 0 else b.disc
    if a.v == 0:
        return QuadraticElement(a.u * b.u, a.u * b.v, disc)
    if b.v == 0:
        return QuadraticElement(a.u * b.u, a.v * b.u, disc)
    return QuadraticElement(a.u * b.u + a.v * b.v * disc, a.u * b.v + a.v * b.u, disc)


def quad_inv(a):
    """Multiplicative inverse via the conjugate; fails on zero norm."""
    n = a.norm()
    if n == 0:
        raise ZeroDivisionError(f"element {a} has zero norm")
    return QuadraticElement(_div(a.u, n), _div(-a.v, n), a.disc)


class QuadraticField:
    """Convenience context: fixed base field and discriminant."""

    def __init__(self, disc):
        self.disc = _base(disc)
        self.sqrt = QuadraticElement(0, 1, self.disc)
        self.one = QuadraticElement(1, 0, self.disc)
        self.zero = QuadraticElement(0, 0, self.disc)

    def __call__(self, u, v=0):
        return QuadraticElement(u, v, self.disc)

    def __repr__(self):
        return f"QuadraticField(disc={self.disc})"
