"""Reduced rational functions in x over Q.

Numerator and denominator live in FLINT ``fmpq_poly`` objects; every
result is gcd-reduced with a monic denominator, so equality is a
structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

from .poly import DensePolynomial

_ONE = flint.fmpq_poly([1])


def _to_fmpq(c):
    if isinstance(c, int):
        return flint.fmpq(c)
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _from_fmpq(c):
    p, q = int(c.p), int(c.q)
    return p if q == 1 else Fraction(p, q)


def to_flint(p):
    if isinstance(p, flint.fmpq_poly):
        return p
    if isinstance(p, Rational):
        return flint.fmpq_poly([_to_fmpq(p)])
    if isinstance(p, DensePolynomial):
        return flint.fmpq_poly([_to_fmpq(c) for c in p.coeffs])
    raise TypeError(f"cannot embed {type(p).__name__} into Q[x]")


def from_flint(p):
    return DensePolynomial([_from_fmpq(c) for c in p.coeffs()])


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic. Immutable."""

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        n, d = to_flint(num), to_flint(den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero():
            n, d = flint.fmpq_poly([]), _ONE
        elif not d.is_constant():
            g = n.gcd(d)
            if not g.is_one():
                n, d = divmod(n, g)[0], divmod(d, g)[0]
        lead = d.coeffs()[-1]
        if lead != 1:
            n, d = n / lead, d / lead
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _raw(cls, num, den):
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "_num", num)
        object.__setattr__(obj, "_den", den)
        return obj

    @classmethod
    def coerce(cls, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Rational, DensePolynomial)):
            return cls._raw(to_flint(other), _ONE)
        return None

    @property
    def numerator(self):
        return from_flint(self._num)

    @property
    def denominator(self):
        return from_flint(self._den)

    def is_polynomial(self):
        return self._den.is_one()

    def is_zero(self):
        return self._num.is_zero()

    def __bool__(self):
        return not self._num.is_zero()

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            if self._den.is_one():
                return RationalFunction._raw(self._num + o._num, _ONE)
            return RationalFunction(self._num + o._num, self._den)
        if self._den.is_one():
            return RationalFunction._raw(self._num * o._den + o._num, o._den)
        if o._den.is_one():
            return RationalFunction._raw(self._num + o._num * self._den, self._den)
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self._num, self._den)

    def __sub__(self, other):
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return RationalFunction()
            return RationalFunction._raw(self._num * _to_fmpq(other), self._den)
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return RationalFunction._raw(self._num * o._num, _ONE)
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self):
        if self._num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self._den, self._num)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction._raw(self._num / _to_fmpq(other), self._den)
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        # powers of a reduced fraction stay reduced
        return RationalFunction._raw(self._num ** e, self._den ** e)

    def evaluate(self, x0):
        """Value at a rational point."""
        d = self.denominator.evaluate(x0)
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {x0}")
        return Fraction(self.numerator.evaluate(x0)) / d if isinstance(d, (int, Fraction)) \
            else self.numerator.evaluate(x0) / d

    def scale_argument(self, c):
        """f(c*x)."""
        return RationalFunction(self.numerator.scale_argument(c), self.denominator.scale_argument(c))

    def __eq__(self, other):
        o = RationalFunction.coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._den.is_one() and self._num.degree() <= 0:
            return hash(_from_fmpq(self._num.coeffs()[0]) if not self._num.is_zero() else 0)
        return hash((tuple(str(c) for c in self._num.coeffs()), tuple(str(c) for c in self._den.coeffs())))

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        num = str(self.numerator)
        if self.is_polynomial():
            return num
        return f"({num})/({self.denominator})"


def ratfunc_reduce(num, den):
    """Canonical reduced form of num/den."""
    return RationalFunction(num, den)
