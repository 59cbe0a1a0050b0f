"""Balancing, Lucas-balancing, Chebyshev, Fibonacci and Lucas sequences.

Polynomial families share the shape u_n = c*x*u_{n-1} - u_{n-2}; each one
keeps an append-only memo of its computed prefix (negative indices run the
recurrence backwards). Fibonacci and Lucas numbers come from fast doubling,
with the plain iteration kept alongside as an independent route.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from math import comb

from .arith import I, DensePolynomial, GaussianRational, QuadraticField, RationalFunction
from .errors import DomainError

X = DensePolynomial.x()
DELTA_BAL = DensePolynomial([-1, 0, 9])  # 9x^2 - 1


class SequenceFamily(Enum):
    B = "B"
    C = "C"
    T = "T"
    U = "U"
    V = "V"
    W = "W"
    F = "F"
    L = "L"

    @property
    def polynomial_valued(self):
        return self not in (SequenceFamily.F, SequenceFamily.L)


class _PolyRecurrence:
    """u_n = mult*x*u_{n-1} - u_{n-2} with memoized prefixes in both directions."""

    def __init__(self, seed0, seed1, mult):
        self._step = DensePolynomial([0, mult])
        self._fwd = [DensePolynomial(seed0), DensePolynomial(seed1)]
        self._bwd = [self._fwd[1], self._fwd[0]]  # _bwd[k] = u_{1-k}
        self._lock = threading.Lock()

    def __call__(self, n):
        if n >= 0:
            if n >= len(self._fwd):
                with self._lock:
                    fwd = self._fwd
                    while len(fwd) <= n:
                        fwd.append(self._step * fwd[-1] - fwd[-2])
            return self._fwd[n]
        k = 1 - n
        if k >= len(self._bwd):
            with self._lock:
                bwd = self._bwd
                while len(bwd) <= k:
                    # u_{m-1} = step*u_m - u_{m+1}
                    bwd.append(self._step * bwd[-1] - bwd[-2])
        return self._bwd[k]


_FAMILIES = {
    SequenceFamily.B: _PolyRecurrence(0, 1, 6),
    SequenceFamily.C: _PolyRecurrence(1, [0, 3], 6),
    SequenceFamily.T: _PolyRecurrence(1, [0, 1], 2),
    SequenceFamily.U: _PolyRecurrence(1, [0, 2], 2),
    SequenceFamily.V: _PolyRecurrence(1, [-1, 2], 2),
    SequenceFamily.W: _PolyRecurrence(1, [1, 2], 2),
}


def _family(tag):
    return tag if isinstance(tag, SequenceFamily) else SequenceFamily(tag)


def sequence_poly(family, n):
    """The n-th member of a polynomial family (negative n by backward recurrence)."""
    return _FAMILIES[_family(family)](n)


def balancing_poly(n):
    if n < 0:
        raise ValueError("balancing_poly expects n >= 0")
    return _FAMILIES[SequenceFamily.B](n)


def lucas_balancing_poly(n):
    if n < 0:
        raise ValueError("lucas_balancing_poly expects n >= 0")
    return _FAMILIES[SequenceFamily.C](n)


def chebyshev(kind, n):
    kind = _family(kind)
    if kind not in (SequenceFamily.T, SequenceFamily.U, SequenceFamily.V, SequenceFamily.W):
        raise ValueError(f"not a Chebyshev kind: {kind.value}")
    if n < 0:
        raise ValueError("chebyshev expects n >= 0")
    return _FAMILIES[kind](n)


def balancing_explicit(n):
    """Binomial-sum form of B_n; defined for n >= 1."""
    if n < 1:
        raise DomainError("explicit balancing formula needs n >= 1")
    coeffs = [0] * n
    for k in range((n - 1) // 2 + 1):
        e = n - 1 - 2 * k
        coeffs[e] += (-1) ** k * comb(n - 1 - k, k) * 6 ** e
    return DensePolynomial(coeffs)


def lucas_balancing_explicit(n):
    """Binomial-sum form of C_n; defined for n >= 1."""
    if n < 1:
        raise DomainError("explicit Lucas-balancing formula needs n >= 1")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        e = n - 2 * k
        coeffs[e] += Fraction((-1) ** k * comb(n - k, k) * 6 ** e, n - k)
    coeffs = [c * Fraction(n, 2) for c in coeffs]
    assert all(c.denominator == 1 for c in coeffs), "C_n must have integer coefficients"
    return DensePolynomial([c.numerator for c in coeffs])


# Binet form

_BAL_FIELD = QuadraticField(DELTA_BAL)
LAMBDA = _BAL_FIELD(RationalFunction(DensePolynomial([0, 3])), 1)


def binet_value(family, n):
    """(lam^n -/+ lam^-n)/(2 sqrt D) or /2, computed in Q(x)(sqrt(9x^2-1))."""
    family = _family(family)
    lam_n = LAMBDA ** n
    lam_neg = LAMBDA ** (-n)
    if family is SequenceFamily.B:
        return (lam_n - lam_neg) / (2 * _BAL_FIELD.sqrt)
    if family is SequenceFamily.C:
        return (lam_n + lam_neg) / 2
    raise ValueError("binet_value supports families B and C")


# Fibonacci and Lucas numbers


def _fib_pair(n):
    """(F_n, F_{n+1}) by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fibonacci(n):
    if n < 0:
        return fibonacci(-n) if n % 2 else -fibonacci(-n)
    return _fib_pair(n)[0]


def lucas(n):
    if n < 0:
        return -lucas(-n) if n % 2 else lucas(-n)
    f, g = _fib_pair(n)
    return 2 * g - f


def fibonacci_iterative(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas_iterative(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def sequence_value(family, n):
    """Integer families by value, polynomial families as DensePolynomial."""
    family = _family(family)
    if family is SequenceFamily.F:
        return fibonacci(n)
    if family is SequenceFamily.L:
        return lucas(n)
    return sequence_poly(family, n)


# substitutions


def substitute_scaled(p, c):
    """p(c*x) as a polynomial."""
    return p.scale_argument(c)


def evaluate_at(p, point):
    return p.evaluate(point)


def epsilon(n):
    """1 for even n, i for odd n."""
    return GaussianRational(1) if n % 2 == 0 else I


def reparameterize_half_angle(p):
    """p(2t^2 - 1) as a polynomial in t."""
    return p.compose(DensePolynomial([-1, 0, 2]))
