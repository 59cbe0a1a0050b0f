"""Ring contexts shared by the catalog and the helpers that fill them.

poly-x   Q[x] polynomials
quad-x   Q(x)(sqrt(9x^2-1)), with lam = 3x + sqrt(9x^2-1)
cheb     Q(x)(sqrt(x^2-1)), with omega = x + sqrt(x^2-1)
fib-q5   Q(i)(sqrt 5), with alpha, beta and eps
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..arith import DensePolynomial, GaussianRational, QuadraticElement, QuadraticField, RationalFunction
from ..sequences import epsilon, fibonacci, lucas, sequence_poly

RINGS = ("poly-x", "quad-x", "cheb", "fib-q5")

X = DensePolynomial.x()

BAL = QuadraticField(DensePolynomial([-1, 0, 9]))
SQD = BAL.sqrt
LAM = SQD + X * 3
LAM_INV = -SQD + X * 3

CHEB = QuadraticField(DensePolynomial([-1, 0, 1]))
SQC = CHEB.sqrt
OMEGA = SQC + X
OMEGA_INV = -SQC + X

Q5 = QuadraticField(5)
SQ5 = Q5.sqrt
ALPHA = (SQ5 + 1) / 2
BETA = (-SQ5 + 1) / 2


def B(n):
    return sequence_poly("B", n)


def C(n):
    return sequence_poly("C", n)


def T(n):
    return sequence_poly("T", n)


def U(n):
    return sequence_poly("U", n)


F = fibonacci
L = lucas
eps = epsilon


def sign(e):
    """(-1)^e for any integer e."""
    return -1 if e % 2 else 1


def ratfn(num, den=1):
    return RationalFunction(num, den)


def pm_sum(n, lo, hi, plus, minus, term):
    """sum_{k=lo}^{hi} binom(n,k) (a + (-1)^{n-k} b) term(k).

    ``plus`` is a + b (used when n - k is even) and ``minus`` is a - b;
    a zero weight skips the term without evaluating it.
    """
    acc = 0
    for k in range(lo, hi + 1):
        w = plus if (n - k) % 2 == 0 else minus
        if isinstance(w, int) and w == 0:
            continue
        acc = acc + term(k) * w * comb(n, k)
    return acc


def plain_sum(lo, hi, term):
    acc = 0
    for k in range(lo, hi + 1):
        acc = acc + term(k)
    return acc


def cached(fn):
    return lru_cache(maxsize=None)(fn)


# specializations between rings


def specialize_quad(elem, x0, root):
    """Image of u + v sqrt(D) under x -> x0 and sqrt(D) -> root.

    ``root`` must square to D(x0); this is checked, so a wrong branch or a
    wrong point cannot pass silently.
    """
    if not isinstance(elem, QuadraticElement):
        return _eval_base(elem, x0)
    d0 = _eval_base(elem.disc, x0)
    if root * root != d0:
        raise ValueError(f"chosen root does not square to D({x0}) = {d0}")
    return _eval_base(elem.u, x0) + root * _eval_base(elem.v, x0)


def _eval_base(c, x0):
    if isinstance(c, RationalFunction):
        num = c.numerator.evaluate(x0)
        den = c.denominator.evaluate(x0)
        if den == 0:
            raise ZeroDivisionError(f"pole at x = {x0}")
        if isinstance(den, int):
            den = Fraction(den)
        return num * (1 / den) if not isinstance(num, QuadraticElement) else num / den
    if isinstance(c, DensePolynomial):
        return c.evaluate(x0)
    return c


def scale_quad(elem, c, target):
    """u(cx) + v(cx) sqrt(target.disc): the x -> cx substitution between
    Q(x)(sqrt(D(x))) and Q(x)(sqrt(D(cx)))."""
    if not isinstance(elem, QuadraticElement):
        if isinstance(elem, (RationalFunction, DensePolynomial)):
            return elem.scale_argument(c)
        return elem
    if elem.disc.scale_argument(c) != target.disc:
        raise ValueError("target discriminant is not D(cx)")
    return target(elem.u.scale_argument(c), elem.v.scale_argument(c))


def gaussian_point(s):
    """x = eps_s L_s / 6 as a Gaussian rational."""
    return eps(s) * Fraction(lucas(s), 6)


__all__ = [
    "RINGS", "X", "BAL", "SQD", "LAM", "LAM_INV", "CHEB", "SQC", "OMEGA", "OMEGA_INV",
    "Q5", "SQ5", "ALPHA", "BETA", "B", "C", "T", "U", "F", "L", "eps", "sign", "ratfn",
    "pm_sum", "plain_sum", "cached", "specialize_quad", "scale_quad", "gaussian_point",
    "GaussianRational",
]
