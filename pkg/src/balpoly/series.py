"""Truncated formal power series in z and the generating-function closed forms.

Coefficients are ring elements (polynomials in x, scalars, or quadratic
extension elements). Exponential series store c_k = a_k/k! exactly; the
``terms`` view multiplies back by k!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import DensePolynomial, QuadraticField, RationalFunction
from .errors import DomainError
from .sequences import sequence_poly

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"


class TruncatedPowerSeries:
    """c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})."""

    __slots__ = ("coeffs", "order", "kind")

    def __init__(self, coeffs, order=None, kind=ORDINARY):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.kind = kind

    @classmethod
    def from_terms(cls, terms, order=None, kind=ORDINARY):
        """Build from sequence terms a_k; exponential series divide by k!."""
        terms = list(terms)
        if kind == EXPONENTIAL:
            terms = [a * Fraction(1, factorial(k)) for k, a in enumerate(terms)]
        return cls(terms, order, kind)

    def terms(self):
        if self.kind == EXPONENTIAL:
            return [c * factorial(k) for k, c in enumerate(self.coeffs)]
        return list(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return None
        if other.kind != self.kind:
            raise ValueError("cannot mix ordinary and exponential series")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return self + TruncatedPowerSeries([other], self.order, self.kind)
        n = min(self.order, o.order)
        return TruncatedPowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)], n, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs], self.order, self.kind)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return TruncatedPowerSeries([c * other for c in self.coeffs], self.order, self.kind)
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        nz_a = [i for i in range(n + 1) if a[i] != 0]
        nz_b = [j for j in range(n + 1) if b[j] != 0]
        out = [0] * (n + 1)
        for i in nz_a:
            ai = a[i]
            for j in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return TruncatedPowerSeries(out, n, self.kind)

    def __rmul__(self, other):
        return self * other

    def shift(self, k=1):
        """Multiply an ordinary series by z^k (order preserved)."""
        if self.kind != ORDINARY:
            raise ValueError("shift is defined for ordinary series")
        return TruncatedPowerSeries([0] * k + list(self.coeffs), self.order, self.kind)

    def inverse(self):
        """1/s through the same order; the constant term must be invertible."""
        if self.kind != ORDINARY:
            return self._exp_inverse()
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = _scalar_inverse(c0)
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n + 1):
                if self.coeffs[j] != 0:
                    acc = acc + self.coeffs[j] * out[n - j]
            out.append(-acc * inv0)
        return TruncatedPowerSeries(out, self.order, self.kind)

    def _exp_inverse(self):
        # the c_k storage multiplies like an ordinary series
        plain = TruncatedPowerSeries(self.coeffs, self.order).inverse()
        return TruncatedPowerSeries(plain.coeffs, self.order, self.kind)

    def truncate(self, order):
        return TruncatedPowerSeries(self.coeffs[: order + 1], min(order, self.order), self.kind)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self.kind == other.kind and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedPowerSeries({list(self.coeffs)!r}, order={self.order}, kind={self.kind!r})"


def _scalar_inverse(c):
    if isinstance(c, DensePolynomial):
        if not c.is_constant():
            raise ZeroDivisionError("constant term is not a unit")
        c = c.constant()
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


def series_from_rational(num, den, order, kind=ORDINARY):
    """Expand num(z)/den(z) by the coefficient recurrence; den[0] must be a unit."""
    num = list(num)
    den = list(den)
    inv0 = _scalar_inverse(den[0])
    out = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            if den[j] != 0:
                acc = acc - den[j] * out[n - j]
        out.append(acc * inv0 if inv0 != 1 else acc)
    return TruncatedPowerSeries(out, order, kind)


def exp_series(a, order):
    """e^{a z} as an exponential-convention series (c_k = a^k/k!)."""
    out = []
    power = 1
    for k in range(order + 1):
        out.append(power * Fraction(1, factorial(k)))
        power = power * a
    return TruncatedPowerSeries(out, order, EXPONENTIAL)


def sinh_over_root(c, disc, order):
    """sinh(c sqrt(D) z)/sqrt(D) = sum c^{2k+1} D^k z^{2k+1}/(2k+1)!."""
    out = [0] * (order + 1)
    term = c
    for m in range(1, order + 1, 2):
        out[m] = term * Fraction(1, factorial(m))
        term = term * c * c * disc
    return TruncatedPowerSeries(out, order, EXPONENTIAL)


def cosh_root(c, disc, order):
    """cosh(c sqrt(D) z) = sum c^{2k} D^k z^{2k}/(2k)!."""
    out = [0] * (order + 1)
    term = DensePolynomial(1)
    for m in range(0, order + 1, 2):
        out[m] = term * Fraction(1, factorial(m))
        term = term * c * c * disc
    return TruncatedPowerSeries(out, order, EXPONENTIAL)


# closed forms

_x = DensePolynomial.x()
_D = DensePolynomial([-1, 0, 9])
_A = DensePolynomial([-1, 0, 18])  # 18x^2 - 1
_DEN1 = [DensePolynomial(1), DensePolynomial([0, -6]), DensePolynomial(1)]
_DEN2 = [DensePolynomial(1), DensePolynomial([2, 0, -36]), DensePolynomial(1)]

OGF_FORMS = {
    "B": ([0, DensePolynomial(1)], _DEN1),
    "B-odd": ([DensePolynomial(1), DensePolynomial(1)], _DEN2),
    "B-even": ([0, DensePolynomial([0, 6])], _DEN2),
    "C": ([DensePolynomial(1), DensePolynomial([0, -3])], _DEN1),
    "C-odd": ([DensePolynomial([0, 3]), DensePolynomial([0, -3])], _DEN2),
    "C-even": ([DensePolynomial(1), DensePolynomial([1, 0, -18])], _DEN2),
}

GF_IDS = {
    "B": "B", "B-odd": "B1", "B-even": "B2",
    "C": "C", "C-odd": "C1", "C-even": "C2",
}
FAMILIES = tuple(OGF_FORMS)


def family_term(family, n):
    """The n-th term of a family: B_n, B_{2n+1}, B_{2n}, and the C analogues."""
    base, _, parity = family.partition("-")
    index = {"": n, "odd": 2 * n + 1, "even": 2 * n}[parity]
    return sequence_poly(base, index)


def _check_family(family):
    if family not in OGF_FORMS:
        raise ValueError(f"unknown generating-function family {family!r}; expected one of {FAMILIES}")


def ogf_expand(family, order):
    """Coefficients of the ordinary generating function closed form through z^order."""
    _check_family(family)
    if order < 0:
        raise ValueError("order must be >= 0")
    num, den = OGF_FORMS[family]
    return series_from_rational(num, den, order)


def egf_expand(family, order):
    """Exponential generating function closed form expanded through z^order.

    Built from e^{az} and the radical-free sinh/cosh expansions in powers of
    D = 9x^2 - 1, so every coefficient stays in Q[x].
    """
    _check_family(family)
    if order < 0:
        raise ValueError("order must be >= 0")
    three_x = DensePolynomial([0, 3])
    six_x = DensePolynomial([0, 6])
    if family in ("B", "C"):
        e = exp_series(three_x, order)
        if family == "B":
            return e * sinh_over_root(DensePolynomial(1), _D, order)
        return e * cosh_root(DensePolynomial(1), _D, order)
    e = exp_series(_A, order)
    sh = sinh_over_root(six_x, _D, order)
    ch = cosh_root(six_x, _D, order)
    if family == "B-odd":
        return e * (sh * three_x + ch)
    if family == "B-even":
        return e * sh
    if family == "C-odd":
        return e * (ch * three_x + sh * _D)
    return e * ch


@lru_cache(maxsize=None)
def _cached_expansion(kind, family, order):
    return (ogf_expand if kind == ORDINARY else egf_expand)(family, order)


def expansion_term(kind, family, n):
    """n-th term (times n! for EGFs) from a cached expansion of sufficient order."""
    order = 16
    while order < n:
        order *= 2
    s = _cached_expansion(kind, family, order)
    return s.terms()[n]


# functional equations behind the OGF theorems


def functional_equation(name, order):
    """(lhs, rhs) series for a named functional equation."""
    z1 = lambda c0, c1: TruncatedPowerSeries([c0, c1], order)  # noqa: E731
    if name == "B2-C2":
        b2, c2 = ogf_expand("B-even", order), ogf_expand("C-even", order)
        return z1(1, -_A) * b2, c2.shift(1) * DensePolynomial([0, 6])
    if name == "B-C1":
        b, c1 = ogf_expand("B", order), ogf_expand("C-odd", order)
        k = DensePolynomial([-2, -6, 36])
        lhs = c1.shift(1) - z1(1, -1) * b * DensePolynomial([0, 3])
        return lhs, (b * c1).shift(1) * k
    if name == "egf-B-C":
        b, c = egf_expand("B", order), egf_expand("C", order)
        one = DensePolynomial(1)
        return cosh_root(one, _D, order) * b, sinh_over_root(one, _D, order) * c
    if name == "egf-B2-C2":
        b2, c2 = egf_expand("B-even", order), egf_expand("C-even", order)
        six_x = DensePolynomial([0, 6])
        return cosh_root(six_x, _D, order) * b2, sinh_over_root(six_x, _D, order) * c2
    raise ValueError(f"unknown functional equation {name!r}")


FUNCTIONAL_EQUATIONS = ("B2-C2", "B-C1", "egf-B-C", "egf-B2-C2")


def check_functional_equation(lhs, rhs, order):
    """True iff both series agree through z^order."""
    if callable(lhs):
        lhs = lhs(order)
    if callable(rhs):
        rhs = rhs(order)
    if lhs.order < order or rhs.order < order:
        raise ValueError("series not expanded to the requested order")
    return all(lhs[k] == rhs[k] for k in range(order + 1))


# generic second-order recurrences


@dataclass(frozen=True)
class RecurrenceSpec:
    """u_n = p u_{n-1} + q u_{n-2} with initial terms u0, u1."""

    p: object
    q: object
    u0: object
    u1: object

    @property
    def discriminant(self):
        return self.p * self.p + 4 * self.q

    def check(self):
        if self.discriminant == 0:
            raise DomainError("p^2 + 4q must be nonzero")

    def terms(self, count):
        out = [self.u0, self.u1]
        while len(out) < count:
            out.append(self.p * out[-1] + self.q * out[-2])
        return out[:count]

    def _field(self):
        d = self.discriminant
        if isinstance(d, DensePolynomial):
            d = RationalFunction(d)
        return QuadraticField(d)

    @property
    def delta(self):
        return self._field().sqrt

    @property
    def alpha(self):
        return (self.delta + self.p) / 2

    @property
    def beta(self):
        return (-self.delta + self.p) / 2

    @property
    def rho(self):
        return (self.delta * self.p + (self.p * self.p + 2 * self.q)) / 2

    @property
    def sigma(self):
        return (-self.delta * self.p + (self.p * self.p + 2 * self.q)) / 2


def ogf_from_recurrence(spec, variant, order):
    """The generic OGF lemma's closed form, expanded through z^order."""
    spec.check()
    p, q, u0, u1 = spec.p, spec.q, spec.u0, spec.u1
    if variant == "all":
        num = [u0, u1 - p * u0]
        den = [1, -p, -q]
    elif variant in ("odd", "even"):
        s = p * p + 2 * q
        den = [1, -s, q * q]
        if variant == "odd":
            num = [u1, p * q * u0 - q * u1]
        else:
            u2 = p * u1 + q * u0
            num = [u0, u2 - s * u0]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return series_from_rational(num, den, order)


def egf_from_recurrence(spec, variant, order, literal=False):
    """Terms of the generic EGF lemma's closed form (coefficient of z^n/n!).

    Each term is computed in the quadratic extension by sqrt(p^2+4q); the
    returned series holds the rational parts and raises if a radical
    survives. ``literal`` keeps the printed u_0 in the odd-index formula.
    """
    spec.check()
    al, be, rh, si = spec.alpha, spec.beta, spec.rho, spec.sigma
    delta = spec.delta
    u0, u1 = spec.u0, spec.u1
    terms = spec.terms(4)
    u2, u3 = terms[2], terms[3]
    out = []
    for n in range(order + 1):
        if variant == "all":
            val = ((u1 - be * u0) * al ** n - (u1 - al * u0) * be ** n) / delta
        elif variant == "odd":
            tail = u0 if literal else u1
            val = ((u3 - si * u1) * rh ** n - (u3 - rh * tail) * si ** n) / (delta * spec.p)
        elif variant == "even":
            val = ((u2 - si * u0) * rh ** n - (u2 - rh * u0) * si ** n) / (delta * spec.p)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        out.append(val)
    return TruncatedPowerSeries.from_terms(out, order, EXPONENTIAL)
