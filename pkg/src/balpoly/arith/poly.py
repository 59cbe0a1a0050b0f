"""Dense univariate polynomials over an exact scalar ring.

Coefficients are stored in ascending order (index k holds the coefficient
of x^k). Any scalar type supporting ``+ - *`` and comparison with 0 works;
int, Fraction and GaussianRational are the ones used in this package.
Integer and rational coefficient vectors get a Kronecker-substitution fast
path for multiplication.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .gaussian import GaussianRational, _norm_scalar

_SCALARS = (int, Fraction, GaussianRational)


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(_norm_scalar(c) for c in coeffs[:n])


def _pack(coeffs, bits):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _unpack(value, bits, count):
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(count):
        d = value & mask
        value >>= bits
        if d >= half:
            d -= 1 << bits
            value += 1
        out.append(d)
    return out


def kronecker_mul(a, b):
    """Product of two integer coefficient lists via one big-integer multiply."""
    if not a or not b:
        return []
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    prod = _pack(a, bits) * _pack(b, bits)
    return _unpack(prod, bits, len(a) + len(b) - 1)


def schoolbook_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _common_denominator(coeffs):
    d = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            d = d * c.denominator // math.gcd(d, c.denominator)
        elif not isinstance(c, int):
            return None
    return d


def _fast_mul(a, b):
    da = _common_denominator(a)
    db = _common_denominator(b)
    if da is None or db is None:
        return schoolbook_mul(a, b)
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    prod = kronecker_mul(ia, ib)
    d = da * db
    if d == 1:
        return prod
    return [Fraction(c, d) for c in prod]


class DensePolynomial:
    """Immutable polynomial with ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, _SCALARS):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, other):
        if isinstance(other, DensePolynomial):
            return other
        if isinstance(other, _SCALARS):
            return cls((other,))
        return None

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # arithmetic

    def __add__(self, other):
        o = DensePolynomial.coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return DensePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = DensePolynomial.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = DensePolynomial.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return DensePolynomial()
            return DensePolynomial([c * other for c in self.coeffs])
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return DensePolynomial(_fast_mul(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def mul_schoolbook(self, other):
        """Reference product without the Kronecker fast path."""
        return DensePolynomial(schoolbook_mul(self.coeffs, other.coeffs))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = DensePolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return DensePolynomial([0] * k + list(self.coeffs))

    def divmod(self, other):
        """Euclidean division; requires an invertible leading coefficient."""
        o = DensePolynomial.coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(o.coeffs) + 1, 0)
        lead = o.leading
        inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(o.coeffs) - 1] * inv
            if c == 0:
                continue
            q[i] = c
            for j, oc in enumerate(o.coeffs):
                rem[i + j] = rem[i + j] - c * oc
        return DensePolynomial(q), DensePolynomial(rem[: len(o.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading
        inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
        return self * inv

    def gcd(self, other):
        """Monic gcd by the Euclidean algorithm (field coefficients)."""
        a, b = self, DensePolynomial.coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # evaluation and substitution

    def __call__(self, x0):
        return self.evaluate(x0)

    def evaluate(self, x0):
        """Horner evaluation at a scalar or ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def scale_argument(self, c):
        """The polynomial p(c*x)."""
        out = []
        power = 1
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * c
        return DensePolynomial(out)

    def compose(self, other):
        """p(q(x)) for a polynomial q."""
        acc = DensePolynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map_coeffs(self, fn):
        return DensePolynomial([fn(c) for c in self.coeffs])

    # comparison and display

    def __eq__(self, other):
        o = DensePolynomial.coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def __repr__(self):
        return f"DensePolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs)


def _fmt_coeff(c):
    if isinstance(c, GaussianRational) and c.im != 0 and c.re != 0:
        return f"({c})"
    return str(c)


def format_poly(coeffs, var="x"):
    """Ascending rendering, e.g. ``1 - 108x^2 + 1296x^4``."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        neg = False
        if isinstance(c, (int, Fraction)) and c < 0:
            neg, c = True, -c
        if k == 0:
            body = _fmt_coeff(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                body = mono
            else:
                cs = _fmt_coeff(c)
                body = f"({cs}){mono}" if "/" in cs else f"{cs}{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


X = DensePolynomial.x()
