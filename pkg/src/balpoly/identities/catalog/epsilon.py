"""Fibonacci-Lucas identities from the specialization x = eps_s L_s / 6.

eps_j is 1 for even j and i for odd j. Values live in Q(i)(sqrt 5).
The lemma is catalogued with the printed eps_n and with eps_s; lines of the
first corollary that mention an unbound L_{2m} are evaluated over an m grid.
"""

from fractions import Fraction

from ..engine import IdentityRecord, register
from ..rings import ALPHA, BETA, SQ5, B, C, F, L, eps, gaussian_point, pm_sum, sign

SUITE = ("fibonacci-eps",)
NS = (("n", 0), ("s", 1))


def _lemma_point(n, s, literal):
    e = eps(n) if literal else eps(s)
    return e, e * Fraction(L(s), 6)


def _add(id_, where, params, lhs, rhs, **kw):
    scale = kw.pop("scale", "eps")
    register(IdentityRecord(id_, where, params, "fib-q5", lhs, rhs, SUITE, scale, **kw))


LEMMA = "eps lemma, {} relation"
for tag, literal in (("", True), ("/errata", False)):
    extra = {} if literal else dict(
        reading="errata", note="eps taken with subscript s at every occurrence")
    _add("lemma-fib-eps-B" + tag, LEMMA.format("balancing"), NS,
         lambda n, s, lit=literal: B(n).evaluate(_lemma_point(n, s, lit)[1]),
         lambda n, s, lit=literal: _lemma_point(n, s, lit)[0] ** (n - 1) * Fraction(F(s * n), F(s)),
         scale="fib-s", errata_of=None if literal else "lemma-fib-eps-B", **extra)
    _add("lemma-fib-eps-C" + tag, LEMMA.format("Lucas-balancing"), NS,
         lambda n, s, lit=literal: C(n).evaluate(_lemma_point(n, s, lit)[1]),
         lambda n, s, lit=literal: _lemma_point(n, s, lit)[0] ** n * Fraction(L(s * n), 2),
         scale="fib-s", errata_of=None if literal else "lemma-fib-eps-C", **extra)


# first corollary (nine displayed lines)

def _sum(lo, hi, term):
    acc = 0
    for k in range(lo, hi + 1):
        acc = acc + term(k)
    return acc


def _quad(e, q):
    """e^2 q^2 - e q - 2 with e = eps_s."""
    return e * e * q * q - e * q - 2


def _quad_plus(e, q):
    return e * e * q * q + e * q + 2


W = "first eps corollary, identity {}"
NSM = (("n", 0), ("s", 1), ("m", 0))


def e1(n, s):
    return 2 * F(s * n), F(s) * L(s * (n - 1)) + L(s) * F(s * (n - 1))


def e2(n, s, f2=True):
    g = sign(s)
    lhs = L(s) * (F(s * (2 * n + 1)) - g * F(s * (2 * n - 1)))
    return lhs, F(2 * s if f2 else s) * (L(s * (2 * n + 1)) + g * L(s * (2 * n - 1)))


def e3(n, s):
    return (2 * F(2 * s * n) - (L(s) ** 2 - sign(s) * 2) * F(2 * s * (n - 1)),
            F(s) * L(s) * L(2 * s * (n - 1)))


def e4(n, s, q):
    e, g = eps(s), sign(s)
    lhs = L(s) * (F(s * n) - g * e * F(s * (n - 1)))
    tail = _sum(1, n - 1, lambda k: e ** (n - k) * F(s * k) * L(s * (2 * n - 2 * k - 1)))
    return lhs, g * e ** (n + 1) * F(s) * L(s * (2 * n - 1)) - g * _quad(e, q) * tail


def e5(n, s, q, coeff):
    e, g = eps(s), sign(s)
    lhs = 2 * F(s * n) - e * (q * q - g * 2) * F(s * (n - 1))
    tail = _sum(1, n - 1, lambda k: e ** (n - k) * F(s * k) * L(2 * s * (n - k - 1)))
    return lhs, g * e ** (n + 1) * F(s) * L(2 * s * (n - 1)) + coeff * tail


def e6(n, s, coeff):
    e = eps(s)
    lhs = e ** n * (2 * e * F(s * (2 * n + 1)) - L(s) * F(s * (2 * n - 1)))
    tail = _sum(0, n - 1, lambda k: e ** k * F(s * (2 * k + 1)) * L(s * (n - k - 1)))
    return lhs, F(s) * (e * L(s * n) + L(s * (n - 1))) + coeff * tail


def e7(n, s):
    return (2 * F(s * (2 * n + 1)) - (L(s) ** 2 - sign(s) * 2) * F(s * (2 * n - 1)),
            F(s) * (L(2 * s * n) + sign(s) * L(2 * s * (n - 1))))


def e8(n, s, coeff):
    e = eps(s)
    lhs = e ** n * (2 * F(2 * s * n) - sign(s) * e * L(s) * F(2 * s * (n - 1)))
    tail = _sum(1, n - 1, lambda k: e ** (k + 1) * F(2 * s * k) * L(s * (n - k - 1)))
    return lhs, e * F(s) * L(s) * L(s * (n - 1)) + coeff * tail


def e9(n, s):
    return F(2 * s * n) - sign(s) * F(2 * s * (n - 1)), F(s) * L(s * (2 * n - 1))


def _pair(id_, line, params, fn, **kw):
    _add(id_, W.format(line), params, lambda **p: fn(**p)[0], lambda **p: fn(**p)[1], **kw)


_pair("cor-fib-eps-1", 1, NS, e1)
_pair("cor-fib-eps-2", 2, NS, e2)
_pair("cor-fib-eps-2/errata", 2, NS, lambda n, s: e2(n, s, f2=False),
      reading="errata", errata_of="cor-fib-eps-2", note="F_{2s} on the right reads F_s")
_pair("cor-fib-eps-3", 3, NS, e3)
_pair("cor-fib-eps-4", 4, NSM, lambda n, s, m: e4(n, s, L(2 * m)),
      note="L_{2m} with m unbound; evaluated over an m grid")
_pair("cor-fib-eps-4/errata", 4, NS, lambda n, s: e4(n, s, L(s)),
      reading="errata", errata_of="cor-fib-eps-4", note="L_{2m} reads L_s")
_pair("cor-fib-eps-5", 5, NSM,
      lambda n, s, m: e5(n, s, L(2 * m), _quad_plus(eps(s), L(s))),
      note="L_{2m} with m unbound; evaluated over an m grid")
_pair("cor-fib-eps-5/errata", 5, NS,
      lambda n, s: e5(n, s, L(s), -sign(s) * _quad(eps(s), L(s))),
      reading="errata", errata_of="cor-fib-eps-5",
      note="L_{2m} reads L_s; sum coefficient -(-1)^s (eps^2 L_s^2 - eps L_s - 2)")
_pair("cor-fib-eps-6", 6, NS, lambda n, s: e6(n, s, -_quad_plus(eps(s), L(s))))
_pair("cor-fib-eps-6/errata", 6, (("n", 1), ("s", 1)), lambda n, s: e6(n, s, _quad(eps(s), L(s))),
      reading="errata", errata_of="cor-fib-eps-6",
      note="sum coefficient +(eps^2 L_s^2 - eps L_s - 2); holds for n >= 1")
_pair("cor-fib-eps-7", 7, NS, e7)
_pair("cor-fib-eps-8", 8, NS, lambda n, s: e8(n, s, -_quad_plus(eps(s), L(s))))
_pair("cor-fib-eps-8/errata", 8, NS, lambda n, s: e8(n, s, sign(s) * _quad(eps(s), L(s))),
      reading="errata", errata_of="cor-fib-eps-8",
      note="sum coefficient (-1)^s (eps^2 L_s^2 - eps L_s - 2)")
_pair("cor-fib-eps-9", 9, NS, e9)


# second corollary (binomial sums in Q(sqrt 5)); its quantifier admits s = 0

NS0 = (("n", 0), ("s", 0))
R = "second eps corollary, identity {}"


def _bases(s):
    g = SQ5 * Fraction(F(s), 2)
    h = SQ5 * Fraction(F(2 * s), 2)
    c = SQ5 * Fraction(F(2 * s) * L(s), 2 * L(2 * s))
    d = SQ5 * Fraction(L(2 * s) * F(s), 2 * L(s))
    return g, h, c, d


def _ab(s):
    a, b = ALPHA ** s, BETA ** s
    return a + b, a - b


def _binom(n, lo, base, plus, minus, seq):
    """sum_{k=lo}^n binom(n,k) base^{n-k} (a +/- b) seq(k)."""
    return pm_sum(n, lo, n, plus, minus, lambda k: base ** (n - k) * seq(k))


def r1(n, s):
    g = _bases(s)[0]
    return (SQ5 * _binom(n, 1, g, 2, 0, lambda k: F(k * s)),
            _binom(n, 0, g, 0, 2, lambda k: L(k * s)))


def r2(n, s, lo=1):
    h, (ap, am) = _bases(s)[1], _ab(s)
    return (SQ5 * _binom(n, lo, h, ap, am, lambda k: F((2 * k + 1) * s)),
            _binom(n, 0, h, am, ap, lambda k: L((2 * k + 1) * s)))


def r3(n, s):
    h = _bases(s)[1]
    return (SQ5 * _binom(n, 1, h, 2, 0, lambda k: F(2 * k * s)),
            _binom(n, 0, h, 0, 2, lambda k: L(2 * k * s)))


def r4(n, s, lo=1):
    _, _, c, d = _bases(s)
    ap, am = _ab(s)
    return (SQ5 * L(2 * s) ** n * _binom(n, 1, c, ap, am, lambda k: F(k * s)),
            L(s) ** n * _binom(n, lo, d, 0, 2, lambda k: L((2 * k + 1) * s)))


def r5(n, s, lo=1):
    _, _, c, d = _bases(s)
    return (SQ5 * L(2 * s) ** n * _binom(n, 1, c, 2, 0, lambda k: F(k * s)),
            L(s) ** n * _binom(n, lo, d, 0, 2, lambda k: L(2 * k * s)))


def r6(n, s):
    _, _, c, d = _bases(s)
    ap, am = _ab(s)
    return (SQ5 * (2 * L(s)) ** n * _binom(n, 0, d, 2, 0, lambda k: F((2 * k + 1) * s)),
            L(2 * s) ** n * _binom(n, 0, 2 * c, am, ap, lambda k: L(k * s)))


def r6_errata(n, s):
    _, _, c, d = _bases(s)
    ap, am = _ab(s)
    return (SQ5 * L(s) ** n * _binom(n, 0, d, 2, 0, lambda k: F((2 * k + 1) * s)),
            L(2 * s) ** n * _binom(n, 0, c, am, ap, lambda k: L(k * s)))


def r7(n, s, step=1):
    h, (ap, am) = _bases(s)[1], _ab(s)
    return (SQ5 * _binom(n, 0, h, 2, 0, lambda k: F((2 * k + 1) * s)),
            _binom(n, 0, h, am, ap, lambda k: L(step * k * s)))


def r8(n, s):
    _, _, c, d = _bases(s)
    return (SQ5 * L(s) ** n * _binom(n, 1, d, 2, 0, lambda k: F(2 * k * s)),
            L(2 * s) ** n * _binom(n, 0, c, 0, 2, lambda k: L(k * s)))


def r9(n, s):
    h, (ap, am) = _bases(s)[1], _ab(s)
    return (SQ5 * _binom(n, 1, h, ap, am, lambda k: F(2 * k * s)),
            _binom(n, 0, h, 0, 2, lambda k: L((2 * k + 1) * s)))


def _pair2(id_, line, fn, **kw):
    _add(id_, R.format(line), kw.pop("params", NS0),
         lambda **p: fn(**p)[0], lambda **p: fn(**p)[1], **kw)


_pair2("cor-fib-eps-binom-1", 1, r1)
_pair2("cor-fib-eps-binom-2", 2, r2)
_pair2("cor-fib-eps-binom-2/errata", 2, lambda n, s: r2(n, s, lo=0),
       reading="errata", errata_of="cor-fib-eps-binom-2", note="left-hand sum starts at k=0")
_pair2("cor-fib-eps-binom-3", 3, r3)
_pair2("cor-fib-eps-binom-4", 4, r4)
_pair2("cor-fib-eps-binom-4/errata", 4, lambda n, s: r4(n, s, lo=0),
       reading="errata", errata_of="cor-fib-eps-binom-4", note="right-hand sum starts at k=0")
_pair2("cor-fib-eps-binom-5", 5, r5)
_pair2("cor-fib-eps-binom-5/errata", 5, lambda n, s: r5(n, s, lo=0),
       reading="errata", errata_of="cor-fib-eps-binom-5", note="right-hand sum starts at k=0")
_pair2("cor-fib-eps-binom-6", 6, r6)
_pair2("cor-fib-eps-binom-6/errata", 6, r6_errata,
       reading="errata", errata_of="cor-fib-eps-binom-6",
       note="factor L_s^n (not (2L_s)^n) and base sqrt5 F_{2s} L_s/(2 L_{2s}) on the right")
_pair2("cor-fib-eps-binom-7", 7, r7)
_pair2("cor-fib-eps-binom-7/errata", 7, lambda n, s: r7(n, s, step=2),
       reading="errata", errata_of="cor-fib-eps-binom-7", note="L_{ks} on the right reads L_{2ks}")
_pair2("cor-fib-eps-binom-8", 8, r8)
_pair2("cor-fib-eps-binom-9", 9, r9)
