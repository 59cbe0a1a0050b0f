"""Fibonacci-Lucas identities from the specialization x = 1/2.

Integer identities compare exact integers; binomial sums live in Q(sqrt 5).
"""

from fractions import Fraction

from ..engine import IdentityRecord, register
from ..rings import ALPHA, BETA, SQ5, B, C, F, L, cached, plain_sum, pm_sum

SUITE = ("fibonacci-x-half",)
HALF = Fraction(1, 2)

register(IdentityRecord(
    "lemma-fib-half-B", "x = 1/2 lemma, balancing relation", (("n", 0),), "fib-q5",
    lambda n: B(n).evaluate(HALF), lambda n: F(2 * n),
    ("lemmas",) + SUITE, "int"))
register(IdentityRecord(
    "lemma-fib-half-C", "x = 1/2 lemma, Lucas-balancing relation", (("n", 0),), "fib-q5",
    lambda n: C(n).evaluate(HALF), lambda n: Fraction(L(2 * n), 2),
    ("lemmas",) + SUITE, "int"))

N1 = (("n", 1),)


def _add(id_, where, lhs, rhs, **kw):
    register(IdentityRecord(id_, where, N1, "fib-q5", lhs, rhs, SUITE, "fib", **kw))


S = "Fibonacci sum corollary, identity {}"
_add("cor-fib-sum-1", S.format(1),
     lambda n: 3 * F(2 * n - 1),
     lambda n: L(4 * n - 2) - 4 * plain_sum(1, n - 1, lambda k: F(2 * k) * L(4 * n - 4 * k - 2)))
_add("cor-fib-sum-2", S.format(2),
     lambda n: 2 * F(2 * n - 1) - 5 * F(2 * n - 2),
     lambda n: L(4 * n - 4) - 4 * plain_sum(1, n - 1, lambda k: F(2 * k) * L(4 * n - 4 * k - 4)))
_add("cor-fib-sum-3", S.format(3),
     lambda n: 2 * F(4 * n + 2) - 3 * F(4 * n - 2),
     lambda n: L(2 * n) + L(2 * n - 2) + 4 * plain_sum(0, n - 1, lambda k: F(4 * k + 2) * L(2 * n - 2 * k - 2)))


def _s4(n):
    return plain_sum(1, n - 1, lambda k: F(4 * k) * L(2 * n - 2 * k - 2))


_add("cor-fib-sum-4", S.format(4),
     lambda n: 2 * F(4 * n) - 3 * F(4 * n - 4),
     lambda n: 3 * L(2 * n - 2) + 2 * _s4(n))
_add("cor-fib-sum-4/errata", S.format(4),
     lambda n: 2 * F(4 * n) - 3 * F(4 * n - 4),
     lambda n: 3 * L(2 * n - 2) + 4 * _s4(n),
     reading="errata", errata_of="cor-fib-sum-4", note="sum coefficient 4, not 2")

# binomial corollary: bases 2/sqrt5, 2/(3 sqrt5), 14/(9 sqrt5), 6/(7 sqrt5)

BA = SQ5 * Fraction(2, 5)
BB = SQ5 * Fraction(2, 15)
BC = SQ5 * Fraction(14, 45)
BD = SQ5 * Fraction(6, 35)
AP, AM = ALPHA ** 2 + BETA ** 2, ALPHA ** 2 - BETA ** 2


def _powers(base):
    return cached(lambda k: base ** k)


pa, pb, pc, pd = map(_powers, (BA, BB, BC, BD))

a_f2 = cached(lambda k: pa(k) * F(2 * k))
a_l2 = cached(lambda k: pa(k) * L(2 * k))
b_f42 = cached(lambda k: pb(k) * F(4 * k + 2))
b_l42 = cached(lambda k: pb(k) * L(4 * k + 2))
b_f4 = cached(lambda k: pb(k) * F(4 * k))
b_l4 = cached(lambda k: pb(k) * L(4 * k))
c_f2 = cached(lambda k: pc(k) * F(2 * k))
c_l2 = cached(lambda k: pc(k) * L(2 * k))
d_l42 = cached(lambda k: pd(k) * L(4 * k + 2))
d_l4 = cached(lambda k: pd(k) * L(4 * k))
d_f42 = cached(lambda k: pd(k) * F(4 * k + 2))
d_f4 = cached(lambda k: pd(k) * F(4 * k))

SEVEN_NINTHS = Fraction(7, 9)
W = "Fibonacci binomial corollary, identity {}"

_add("cor-fib-binom-1", W.format(1),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, a_f2),
     lambda n: pm_sum(n, 0, n, 0, 2, a_l2))
_add("cor-fib-binom-2", W.format(2),
     lambda n: SQ5 * pm_sum(n, 1, n, AP, AM, b_f42),
     lambda n: pm_sum(n, 0, n, AM, AP, b_l42))
_add("cor-fib-binom-2/errata", W.format(2),
     lambda n: SQ5 * pm_sum(n, 0, n, AP, AM, b_f42),
     lambda n: pm_sum(n, 0, n, AM, AP, b_l42),
     reading="errata", errata_of="cor-fib-binom-2", note="left-hand sum starts at k=0")
_add("cor-fib-binom-3", W.format(3),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, b_f4),
     lambda n: pm_sum(n, 0, n, 0, 2, b_l4))
_add("cor-fib-binom-4", W.format(4),
     lambda n: SQ5 * pm_sum(n, 1, n, AP, AM, c_f2),
     lambda n: SEVEN_NINTHS ** n * pm_sum(n, 0, n, 0, 2, d_l42))
_add("cor-fib-binom-5", W.format(5),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, c_f2),
     lambda n: SEVEN_NINTHS ** n * pm_sum(n, 0, n, 0, 2, d_l4))
_add("cor-fib-binom-6", W.format(6),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, d_f42),
     lambda n: SEVEN_NINTHS ** -n * pm_sum(n, 0, n, AM, AP, c_l2))
_add("cor-fib-binom-6/errata", W.format(6),
     lambda n: SQ5 * pm_sum(n, 0, n, 2, 0, d_f42),
     lambda n: SEVEN_NINTHS ** -n * pm_sum(n, 0, n, AM, AP, c_l2),
     reading="errata", errata_of="cor-fib-binom-6", note="left-hand sum starts at k=0")
_add("cor-fib-binom-7", W.format(7),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, b_f42),
     lambda n: pm_sum(n, 0, n, AM, AP, b_l4))
_add("cor-fib-binom-7/errata", W.format(7),
     lambda n: SQ5 * pm_sum(n, 0, n, 2, 0, b_f42),
     lambda n: pm_sum(n, 0, n, AM, AP, b_l4),
     reading="errata", errata_of="cor-fib-binom-7", note="left-hand sum starts at k=0")
_add("cor-fib-binom-8", W.format(8),
     lambda n: SQ5 * pm_sum(n, 1, n, 2, 0, d_f4),
     lambda n: SEVEN_NINTHS ** -n * pm_sum(n, 0, n, 0, 2, c_l2))
_add("cor-fib-binom-9", W.format(9),
     lambda n: SQ5 * pm_sum(n, 1, n, AP, AM, b_f4),
     lambda n: pm_sum(n, 0, n, 0, 2, b_l42))
