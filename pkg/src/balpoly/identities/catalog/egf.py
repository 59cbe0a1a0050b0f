"""Binomial-sum relations from the exponential generating functions.

Both sides live in Q(x)(sqrt(9x^2-1)); negative powers of sqrt(9x^2-1),
lam and the scaled bases are taken in that fraction field as displayed.
"""

from ..engine import IdentityRecord, register
from ..rings import LAM, LAM_INV, SQD, B, C, X, cached, pm_sum, ratfn

SUITE = ("egf-theorems",)
N1 = (("n", 1),)

E = SQD * (6 * X)
P = ratfn(18 * X ** 2 - 1, 18 * X ** 2) / SQD
Q = ratfn(3 * X, 18 * X ** 2 - 1) / SQD
R = ratfn(18 * X ** 2 - 1, 18 * X ** 2)

LP, LM = LAM + LAM_INV, LAM - LAM_INV  # lam +/- lam^{-1}


@cached
def sqd_pow(e):
    return SQD ** e


@cached
def e_pow(e):
    return E ** e


@cached
def p_pow(e):
    return P ** e


@cached
def q_pow(e):
    return Q ** e


def _add(id_, where, lhs, rhs, **kw):
    register(IdentityRecord(id_, where, N1, "quad-x", lhs, rhs, SUITE, "quad", **kw))


# cached k-terms, independent of n

t1l = cached(lambda k: sqd_pow(1 - k) * B(k))
t1r = cached(lambda k: sqd_pow(-k) * C(k))
tb1 = cached(lambda k: e_pow(1 - k) * B(2 * k + 1))
tb2 = cached(lambda k: e_pow(1 - k) * B(2 * k))
tc1 = cached(lambda k: e_pow(-k) * C(2 * k + 1))
tc2 = cached(lambda k: e_pow(-k) * C(2 * k))

_add("thm-egf-1", "first EGF theorem, identity 1",
     lambda n: pm_sum(n, 1, n, 2, 0, t1l),
     lambda n: pm_sum(n, 0, n, 0, 2, t1r))
_add("thm-egf-2", "first EGF theorem, identity 2",
     lambda n: pm_sum(n, 0, n, LP, LM, tb1),
     lambda n: 6 * X * pm_sum(n, 0, n, LM, LP, tc1))
_add("thm-egf-3", "first EGF theorem, identity 3",
     lambda n: pm_sum(n, 1, n, 2, 0, tb2),
     lambda n: 6 * X * pm_sum(n, 1, n, 0, 2, tc2))
_add("thm-egf-3/errata", "first EGF theorem, identity 3",
     lambda n: pm_sum(n, 1, n, 2, 0, tb2),
     lambda n: 6 * X * pm_sum(n, 0, n, 0, 2, tc2),
     reading="errata", errata_of="thm-egf-3",
     note="right-hand sum starts at k=0 (the k=0 term C_0 = 1 is not zero)")
_add("thm-egf-4", "first EGF theorem, identity 4",
     lambda n: pm_sum(n, 0, n, 2, 0, tb1),
     lambda n: 6 * X * pm_sum(n, 0, n, LM, LP, tc2))
_add("thm-egf-5", "first EGF theorem, identity 5",
     lambda n: pm_sum(n, 1, n, LP, LM, tb2),
     lambda n: 6 * X * pm_sum(n, 0, n, 0, 2, tc1))

sp_b = cached(lambda k: p_pow(k - 1) * B(k))
sq_c1 = cached(lambda k: q_pow(k) * C(2 * k + 1))
sq_c2 = cached(lambda k: q_pow(k) * C(2 * k))
sq_b1 = cached(lambda k: q_pow(k - 1) * B(2 * k + 1))
sq_b2 = cached(lambda k: q_pow(k - 1) * B(2 * k))
sp_c = cached(lambda k: p_pow(k) * C(k))

_add("thm-egf-scaled-1", "second EGF theorem, identity 1",
     lambda n: pm_sum(n, 1, n, LP, LM, sp_b),
     lambda n: R ** (n - 1) * pm_sum(n, 0, n, 0, 2, sq_c1))
_add("thm-egf-scaled-2", "second EGF theorem, identity 2",
     lambda n: pm_sum(n, 1, n, 2, 0, sp_b),
     lambda n: R ** (n - 1) * pm_sum(n, 0, n, 0, 2, sq_c2))
_add("thm-egf-scaled-3", "second EGF theorem, identity 3",
     lambda n: pm_sum(n, 0, n, 2, 0, sq_b1),
     lambda n: R ** (1 - n) * 6 * X * pm_sum(n, 0, n, LM, LP, sp_c))
_add("thm-egf-scaled-4", "second EGF theorem, identity 4",
     lambda n: pm_sum(n, 1, n, 2, 0, sq_b2),
     lambda n: R ** (1 - n) * 6 * X * pm_sum(n, 0, n, 0, 2, sp_c))
