"""Chebyshev relations: the x/3 link, the sum and binomial corollaries, and
the third/fourth-kind remark under x = 2t^2 - 1.

Binomial-sum records live in Q(x)(sqrt(x^2-1)) with omega = x + sqrt(x^2-1).
"""

from fractions import Fraction

from ...sequences import reparameterize_half_angle, sequence_poly
from ..engine import IdentityRecord, register
from ..rings import OMEGA, OMEGA_INV, SQC, B, C, T, U, X, cached, plain_sum, pm_sum, ratfn

SUITE = ("chebyshev",)
N1 = (("n", 1),)
THIRD = Fraction(1, 3)

register(IdentityRecord(
    "lemma-bal-cheb-B", "balancing/Chebyshev lemma, first relation", N1, "poly-x",
    lambda n: B(n).scale_argument(THIRD), lambda n: U(n - 1),
    ("lemmas", "chebyshev"), "poly"))
register(IdentityRecord(
    "lemma-bal-cheb-C", "balancing/Chebyshev lemma, second relation", N1, "poly-x",
    lambda n: C(n).scale_argument(THIRD), lambda n: T(n),
    ("lemmas", "chebyshev"), "poly"))

# sum corollary (polynomial ring); U at index -1 is 0 by the backward recurrence

K = 2 * (2 * X ** 2 - X - 1)


def _poly(id_, where, lhs, rhs, **kw):
    register(IdentityRecord(id_, where, N1, "poly-x", lhs, rhs, SUITE, "poly", **kw))


def _s3(n, lo):
    return plain_sum(lo, n - 1, lambda k: U(2 * k) * T(n - k - 1))


_poly("cor-cheb-sum-1", "Chebyshev sum corollary, identity 1",
      lambda n: T(2 * n - 1) - K * plain_sum(1, n - 1, lambda k: U(k - 1) * T(2 * n - 2 * k - 1)),
      lambda n: X * (U(n - 1) - U(n - 2)))
_poly("cor-cheb-sum-2", "Chebyshev sum corollary, identity 2",
      lambda n: T(2 * n - 2) - K * plain_sum(1, n - 1, lambda k: U(k - 1) * T(2 * (n - k - 1))),
      lambda n: U(n - 1) - (2 * X ** 2 - 1) * U(n - 2))
_poly("cor-cheb-sum-3", "Chebyshev sum corollary, identity 3",
      lambda n: T(n) + T(n - 1) + K * _s3(n, 1),
      lambda n: U(2 * n) - X * U(2 * (n - 1)))
_poly("cor-cheb-sum-3/errata", "Chebyshev sum corollary, identity 3",
      lambda n: T(n) + T(n - 1) + K * _s3(n, 0),
      lambda n: U(2 * n) - X * U(2 * (n - 1)),
      reading="errata", errata_of="cor-cheb-sum-3", note="sum starts at k=0")
_poly("cor-cheb-sum-4", "Chebyshev sum corollary, identity 4",
      lambda n: 2 * X * T(n - 1) + K * plain_sum(1, n - 1, lambda k: U(2 * k - 1) * T(n - k - 1)),
      lambda n: U(2 * n - 1) - X * U(2 * n - 3))

# binomial corollary

E = SQC * (2 * X)
P = ratfn(2 * X ** 2 - 1, 2 * X ** 2) / SQC
Q = ratfn(X, 2 * X ** 2 - 1) / SQC
R = ratfn(2 * X ** 2 - 1, 2 * X ** 2)
WP, WM = OMEGA + OMEGA_INV, OMEGA - OMEGA_INV


@cached
def d_pow(e):
    return SQC ** e


@cached
def e_pow(e):
    return E ** e


@cached
def p_pow(e):
    return P ** e


@cached
def q_pow(e):
    return Q ** e


def _quad(id_, where, lhs, rhs, **kw):
    register(IdentityRecord(id_, where, N1, "cheb", lhs, rhs, SUITE, "cheb", **kw))


a_u = cached(lambda k: d_pow(1 - k) * U(k - 1))
a_t = cached(lambda k: d_pow(-k) * T(k))
e_u2 = cached(lambda k: e_pow(1 - k) * U(2 * k))
e_t21 = cached(lambda k: e_pow(-k) * T(2 * k + 1))
e_u21 = cached(lambda k: e_pow(-k) * U(2 * k - 1))
e_t2 = cached(lambda k: e_pow(-k) * T(2 * k))
p_u = cached(lambda k: p_pow(k - 1) * U(k - 1))
q_t21 = cached(lambda k: q_pow(k) * T(2 * k + 1))
q_t2 = cached(lambda k: q_pow(k) * T(2 * k))
q_u2 = cached(lambda k: q_pow(k) * U(2 * k))
p_t = cached(lambda k: p_pow(k) * T(k))
e0_u2 = cached(lambda k: e_pow(-k) * U(2 * k))
q_u21 = cached(lambda k: q_pow(k) * U(2 * k - 1))
e1_u21 = cached(lambda k: e_pow(1 - k) * U(2 * k - 1))
e_t = cached(lambda k: e_pow(-k) * T(k))

W = "Chebyshev binomial corollary, identity {}"

_quad("cor-cheb-binom-1", W.format(1),
      lambda n: pm_sum(n, 1, n, 2, 0, a_u),
      lambda n: pm_sum(n, 0, n, 0, 2, a_t))
_quad("cor-cheb-binom-2", W.format(2),
      lambda n: pm_sum(n, 1, n, WP, WM, e_u2),
      lambda n: 2 * X * pm_sum(n, 0, n, WM, WP, e_t21))
_quad("cor-cheb-binom-2/errata", W.format(2),
      lambda n: pm_sum(n, 0, n, WP, WM, e_u2),
      lambda n: 2 * X * pm_sum(n, 0, n, WM, WP, e_t21),
      reading="errata", errata_of="cor-cheb-binom-2", note="left-hand sum starts at k=0")
_quad("cor-cheb-binom-3", W.format(3),
      lambda n: SQC * pm_sum(n, 1, n, 2, 0, e_u21),
      lambda n: pm_sum(n, 0, n, 0, 2, e_t2))
_quad("cor-cheb-binom-4", W.format(4),
      lambda n: pm_sum(n, 1, n, WP, WM, p_u),
      lambda n: R ** (n - 1) * pm_sum(n, 0, n, 0, 2, q_t21))
_quad("cor-cheb-binom-5", W.format(5),
      lambda n: pm_sum(n, 1, n, 2, 0, p_u),
      lambda n: R ** (n - 1) * pm_sum(n, 0, n, 0, 2, q_t2))
_quad("cor-cheb-binom-6", W.format(6),
      lambda n: SQC * pm_sum(n, 0, n, 2, 0, q_u2),
      lambda n: R ** (-n) * pm_sum(n, 0, n, WM, WP, p_t))
_quad("cor-cheb-binom-7", W.format(7),
      lambda n: SQC * pm_sum(n, 0, n, 2, 0, e0_u2),
      lambda n: pm_sum(n, 0, n, WM, WP, e_t2))
_quad("cor-cheb-binom-8", W.format(8),
      lambda n: (X ** 2 - 1) * pm_sum(n, 1, n, 2, 0, q_u21),
      lambda n: R ** (-n) * pm_sum(n, 0, n, 0, 2, p_t))
_quad("cor-cheb-binom-8/errata", W.format(8),
      lambda n: SQC * pm_sum(n, 1, n, 2, 0, q_u21),
      lambda n: R ** (-n) * pm_sum(n, 0, n, 0, 2, p_t),
      reading="errata", errata_of="cor-cheb-binom-8", note="prefactor sqrt(x^2-1) instead of x^2-1")
_quad("cor-cheb-binom-9", W.format(9),
      lambda n: pm_sum(n, 1, n, WP, WM, e1_u21),
      lambda n: 2 * X * pm_sum(n, 0, n, 0, 2, e_t))
_quad("cor-cheb-binom-9/errata", W.format(9),
      lambda n: pm_sum(n, 1, n, WP, WM, e1_u21),
      lambda n: 2 * X * pm_sum(n, 0, n, 0, 2, e_t21),
      reading="errata", errata_of="cor-cheb-binom-9", note="T_k on the right reads T_{2k+1}")

# third and fourth kinds, with t = sqrt((1+x)/2) so that x = 2t^2 - 1

N0 = (("n", 0),)
T_VAR = X  # the polynomial variable now plays the role of t

register(IdentityRecord(
    "remark-cheb-V", "third/fourth-kind remark, V relation", N0, "poly-x",
    lambda n: T_VAR * reparameterize_half_angle(sequence_poly("V", n)),
    lambda n: C(2 * n + 1).scale_argument(THIRD), SUITE, "poly"))
register(IdentityRecord(
    "remark-cheb-W", "third/fourth-kind remark, W relation", N0, "poly-x",
    lambda n: reparameterize_half_angle(sequence_poly("W", n)),
    lambda n: B(2 * n + 1).scale_argument(THIRD), SUITE, "poly"))
