"""Relations obtained from the ordinary generating functions (ring Q[x])."""

from ..engine import IdentityRecord, register
from ..rings import B, C, X, plain_sum

SUITE = ("ogf-theorems",)
N1 = (("n", 1),)
A = 18 * X ** 2 - 1
K = 36 * X ** 2 - 6 * X - 2


def _add(id_, where, lhs, rhs, **kw):
    register(IdentityRecord(id_, where, N1, "poly-x", lhs, rhs, SUITE, "poly", **kw))


_add("thm-ogf-1", "first OGF theorem, identity 1",
     lambda n: B(n) - 3 * X * B(n - 1),
     lambda n: C(n - 1))
_add("thm-ogf-2", "first OGF theorem, identity 2",
     lambda n: 3 * X * (B(2 * n + 1) - B(2 * n - 1)),
     lambda n: C(2 * n + 1) + C(2 * n - 1))
_add("thm-ogf-3", "first OGF theorem, identity 3",
     lambda n: B(2 * n) - A * B(2 * (n - 1)),
     lambda n: 6 * X * C(2 * (n - 1)))
_add("thm-ogf-4", "first OGF theorem, identity 4",
     lambda n: B(2 * n + 1) - A * B(2 * n - 1),
     lambda n: C(2 * n) + C(2 * (n - 1)))
_add("thm-ogf-5", "first OGF theorem, identity 5",
     lambda n: 3 * X * (B(2 * n) - B(2 * (n - 1))),
     lambda n: 6 * X * C(2 * n - 1))

_add("thm-ogf-sum-1", "second OGF theorem, identity 1",
     lambda n: 3 * X * (B(n) - B(n - 1)),
     lambda n: C(2 * n - 1) - K * plain_sum(1, n - 1, lambda k: B(k) * C(2 * (n - k) - 1)))
_add("thm-ogf-sum-2", "second OGF theorem, identity 2",
     lambda n: B(n) - A * B(n - 1),
     lambda n: C(2 * (n - 1)) - K * plain_sum(1, n - 1, lambda k: B(k) * C(2 * (n - k - 1))))


def _sum3(n):
    return plain_sum(0, n - 1, lambda k: B(2 * k + 1) * C(n - k - 1))


def _sum4(n):
    return plain_sum(1, n - 1, lambda k: B(2 * k) * C(n - k - 1))


_add("thm-ogf-sum-3", "second OGF theorem, identity 3",
     lambda n: B(2 * n + 1) - 3 * X * B(2 * n - 1),
     lambda n: C(n) + C(n - 1) - K * _sum3(n))
_add("thm-ogf-sum-3/errata", "second OGF theorem, identity 3",
     lambda n: B(2 * n + 1) - 3 * X * B(2 * n - 1),
     lambda n: C(n) + C(n - 1) + K * _sum3(n),
     reading="errata", errata_of="thm-ogf-sum-3",
     note="sum enters with + (36x^2-6x-2), not -")
_add("thm-ogf-sum-4", "second OGF theorem, identity 4",
     lambda n: B(2 * n) - 3 * X * B(2 * (n - 1)),
     lambda n: 6 * X * C(n - 1) - K * _sum4(n))
_add("thm-ogf-sum-4/errata", "second OGF theorem, identity 4",
     lambda n: B(2 * n) - 3 * X * B(2 * (n - 1)),
     lambda n: 6 * X * C(n - 1) + K * _sum4(n),
     reading="errata", errata_of="thm-ogf-sum-4",
     note="sum enters with + (36x^2-6x-2), not -")
