"""Generating-function closed forms, the generic recurrence lemmas, and the
structural lemmas (Binet, explicit sums) as coefficient-level records."""

from functools import lru_cache

from ...sequences import balancing_explicit, binet_value, lucas_balancing_explicit
from ...series import (
    EXPONENTIAL,
    FAMILIES,
    GF_IDS,
    ORDINARY,
    RecurrenceSpec,
    egf_from_recurrence,
    expansion_term,
    family_term,
    functional_equation,
    ogf_from_recurrence,
)
from ..engine import IdentityRecord, register
from ..rings import SQD, B, C, X

SUITE = ("gf-closed-forms",)
N0 = (("n", 0),)


def _order_for(n):
    order = 16
    while order < n:
        order *= 2
    return order


for fam in FAMILIES:
    tag = GF_IDS[fam]
    register(IdentityRecord(
        f"gf-{tag}", f"ordinary generating function of the {fam} terms", N0, "poly-x",
        lambda n, f=fam: expansion_term(ORDINARY, f, n),
        lambda n, f=fam: family_term(f, n), SUITE, "poly"))
for fam in FAMILIES:
    tag = GF_IDS[fam]
    register(IdentityRecord(
        f"egf-{tag}", f"exponential generating function of the {fam} terms", N0, "poly-x",
        lambda n, f=fam: expansion_term(EXPONENTIAL, f, n),
        lambda n, f=fam: family_term(f, n), SUITE, "poly"))


@lru_cache(maxsize=None)
def _feq(name, order):
    return functional_equation(name, order)


for name, where in (
    ("B2-C2", "functional equation behind the first OGF theorem"),
    ("B-C1", "functional equation behind the second OGF theorem"),
    ("egf-B-C", "functional equation behind the first EGF theorem, identity 1"),
    ("egf-B2-C2", "functional equation behind the first EGF theorem, identity 3"),
):
    register(IdentityRecord(
        f"fe-{name}", where, N0, "poly-x",
        lambda n, k=name: _feq(k, _order_for(n))[0][n],
        lambda n, k=name: _feq(k, _order_for(n))[1][n], SUITE, "poly"))

# the generic second-order lemmas, instantiated for B and C

SPECS = {
    "B": RecurrenceSpec(6 * X, -1, B(0), B(1)),
    "C": RecurrenceSpec(6 * X, -1, C(0), C(1)),
}
VARIANT_FAMILY = {"all": "", "odd": "-odd", "even": "-even"}


@lru_cache(maxsize=None)
def _ogf_gen(seq, variant, order):
    return ogf_from_recurrence(SPECS[seq], variant, order)


@lru_cache(maxsize=None)
def _egf_gen(seq, variant, literal, order):
    return egf_from_recurrence(SPECS[seq], variant, order, literal=literal).terms()


for seq in SPECS:
    for variant, suffix in VARIANT_FAMILY.items():
        register(IdentityRecord(
            f"lemma-ogf-{variant}-{seq}", f"generic OGF lemma, {variant} terms, {seq} instance",
            N0, "poly-x",
            lambda n, q=seq, v=variant: _ogf_gen(q, v, _order_for(n))[n],
            lambda n, q=seq, s=suffix: family_term(q + s, n), SUITE, "poly"))
        register(IdentityRecord(
            f"lemma-egf-{variant}-{seq}", f"generic EGF lemma, {variant} terms, {seq} instance",
            N0, "quad-x",
            lambda n, q=seq, v=variant: _egf_gen(q, v, True, _order_for(n))[n],
            lambda n, q=seq, s=suffix: family_term(q + s, n), SUITE, "quad"))
    register(IdentityRecord(
        f"lemma-egf-odd-{seq}/errata", f"generic EGF lemma, odd terms, {seq} instance",
        N0, "quad-x",
        lambda n, q=seq: _egf_gen(q, "odd", False, _order_for(n))[n],
        lambda n, q=seq: family_term(q + "-odd", n), SUITE, "quad",
        reading="errata", errata_of=f"lemma-egf-odd-{seq}",
        note="second term uses rho u_1, not rho u_0"))

# structural lemmas

LEMMAS = ("lemmas",)
register(IdentityRecord(
    "lemma-binet-B", "Binet form, balancing", N0, "quad-x",
    lambda n: binet_value("B", n), lambda n: B(n), LEMMAS, "quad"))
register(IdentityRecord(
    "lemma-binet-C", "Binet form, Lucas-balancing", N0, "quad-x",
    lambda n: binet_value("C", n), lambda n: C(n), LEMMAS, "quad"))
register(IdentityRecord(
    "lemma-explicit-B", "explicit binomial sum, balancing", (("n", 1),), "poly-x",
    balancing_explicit, B, LEMMAS, "poly"))
register(IdentityRecord(
    "lemma-explicit-C", "explicit binomial sum, Lucas-balancing", (("n", 1),), "poly-x",
    lucas_balancing_explicit, C, LEMMAS, "poly"))
register(IdentityRecord(
    "lemma-pell", "Pell-type invariant C_n^2 - (9x^2-1) B_n^2 = 1 (derived)", N0, "poly-x",
    lambda n: C(n) ** 2 - (9 * X ** 2 - 1) * B(n) ** 2, lambda n: 1, LEMMAS, "poly",
    note="consequence of the Binet form; cross-check"))
register(IdentityRecord(
    "lemma-double-B", "doubling B_2n = 2 B_n C_n (derived)", N0, "poly-x",
    lambda n: B(2 * n), lambda n: 2 * B(n) * C(n), LEMMAS, "poly",
    note="consequence of the Binet form; cross-check"))
register(IdentityRecord(
    "lemma-double-C", "doubling C_2n = 2 C_n^2 - 1 (derived)", N0, "poly-x",
    lambda n: C(2 * n), lambda n: 2 * C(n) ** 2 - 1, LEMMAS, "poly",
    note="consequence of the Binet form; cross-check"))
register(IdentityRecord(
    "lemma-binet-norm", "lam * lam^{-1} = 1 with lam = 3x + sqrt(9x^2-1) (derived)", N0, "quad-x",
    lambda n: (SQD + 3 * X) ** n * (-SQD + 3 * X) ** n, lambda n: 1, LEMMAS, "quad",
    note="norm of lam is 1; cross-check"))
