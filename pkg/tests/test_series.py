from fractions import Fraction

import pytest

from balpoly.arith import DensePolynomial
from balpoly.errors import DomainError
from balpoly.series import (
    EXPONENTIAL,
    FAMILIES,
    FUNCTIONAL_EQUATIONS,
    RecurrenceSpec,
    TruncatedPowerSeries,
    check_functional_equation,
    egf_expand,
    egf_from_recurrence,
    family_term,
    functional_equation,
    ogf_expand,
    ogf_from_recurrence,
)

P = DensePolynomial
X6 = P([0, 6])


def test_ogf_examples():
    assert ogf_expand("B", 3).terms() == [0, P(1), X6, P([-1, 0, 36])]
    assert ogf_expand("C-even", 1).terms() == [P(1), P([-1, 0, 18])]
    assert ogf_expand("B-odd", 0).terms() == [P(1)]


def test_egf_examples():
    assert egf_expand("B", 2).terms()[2] == X6
    assert egf_expand("C", 0).terms() == [P(1)]
    assert egf_expand("B-even", 1).terms()[1] == X6


def test_egf_stores_scaled_coefficients():
    s = egf_expand("B", 3)
    assert s.kind == EXPONENTIAL
    assert s[3] == P([-1, 0, 36]) * Fraction(1, 6)


@pytest.mark.parametrize("family", FAMILIES)
def test_expansions_match_recurrence(family):
    expected = [family_term(family, n) for n in range(25)]
    assert ogf_expand(family, 24).terms() == expected
    assert egf_expand(family, 24).terms() == expected


@pytest.mark.parametrize("name", FUNCTIONAL_EQUATIONS)
def test_functional_equations(name):
    lhs, rhs = functional_equation(name, 32)
    assert check_functional_equation(lhs, rhs, 32)


def test_functional_equation_reflexive():
    s = ogf_expand("B", 10)
    assert check_functional_equation(s, s, 10)


def test_functional_equation_detects_difference():
    s = ogf_expand("B", 10)
    assert not check_functional_equation(s, s + TruncatedPowerSeries([0, 0, 1], 10), 10)


def test_inverse():
    s = ogf_expand("C", 12)
    one = TruncatedPowerSeries([P(1)], 12)
    assert s * s.inverse() == one


def test_mul_truncates():
    a = TruncatedPowerSeries([1, 1], 3)
    assert (a * a * a * a).coeffs == (1, 4, 6, 4)


def test_recurrence_examples():
    bal = RecurrenceSpec(X6, -1, 0, P(1))
    assert ogf_from_recurrence(bal, "all", 3).terms() == [0, P(1), X6, P([-1, 0, 36])]
    luc = RecurrenceSpec(X6, -1, P(1), P([0, 3]))
    assert ogf_from_recurrence(luc, "even", 1).terms() == [P(1), P([-1, 0, 18])]
    fib = RecurrenceSpec(1, 1, 0, 1)
    assert ogf_from_recurrence(fib, "all", 5).terms() == [0, 1, 1, 2, 3, 5]


def test_recurrence_root_relations():
    spec = RecurrenceSpec(X6, -1, 0, P(1))
    assert spec.alpha + spec.beta == X6
    assert spec.alpha * spec.beta == 1
    assert spec.rho + spec.sigma == X6 * X6 - 2
    assert spec.rho * spec.sigma == 1


def test_degenerate_recurrence():
    with pytest.raises(DomainError):
        ogf_from_recurrence(RecurrenceSpec(2, -1, 0, 1), "all", 4)


@pytest.mark.parametrize("u0,u1", [(0, P(1)), (P(1), P([0, 3]))])
@pytest.mark.parametrize("variant", ["all", "odd", "even"])
def test_generic_lemmas_reproduce_closed_forms(u0, u1, variant):
    spec = RecurrenceSpec(X6, -1, u0, u1)
    terms = spec.terms(2 * 12 + 2)
    pick = {"all": terms[:12], "odd": terms[1::2][:12], "even": terms[::2][:12]}[variant]
    assert ogf_from_recurrence(spec, variant, 11).terms() == pick
    assert egf_from_recurrence(spec, variant, 11).terms() == pick


def test_printed_odd_egf_form_differs():
    spec = RecurrenceSpec(X6, -1, 0, P(1))
    printed = egf_from_recurrence(spec, "odd", 3, literal=True).terms()
    assert printed[0] != spec.terms(2)[1]
