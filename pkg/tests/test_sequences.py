from fractions import Fraction

import pytest

from balpoly.arith import I, DensePolynomial
from balpoly.errors import DomainError
from balpoly.sequences import (
    SequenceFamily,
    balancing_explicit,
    balancing_poly,
    binet_value,
    chebyshev,
    epsilon,
    fibonacci,
    fibonacci_iterative,
    lucas,
    lucas_balancing_explicit,
    lucas_balancing_poly,
    lucas_iterative,
    reparameterize_half_angle,
    sequence_poly,
    substitute_scaled,
)

P = DensePolynomial


def test_balancing_examples():
    assert balancing_poly(3) == P([-1, 0, 36])
    assert balancing_poly(0).is_zero()
    assert balancing_poly(5) == P([1, 0, -108, 0, 1296])


def test_lucas_balancing_examples():
    assert lucas_balancing_poly(2) == P([-1, 0, 18])
    assert lucas_balancing_poly(0) == P(1)
    assert lucas_balancing_poly(5) == P([0, 15, 0, -540, 0, 3888])


def test_explicit_examples():
    assert balancing_explicit(2) == P([0, 6])
    assert balancing_explicit(3) == P([-1, 0, 36])
    assert balancing_explicit(1) == P(1)
    assert lucas_balancing_explicit(1) == P([0, 3])
    assert lucas_balancing_explicit(2) == P([-1, 0, 18])
    assert lucas_balancing_explicit(4) == P([1, 0, -72, 0, 648])


@pytest.mark.parametrize("fn", [balancing_explicit, lucas_balancing_explicit])
def test_explicit_rejects_zero(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_binet_examples():
    assert binet_value("B", 1) == 1
    assert binet_value("C", 0) == 1
    assert binet_value("B", 4) == P([0, -12, 0, 216])


def test_binet_has_no_radical_part():
    for n in range(20):
        for fam in "BC":
            value = binet_value(fam, n)
            assert value.v == 0
            assert value.u == sequence_poly(fam, n)


def test_chebyshev_examples():
    assert chebyshev("U", 2) == P([-1, 0, 4])
    assert chebyshev("T", 3) == P([0, -3, 0, 4])
    assert chebyshev("V", 1) == P([-1, 2])
    assert chebyshev("W", 1) == P([1, 2])


def test_fibonacci_lucas_examples():
    assert fibonacci(10) == 55
    assert lucas(0) == 2
    assert fibonacci(0) == 0


def test_doubling_matches_iteration():
    for n in range(0, 2000, 7):
        assert fibonacci(n) == fibonacci_iterative(n)
        assert lucas(n) == lucas_iterative(n)


def test_substitution_examples():
    assert substitute_scaled(balancing_poly(3), Fraction(1, 3)) == chebyshev("U", 2)
    assert lucas_balancing_poly(2).evaluate(Fraction(1, 2)) == Fraction(lucas(4), 2)
    point = I * Fraction(lucas(1), 6)
    assert balancing_poly(3).evaluate(point) == epsilon(3) ** 2 * fibonacci(3) / fibonacci(1)


def test_degree_and_leading_coefficient():
    for n in range(1, 30):
        b, c = balancing_poly(n), lucas_balancing_poly(n)
        assert b.degree == n - 1 and b.leading == 6 ** (n - 1)
        assert c.degree == n and c.leading == Fraction(6 ** n, 2)


def test_parity():
    for n in range(30):
        sign = -1 if n % 2 else 1
        assert balancing_poly(n).scale_argument(-1) == balancing_poly(n) * (-sign)
        assert lucas_balancing_poly(n).scale_argument(-1) == lucas_balancing_poly(n) * sign


def test_pell_invariant():
    d = P([-1, 0, 9])
    for n in range(30):
        assert lucas_balancing_poly(n) ** 2 - d * balancing_poly(n) ** 2 == P(1)


def test_negative_indices_follow_recurrence():
    # u_{n-2} = 2x u_{n-1} - u_n run backwards
    assert sequence_poly("U", -1).is_zero()
    assert sequence_poly("U", -2) == P(-1)
    assert sequence_poly("B", -1) == P(-1)
    assert sequence_poly("B", -2) == P([0, -6])


def test_half_angle_reparameterization():
    t = P([0, 1])
    for n in range(12):
        assert t * reparameterize_half_angle(chebyshev("V", n)) == \
            lucas_balancing_poly(2 * n + 1).scale_argument(Fraction(1, 3))
        assert reparameterize_half_angle(chebyshev("W", n)) == \
            balancing_poly(2 * n + 1).scale_argument(Fraction(1, 3))


def test_family_kinds():
    assert SequenceFamily.B.polynomial_valued
    assert not SequenceFamily.F.polynomial_valued
