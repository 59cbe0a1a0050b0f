from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from balpoly.arith import (
    I,
    DensePolynomial,
    GaussianRational,
    IncompatibleExtensionError,
    QuadraticField,
    RationalFunction,
    X,
    poly_eval,
    quad_inv,
    quad_mul,
    ratfunc_reduce,
)

D = DensePolynomial([-1, 0, 9])
BAL = QuadraticField(D)
Q5 = QuadraticField(5)
ALPHA = Q5(Fraction(1, 2), Fraction(1, 2))
BETA = Q5(Fraction(1, 2), Fraction(-1, 2))

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
gaussians = st.builds(GaussianRational, rationals, rationals)
polys = st.lists(st.integers(-20, 20), max_size=5).map(DensePolynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RationalFunction, polys, nonzero_polys)
quads = st.builds(lambda u, v: BAL(u, v), ratfuncs, ratfuncs)
fib_field = st.builds(lambda u, v: Q5(u, v), gaussians, gaussians)


def test_gaussian_i_squared():
    assert I * I == GaussianRational(-1, 0)


def test_rational_is_reduced():
    q = Fraction(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)


def test_poly_trailing_coefficient_stripped():
    assert DensePolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert DensePolynomial([0, 0]).is_zero()


def test_quad_mul_lambda_times_inverse():
    assert quad_mul(BAL(3 * X, 1), BAL(3 * X, -1)) == BAL(1, 0)


def test_quad_mul_sqrt5_squared():
    assert quad_mul(Q5(0, 1), Q5(0, 1)) == Q5(5, 0)


def test_quad_mul_alpha_beta():
    assert quad_mul(ALPHA, BETA) == Q5(-1, 0)


def test_quad_mul_mismatched_discriminants():
    with pytest.raises(IncompatibleExtensionError):
        quad_mul(BAL(X, 1), Q5(1, 1))


def test_quad_inv_examples():
    assert quad_inv(BAL(3 * X, 1)) == BAL(3 * X, -1)
    assert quad_inv(Q5(1, 0)) == Q5(1, 0)
    assert quad_inv(ALPHA) == -BETA
    assert quad_inv(ALPHA) == Q5(Fraction(-1, 2), Fraction(1, 2))


def test_quad_inv_zero_norm():
    with pytest.raises(ZeroDivisionError):
        quad_inv(Q5(0, 0))


def test_ratfunc_reduce_examples():
    r = ratfunc_reduce(DensePolynomial([0, 0, 6]), DensePolynomial([0, 2]))
    assert (r.numerator, r.denominator) == (3 * X, DensePolynomial(1))
    r = ratfunc_reduce(DensePolynomial([-1, 0, 36]), DensePolynomial([1, 6]))
    assert (r.numerator, r.denominator) == (DensePolynomial([-1, 6]), DensePolynomial(1))
    r = ratfunc_reduce(DensePolynomial(0), X)
    assert r.is_zero() and r.denominator == DensePolynomial(1)


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        ratfunc_reduce(X, DensePolynomial(0))


def test_poly_eval_examples():
    assert poly_eval(DensePolynomial([0, -12, 0, 216]), Fraction(1, 2)) == 21
    assert poly_eval(DensePolynomial([0, -9, 0, 108]), Fraction(1, 2)) == 9
    assert poly_eval(DensePolynomial([7, 3, 5]), 0) == 7


def test_poly_print_ascending():
    assert str(DensePolynomial([1, 0, -108, 0, 1296])) == "1 - 108x^2 + 1296x^4"


@given(polys, nonzero_polys, nonzero_polys)
def test_ratfunc_reduce_cancels_common_factor(p, q, r):
    assert ratfunc_reduce(p * r, q * r) == ratfunc_reduce(p, q)


@given(ratfuncs)
def test_ratfunc_denominator_monic(f):
    den = f.denominator
    assert den.coeffs[-1] == 1


@given(polys, polys)
def test_degree_of_product(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


def _ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 * a


@given(gaussians, gaussians, gaussians)
def test_ring_laws_gaussian(a, b, c):
    _ring_laws(a, b, c)


@given(polys, polys, polys)
def test_ring_laws_poly(a, b, c):
    _ring_laws(a, b, c)


@given(ratfuncs, ratfuncs, ratfuncs)
def test_ring_laws_ratfunc(a, b, c):
    _ring_laws(a, b, c)


@given(quads, quads, quads)
def test_ring_laws_quadratic(a, b, c):
    _ring_laws(a, b, c)


@given(fib_field, fib_field, fib_field)
def test_ring_laws_gaussian_sqrt5(a, b, c):
    _ring_laws(a, b, c)


@given(quads, quads)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(fib_field)
def test_inverse_when_norm_nonzero(a):
    if a.norm() != 0:
        assert a * quad_inv(a) == Q5(1, 0)


@given(quads)
def test_zero_iff_both_components_zero(a):
    assert (a == 0) == (a.u == 0 and a.v == 0)
