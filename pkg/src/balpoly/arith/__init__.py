"""Exact scalar and ring tower."""

from fractions import Fraction as BigRational

from .gaussian import I, GaussianRational
from .poly import X, DensePolynomial, format_poly
from .quadratic import (
    IncompatibleExtensionError,
    QuadraticElement,
    QuadraticField,
    quad_inv,
    quad_mul,
)
from .ratfunc import RationalFunction, ratfunc_reduce


def poly_eval(p, x0):
    """Horner value of ``p`` at ``x0`` (any scalar the coefficients embed into)."""
    return p.evaluate(x0)


__all__ = [
    "BigRational", "GaussianRational", "I", "DensePolynomial", "X", "format_poly",
    "RationalFunction", "ratfunc_reduce", "QuadraticElement", "QuadraticField",
    "IncompatibleExtensionError", "quad_mul", "quad_inv", "poly_eval",
]
