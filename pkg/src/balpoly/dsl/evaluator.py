"""Exact evaluation of identity ASTs through the shared verification semantics."""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from math import comb

from ..arith import DensePolynomial, GaussianRational, QuadraticElement, RationalFunction
from ..identities.engine import VerificationReport, render_value
from ..identities.rings import ALPHA, BETA, LAM, OMEGA, SQ5, SQD, X
from ..sequences import epsilon, fibonacci, lucas, sequence_poly
from .errors import EvalError
from .nodes import BinOp, Binom, Const, Eps, Neg, Num, Seq, Sum, Var, children, walk
from .render import render

_CONSTANTS = {
    "x": X, "sqD": SQD, "lam": LAM, "sq5": SQ5, "alpha": ALPHA, "beta": BETA,
    "im": GaussianRational(0, 1), "omega": OMEGA,
}
_RING_OF = {
    "sqD": "quad-x", "lam": "quad-x", "omega": "cheb",
    "sq5": "fib-q5", "alpha": "fib-q5", "beta": "fib-q5", "im": "fib-q5",
}


def infer_ring(ast):
    """poly-x unless a constant forces an extension; two extensions clash."""
    found = {}
    for node in itertools.chain(walk(ast.lhs), walk(ast.rhs)):
        ring = None
        if isinstance(node, Const):
            ring = _RING_OF.get(node.name)
        elif isinstance(node, Eps):
            ring = "fib-q5"
        if ring and ring not in found:
            found[ring] = node
    if len(found) > 1:
        (r1, _), (r2, n2) = list(found.items())[:2]
        raise EvalError(f"cannot mix the {r1} and {r2} rings in one identity", *n2.pos)
    return next(iter(found), "poly-x")


def _free_vars(node, cache):
    key = id(node)
    if key not in cache:
        if isinstance(node, Var):
            out = frozenset((node.name,))
        elif isinstance(node, Sum):
            out = _free_vars(node.lo, cache) | _free_vars(node.hi, cache) | (
                _free_vars(node.body, cache) - {node.var})
        else:
            out = frozenset().union(*(_free_vars(c, cache) for c in children(node)))
        cache[key] = out
    return cache[key]


def _as_int(value, node, what):
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, DensePolynomial) and value.is_constant():
        return _as_int(value.constant(), node, what)
    raise EvalError(f"{what} must be an integer, got {render_value(value)}", *node.pos)


def _divide(a, b):
    if isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a * Fraction(1, b) if not isinstance(a, int) else Fraction(a, b)
    if isinstance(b, Fraction):
        return a * (1 / b)
    if isinstance(b, DensePolynomial):
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if b.is_constant():
            return _divide(a, b.constant())
        if isinstance(a, (int, Fraction, DensePolynomial)):
            return RationalFunction(a, b)
        return a / RationalFunction(b)
    if isinstance(a, DensePolynomial):
        a = RationalFunction(a)
    return a / b


def _power(base, e):
    if e >= 0:
        return base ** e
    if isinstance(base, int):
        if base == 0:
            raise ZeroDivisionError("zero to a negative power")
        return Fraction(base) ** e
    if isinstance(base, DensePolynomial):
        return _divide(1, base ** (-e))
    return base ** e


class _Evaluator:
    def __init__(self):
        self.memo = {}
        self.fv = {}

    def eval(self, node, env):
        fv = _free_vars(node, self.fv)
        key = (id(node), tuple(sorted((k, env[k]) for k in fv)))
        hit = self.memo.get(key)
        if hit is None:
            hit = self._eval(node, env)
            self.memo[key] = hit
        return hit

    def _eval(self, node, env):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Var):
            return env[node.name]
        if isinstance(node, Const):
            return _CONSTANTS[node.name]
        if isinstance(node, Seq):
            n = _as_int(self.eval(node.index, env), node.index, "a sequence index")
            if node.name == "F":
                return fibonacci(n)
            if node.name == "L":
                return lucas(n)
            return sequence_poly(node.name, n)
        if isinstance(node, Eps):
            return epsilon(_as_int(self.eval(node.arg, env), node.arg, "the eps argument"))
        if isinstance(node, Binom):
            top = _as_int(self.eval(node.top, env), node.top, "a binomial argument")
            bottom = _as_int(self.eval(node.bottom, env), node.bottom, "a binomial argument")
            if top < 0 or bottom < 0 or bottom > top:
                return 0
            return comb(top, bottom)
        if isinstance(node, Sum):
            lo = _as_int(self.eval(node.lo, env), node.lo, "a summation bound")
            hi = _as_int(self.eval(node.hi, env), node.hi, "a summation bound")
            acc = 0
            for k in range(lo, hi + 1):
                acc = acc + self.eval(node.body, {**env, node.var: k})
            return acc
        if isinstance(node, Neg):
            return -self.eval(node.operand, env)
        if isinstance(node, BinOp):
            left = self.eval(node.left, env)
            if node.op == "^":
                e = _as_int(self.eval(node.right, env), node.right, "an exponent")
                return _power(left, e)
            right = self.eval(node.right, env)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return _mul(left, right)
            return _divide(left, right)
        raise EvalError(f"cannot evaluate {type(node).__name__}", *getattr(node, "pos", (1, 1)))


def _mul(a, b):
    # DensePolynomial * RationalFunction has no direct path
    if isinstance(a, DensePolynomial) and isinstance(b, (RationalFunction, QuadraticElement)):
        return b * a
    return a * b


def _range(binding, ev):
    lo = _as_int(ev.eval(binding.lo, {}), binding.lo, "a range bound")
    hi = _as_int(ev.eval(binding.hi, {}), binding.hi, "a range bound")
    return lo, hi


def eval_identity(ast, identity_id=None, grid=None):
    """Evaluate both sides over the quantifier grid (or an override grid).

    A range with lower > upper gives a vacuous HOLDS with zero points.
    Division by zero is an ERROR verdict at the offending point.
    """
    ring = infer_ring(ast)
    ev = _Evaluator()
    names = [b.var for b in ast.bindings]
    ranges = {b.var: _range(b, ev) for b in ast.bindings}
    if grid:
        ranges.update({k: tuple(v) for k, v in grid.items()})
    axes = [range(ranges[n][0], ranges[n][1] + 1) for n in names]
    start = time.perf_counter()
    points = 0
    verdict, witness = "HOLDS", None
    for values in itertools.product(*axes):
        env = dict(zip(names, values))
        points += 1
        try:
            diff = ev.eval(ast.lhs, env) - ev.eval(ast.rhs, env)
        except ZeroDivisionError as exc:
            verdict, witness = "ERROR", {"params": env, "error": f"division by zero: {exc}"}
            break
        if diff != 0:
            verdict, witness = "FAILS", {"params": env, "difference": render_value(diff)}
            break
    return VerificationReport(
        id=identity_id or render(ast), location=f"dsl ({ring})", params_tested=ranges,
        points=points, verdict=verdict, counterexample=witness,
        millis=(time.perf_counter() - start) * 1000, vacuous=points == 0,
    )
