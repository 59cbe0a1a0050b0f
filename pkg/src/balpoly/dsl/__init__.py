"""A small language for writing identities and checking them exactly.

    B(n) - 3*x*B(n-1) == C(n-1) for n in 1..50
"""

from .corpus import Entry, load_corpus, mutants, parse_file, parse_text
from .errors import DslError, EvalError, LexError, ParseError, UnboundVariableError
from .evaluator import eval_identity, infer_ring
from .parser import parse, parse_expr, tokenize
from .render import render, render_expr


def check(text, identity_id=None):
    """Parse and evaluate one identity line."""
    return eval_identity(parse(text), identity_id)


__all__ = [
    "Entry", "load_corpus", "mutants", "parse_file", "parse_text",
    "DslError", "EvalError", "LexError", "ParseError", "UnboundVariableError",
    "eval_identity", "infer_ring", "parse", "parse_expr", "tokenize",
    "render", "render_expr", "check",
]
