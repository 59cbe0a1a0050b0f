"""Tokenizer and recursive-descent parser for identity lines.

    identity := expr "==" expr "for" binding ("," binding)*
    binding  := IDENT "in" expr ".." expr
    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" unary)?
    atom     := NUMBER | IDENT | call | "(" expr ")"
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import LexError, ParseError, UnboundVariableError
from .nodes import (
    CONSTANTS,
    SEQUENCES,
    BinOp,
    Binding,
    Binom,
    Const,
    Eps,
    Identity,
    Neg,
    Num,
    Seq,
    Sum,
    Var,
    children,
)

KEYWORDS = ("for", "in", "sum", "binom", "eps")


class Token(NamedTuple):
    kind: str  # NUM, IDENT, OP, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s+|(?P<NUM>\d+)|(?P<IDENT>[A-Za-z_][A-Za-z_0-9]*)|(?P<OP>==|\.\.|[-+*/^(),=])")


def tokenize(text, line=1):
    tokens = []
    pos = 0
    line_start = 0
    while pos < len(text):
        if text[pos] == "#":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise LexError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        if m.lastgroup:
            tokens.append(Token(m.lastgroup, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, text):
        return self.tok.kind == "OP" and self.tok.text == text

    def at_word(self, word):
        return self.tok.kind == "IDENT" and self.tok.text == word

    def expect(self, text, what=None):
        if not self.at(text):
            self.fail(f"expected {what or repr(text)}")
        return self.advance()

    def fail(self, message, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.col)

    # grammar

    def identity(self):
        start = self.tok
        lhs = self.expr()
        self.expect("==")
        rhs = self.expr()
        if not self.at_word("for"):
            self.fail("expected 'for' and a quantifier clause")
        self.advance()
        bindings = [self.binding()]
        while self.at(","):
            self.advance()
            bindings.append(self.binding())
        if self.tok.kind != "EOF":
            self.fail("unexpected trailing input")
        return Identity(lhs, rhs, tuple(bindings), (start.line, start.col))

    def binding(self):
        tok = self.tok
        if tok.kind != "IDENT" or tok.text in KEYWORDS or tok.text in CONSTANTS or tok.text in SEQUENCES:
            self.fail("expected a variable name")
        self.advance()
        if not self.at_word("in"):
            self.fail("expected 'in'")
        self.advance()
        lo = self.expr()
        self.expect("..")
        hi = self.expr()
        return Binding(tok.text, lo, hi, (tok.line, tok.col))

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            node = BinOp(op.text, node, self.term(), (op.line, op.col))
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()
            node = BinOp(op.text, node, self.unary(), (op.line, op.col))
        return node

    def unary(self):
        if self.at("-"):
            op = self.advance()
            return Neg(self.unary(), (op.line, op.col))
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            op = self.advance()
            return BinOp("^", base, self.unary(), (op.line, op.col))
        return base

    def atom(self):
        tok = self.tok
        pos = (tok.line, tok.col)
        if tok.kind == "NUM":
            self.advance()
            return Num(int(tok.text), pos)
        if self.at("("):
            self.advance()
            node = self.expr()
            if not self.at(")"):
                self.fail("unbalanced parenthesis: expected ')'")
            self.advance()
            return node
        if tok.kind != "IDENT":
            self.fail("expected an expression")
        name = tok.text
        self.advance()
        if name in SEQUENCES:
            index = self.call_args(name, 1)[0]
            return Seq(name, index, pos)
        if name == "eps":
            return Eps(self.call_args(name, 1)[0], pos)
        if name == "binom":
            top, bottom = self.call_args(name, 2)
            return Binom(top, bottom, pos)
        if name == "sum":
            return self.sum_call(pos)
        if name in CONSTANTS:
            return Const(name, pos)
        if name in ("for", "in"):
            self.fail("expected an expression", tok)
        return Var(name, pos)

    def call_args(self, name, count):
        if not self.at("("):
            self.fail(f"'{name}' must be called with {count} argument(s)")
        self.advance()
        args = [self.expr()]
        while self.at(","):
            self.advance()
            args.append(self.expr())
        if not self.at(")"):
            self.fail("unbalanced parenthesis: expected ')'")
        close = self.advance()
        if len(args) != count:
            raise ParseError(f"'{name}' takes {count} argument(s), got {len(args)}", close.line, close.col)
        return args

    def sum_call(self, pos):
        if not self.at("("):
            self.fail("'sum' must be called as sum(k=a..b, body)")
        self.advance()
        var = self.tok
        if var.kind != "IDENT" or var.text in CONSTANTS or var.text in SEQUENCES or var.text in KEYWORDS:
            self.fail("expected a summation variable")
        self.advance()
        self.expect("=")
        lo = self.expr()
        self.expect("..")
        hi = self.expr()
        self.expect(",")
        body = self.expr()
        if not self.at(")"):
            self.fail("unbalanced parenthesis: expected ')'")
        self.advance()
        return Sum(var.text, lo, hi, body, pos)


def check_bound(identity):
    """Every variable is bound by the quantifier clause or an enclosing sum."""
    for b in identity.bindings:
        _check(b.lo, frozenset())
        _check(b.hi, frozenset())
    bound = frozenset(b.var for b in identity.bindings)
    _check(identity.lhs, bound)
    _check(identity.rhs, bound)


def _check(node, bound):
    if isinstance(node, Var):
        if node.name not in bound:
            raise UnboundVariableError(f"'{node.name}' is not bound", *node.pos)
        return
    if isinstance(node, Sum):
        _check(node.lo, bound)
        _check(node.hi, bound)
        _check(node.body, bound | {node.var})
        return
    for child in children(node):
        _check(child, bound)


def parse(text, line=1):
    """Parse one identity line into an ``Identity``."""
    tokens = tokenize(text, line)
    if tokens[0].kind == "EOF":
        raise ParseError("empty input", line, 1)
    ast = _Parser(tokens).identity()
    check_bound(ast)
    return ast


def parse_expr(text):
    """Parse a bare expression (no quantifier); variables are not checked."""
    p = _Parser(tokenize(text))
    node = p.expr()
    if p.tok.kind != "EOF":
        p.fail("unexpected trailing input")
    return node
