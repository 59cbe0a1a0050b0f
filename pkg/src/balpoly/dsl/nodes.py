"""Identity-language syntax tree. Source positions never take part in equality."""

from __future__ import annotations

from dataclasses import dataclass, field

SEQUENCES = ("B", "C", "T", "U", "V", "W", "F", "L")
CONSTANTS = ("x", "sqD", "lam", "sq5", "alpha", "beta", "im", "omega")


def _pos():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple = _pos()


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Const:
    name: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Seq:
    name: str
    index: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Eps:
    arg: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Binom:
    top: object
    bottom: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Sum:
    var: str
    lo: object
    hi: object
    body: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: object
    right: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Binding:
    var: str
    lo: object
    hi: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Identity:
    lhs: object
    rhs: object
    bindings: tuple
    pos: tuple = _pos()


def children(node):
    if isinstance(node, (Seq,)):
        return (node.index,)
    if isinstance(node, Eps):
        return (node.arg,)
    if isinstance(node, Binom):
        return (node.top, node.bottom)
    if isinstance(node, Sum):
        return (node.lo, node.hi, node.body)
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    return ()


def walk(node):
    yield node
    for child in children(node):
        yield from walk(child)
