"""Canonical text for identity ASTs; parse(render(ast)) == ast."""

from .nodes import BinOp, Binom, Const, Eps, Identity, Neg, Num, Seq, Sum, Var

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
UNARY, POWER, ATOM = 3, 4, 5


def _prec(node):
    if isinstance(node, BinOp):
        return POWER if node.op == "^" else _PREC[node.op]
    if isinstance(node, Neg):
        return UNARY
    return ATOM


def _wrap(node, needed):
    text = render_expr(node)
    return f"({text})" if _prec(node) < needed else text


def render_expr(node):
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, (Var, Const)):
        return node.name
    if isinstance(node, Seq):
        return f"{node.name}({render_expr(node.index)})"
    if isinstance(node, Eps):
        return f"eps({render_expr(node.arg)})"
    if isinstance(node, Binom):
        return f"binom({render_expr(node.top)}, {render_expr(node.bottom)})"
    if isinstance(node, Sum):
        return f"sum({node.var}={render_expr(node.lo)}..{render_expr(node.hi)}, {render_expr(node.body)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, UNARY)
    if isinstance(node, BinOp):
        if node.op == "^":
            return f"{_wrap(node.left, ATOM)}^{_wrap(node.right, UNARY)}"
        p = _PREC[node.op]
        sep = " " if p == 1 else ""
        return f"{_wrap(node.left, p)}{sep}{node.op}{sep}{_wrap(node.right, p + 1)}"
    raise TypeError(f"not an expression node: {node!r}")


def render(ast):
    if not isinstance(ast, Identity):
        return render_expr(ast)
    quant = ", ".join(f"{b.var} in {render_expr(b.lo)}..{render_expr(b.hi)}" for b in ast.bindings)
    return f"{render_expr(ast.lhs)} == {render_expr(ast.rhs)} for {quant}"
