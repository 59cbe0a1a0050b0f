"""Identity files: one identity per line, optionally tagged with a catalog id."""

from __future__ import annotations

from dataclasses import dataclass, fields, is_dataclass, replace
from importlib import resources
from pathlib import Path

from .nodes import Identity, Num, walk
from .parser import parse


@dataclass(frozen=True)
class Entry:
    ast: Identity
    text: str
    line: int
    tag: str | None = None


def parse_text(text, source="<string>"):
    """Parse every non-blank, non-comment line. A trailing ``# id`` is the tag."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        if not body.strip():
            continue
        ast = parse(raw, line=lineno)
        words = comment.split()
        entries.append(Entry(ast, body.strip(), lineno, words[0] if words else None))
    return entries


def parse_file(path):
    path = Path(path)
    return parse_text(path.read_text(), str(path))


def corpus_files():
    root = resources.files("balpoly") / "corpus"
    return sorted((p for p in root.iterdir() if p.name.endswith(".idl")), key=lambda p: p.name)


def load_corpus():
    """All bundled entries as (file name, Entry) pairs."""
    out = []
    for p in corpus_files():
        out.extend((p.name, e) for e in parse_text(p.read_text(), p.name))
    return out


def _rebuild(node, target, new):
    if node is target:
        return new
    if not is_dataclass(node):
        return node
    changes = {}
    for f in fields(node):
        value = getattr(node, f.name)
        if isinstance(value, tuple) and value and is_dataclass(value[0]):
            rebuilt = tuple(_rebuild(v, target, new) for v in value)
        elif is_dataclass(value):
            rebuilt = _rebuild(value, target, new)
        else:
            continue
        if rebuilt is not value:
            changes[f.name] = rebuilt
    return replace(node, **changes) if changes else node


def mutants(ast):
    """Copies of ``ast`` with one integer literal in the identity bumped by one.

    Literals inside the quantifier ranges are left alone.
    """
    seen = []
    for side in (ast.lhs, ast.rhs):
        seen.extend(node for node in walk(side) if isinstance(node, Num))
    for node in seen:
        yield _rebuild(ast, node, Num(node.value + 1, node.pos))
