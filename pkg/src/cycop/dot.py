"""Graphviz DOT export for Vernon graphs."""

from __future__ import annotations

from .naming import sorted_vars
from .trees import Ordinary, Special, TreeClass, VernonGraph


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(t: VernonGraph | TreeClass, name: str = "tree") -> str:
    """Corollas as nodes (special ones as diamonds), edges as arcs, free variables as leaf stubs."""
    if isinstance(t, TreeClass):
        t = t.canonical
    lines = [f"graph {_quote(name)} {{", "  node [fontname=monospace];"]
    for i, c in enumerate(t.corollas):
        match c:
            case Ordinary(inst):
                label = f"{inst.decoration.label}({','.join(inst.slots())})"
                lines.append(f"  c{i} [shape=ellipse, label={_quote(label)}];")
            case Special(a, b):
                lines.append(f"  c{i} [shape=diamond, label={_quote(f'({a},{b})')}];")
    for e in sorted(sorted_vars(e) for e in t.edges):
        u, v = e
        lines.append(f"  c{t.owner(u)} -- c{t.owner(v)} [label={_quote(f'{u}~{v}')}];")
    for k, v in enumerate(sorted_vars(t.free_vars)):
        lines.append(f"  leaf{k} [shape=point, xlabel={_quote(v)}];")
        lines.append(f"  c{t.owner(v)} -- leaf{k} [label={_quote(v)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
