"""Plucking subtrees off a corolla, decompositions, leaf removal, and command extraction.

For a bound variable ``v`` of a corolla ``C``, the plucked subtree is the part
of the tree reached by crossing the edge at ``v`` away from ``C``; the partner
of ``v`` becomes its free entry.  Recursing on the plucked subtrees turns a
tree into a normal-form command headed by any chosen corolla.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, ValidationError
from .mu import Apply, Mu, MuExpr, Pair, Var
from .naming import sorted_vars
from .operad import vt_compose
from .trees import Corolla, Kind, Ordinary, Special, TreeClass, VernonGraph, canonicalize, require_tree, single


@dataclass(frozen=True)
class PluckedSubtree:
    graph: VernonGraph
    entry: str

    @property
    def corollas(self) -> frozenset[Corolla]:
        return frozenset(self.graph.corollas)


@dataclass(frozen=True)
class Decomposition:
    """The head corolla on its own plus one plucked subtree per bound variable of it."""

    head: VernonGraph
    plucked: tuple[tuple[str, PluckedSubtree], ...]

    def pieces(self) -> list[VernonGraph]:
        return [self.head] + [p.graph for _, p in self.plucked]


def _index(t: VernonGraph, at: int | Corolla) -> int:
    if isinstance(at, int):
        if not 0 <= at < len(t.corollas):
            raise DomainError(f"corolla index {at} out of range 0..{len(t.corollas) - 1}")
        return at
    return t.index_of(at)


def _require_ordinary(t: VernonGraph):
    kind = require_tree(t)
    if kind is not Kind.ORDINARY:
        raise ValidationError(f"expected an ordinary tree, got an {kind.value} one")


def _check_bound_at(t: VernonGraph, i: int, v: str):
    if v not in t.corollas[i].fv:
        raise DomainError(f"{v!r} is not a variable of corolla {i}")
    if v in t.free_vars:
        raise DomainError(f"{v!r} is free in the tree, so nothing hangs off it")


def induced(t: VernonGraph, members: set[int], entry: str | None = None) -> VernonGraph:
    """The subgraph on the given corollas, keeping edges with both ends inside."""
    corollas = tuple(c for i, c in enumerate(t.corollas) if i in members)
    inside = set()
    for c in corollas:
        inside |= c.fv
    edges = frozenset(e for e in t.edges if e <= inside and (entry is None or entry not in e))
    return VernonGraph(corollas, edges)


def pluck(t: VernonGraph, at: int | Corolla, v: str) -> PluckedSubtree:
    """The subtree across the edge at ``v`` of corolla ``at``, found by traversal."""
    _require_ordinary(t)
    i = _index(t, at)
    _check_bound_at(t, i, v)
    entry = t.partner[v]
    start = t.owner(entry)
    seen = {start}
    stack = [start]
    while stack:
        j = stack.pop()
        for u in t.corollas[j].fv:
            w = t.partner.get(u)
            if w is None or u == entry:
                continue
            k = t.owner(w)
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return PluckedSubtree(induced(t, seen, entry), entry)


def pluck_by_rules(t: VernonGraph, at: int | Corolla, v: str) -> PluckedSubtree:
    """The same subtree, generated by iterating the two membership rules to a fixed point."""
    _require_ordinary(t)
    i = _index(t, at)
    _check_bound_at(t, i, v)
    X = t.free_vars
    pairs = {(t.neighbour(v), t.partner[v])}
    changed = True
    while changed:
        changed = False
        for d, u in list(pairs):
            for x in t.corollas[d].fv - X - {u}:
                new = (t.neighbour(x), t.partner[x])
                if new not in pairs:
                    pairs.add(new)
                    changed = True
    members = {d for d, _ in pairs}
    return PluckedSubtree(induced(t, members, t.partner[v]), t.partner[v])


def is_connected(t: VernonGraph, members: set[int]) -> bool:
    if not members:
        return False
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        j = stack.pop()
        for u in t.corollas[j].fv:
            w = t.partner.get(u)
            if w is not None:
                k = t.owner(w)
                if k in members and k not in seen:
                    seen.add(k)
                    stack.append(k)
    return seen == members


def characterizes_plucked(t: VernonGraph, at: int | Corolla, v: str, candidate: VernonGraph) -> bool:
    """The non-inductive test: the partner of ``v`` is free in ``candidate`` and nothing else is new."""
    i = _index(t, at)
    entry = t.partner[v]
    fv = candidate.free_vars
    return entry in fv and fv - {entry} <= t.free_vars and t.corollas[i] not in candidate.corollas


def subtrees_satisfying(t: VernonGraph, at: int | Corolla, v: str) -> list[VernonGraph]:
    """Every connected subtree passing :func:`characterizes_plucked`, by exhaustive search."""
    n = len(t.corollas)
    out = []
    for k in range(1, n + 1):
        for members in combinations(range(n), k):
            ms = set(members)
            if not is_connected(t, ms):
                continue
            g = induced(t, ms)
            if characterizes_plucked(t, at, v, g):
                out.append(g)
    return out


def decomposition(t: VernonGraph, at: int | Corolla) -> Decomposition:
    _require_ordinary(t)
    i = _index(t, at)
    c = t.corollas[i]
    plucked = tuple((v, pluck(t, i, v)) for v in sorted_vars(c.fv - t.free_vars))
    return Decomposition(VernonGraph((c,), frozenset()), plucked)


def find_leaf_corolla(t: VernonGraph) -> Corolla:
    """A corolla with exactly one bound variable; the one with the smallest key."""
    _require_ordinary(t)
    if len(t.corollas) < 2:
        raise ValidationError("a single-corolla tree has no leaf corolla to remove")
    leaves = [c for c in t.corollas if len(c.fv - t.free_vars) == 1]
    return min(leaves, key=lambda c: c.key)


def remove_leaf(t: VernonGraph, at: int | Corolla) -> VernonGraph:
    """Drop a leaf corolla; the partner of its bound variable becomes free."""
    _require_ordinary(t)
    i = _index(t, at)
    bound = t.corollas[i].fv - t.free_vars
    if len(bound) != 1:
        raise ValidationError(f"corolla {i} has {len(bound)} bound variables, not exactly one")
    (v,) = bound
    keep = set(range(len(t.corollas))) - {i}
    return induced(t, keep, t.partner[v])


def command_of(t: VernonGraph, at: int | Corolla = 0) -> MuExpr:
    """A normal-form command denoting ``t``, headed by the chosen corolla."""
    kind = require_tree(t)
    if kind is Kind.EXCEPTIONAL:
        a, b = t.corollas[0].ends
        return Pair(Var(a), Var(b))
    if kind is not Kind.ORDINARY:
        raise ValidationError("commands are extracted from ordinary or exceptional trees only")
    i = _index(t, at)
    c = t.corollas[i]
    args = {}
    for x in c.fv:
        if x in t.free_vars:
            args[x] = Var(x)
        else:
            sub = pluck(t, i, x)
            head = sub.graph.index_of(t.corollas[t.neighbour(x)])
            args[x] = Mu(sub.entry, command_of(sub.graph, head))
    return Apply.of(c.instance, args)


def reconstruct(t: VernonGraph, at: int | Corolla = 0) -> TreeClass:
    """Rebuild the class of ``t`` by grafting the plucked subtrees back onto the head corolla."""
    d = decomposition(t, at)
    (c,) = d.head.corollas
    acc = canonicalize(single(c.instance))
    for v, p in d.plucked:
        acc = vt_compose(acc, v, p.entry, canonicalize(p.graph))
    return acc


def corolla_label(c: Corolla) -> str:
    match c:
        case Ordinary(inst):
            return f"{inst.decoration.label}({','.join(inst.slots())})"
        case Special(a, b):
            return f"({a},{b})"
