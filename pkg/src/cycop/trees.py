"""Vernon graphs and trees: classification and alpha-canonical forms.

A graph is a set of corollas with pairwise disjoint variables plus a set of
edges pairing variables.  Unpaired variables are the free variables.  Classes
of trees up to renaming of paired (bound) variables are represented by a
canonical member computed from a center-rooted encoding of the corolla tree.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .errors import ClashError, DomainError, NotATreeError, ValidationError
from .naming import Bijection, fresh, sorted_vars
from .signature import DecoratedInstance, act


@dataclass(frozen=True)
class Ordinary:
    instance: DecoratedInstance

    @property
    def fv(self) -> frozenset[str]:
        return self.instance.variables

    @property
    def key(self) -> str:
        return self.instance.key


@dataclass(frozen=True, eq=False)
class Special:
    a: str
    b: str

    def __post_init__(self):
        if self.a == self.b:
            raise ValidationError(f"special corolla ({self.a},{self.b}) needs two distinct variables")

    @property
    def fv(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    @property
    def ends(self) -> tuple[str, str]:
        a, b = sorted_vars((self.a, self.b))
        return a, b

    def other(self, v: str) -> str:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise DomainError(f"{v!r} is not an end of {self}")

    @property
    def key(self) -> str:
        return "(%s,%s)" % self.ends

    def __eq__(self, other):
        return isinstance(other, Special) and self.fv == other.fv

    def __hash__(self):
        return hash(("special", self.fv))

    def __repr__(self):
        return "Special%s" % (self.ends,)


Corolla = Union[Ordinary, Special]


def edge(u: str, v: str) -> frozenset[str]:
    if u == v:
        raise ValidationError(f"edge ({u}~{v}) joins a variable to itself")
    return frozenset((u, v))


class Kind(enum.Enum):
    ORDINARY = "ordinary"
    EXCEPTIONAL = "exceptional"
    EXTENDED = "extended"


class Defect(enum.Enum):
    DISCONNECTED = "Disconnected"
    LOOP = "Loop"
    MULTI_EDGE = "MultiEdge"
    CYCLE = "Cycle"


@dataclass(frozen=True)
class NotATree:
    reason: Defect


TreeKind = Union[Kind, NotATree]


@dataclass(frozen=True, eq=False)
class VernonGraph:
    """Corollas plus edges.  Equality ignores corolla order."""

    corollas: tuple[Corolla, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        if not self.corollas:
            raise ValidationError("a Vernon graph needs at least one corolla")
        owner = {}
        for i, c in enumerate(self.corollas):
            for v in c.fv:
                if v in owner:
                    raise ValidationError(f"variable {v!r} occurs in two corollas")
                owner[v] = i
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValidationError(f"edge {sorted_vars(e)} must join two distinct variables")
            for v in e:
                if v not in owner:
                    raise ValidationError(f"edge endpoint {v!r} occurs in no corolla")
                if v in seen:
                    raise ValidationError(f"variable {v!r} occurs in two edges")
                seen.add(v)
        object.__setattr__(self, "_owner", owner)

    @classmethod
    def build(cls, corollas: Iterable[Corolla], edges: Iterable[tuple[str, str] | frozenset] = ()) -> VernonGraph:
        es = frozenset(e if isinstance(e, frozenset) else edge(*e) for e in edges)
        return cls(tuple(corollas), es)

    # structure -------------------------------------------------------------

    @cached_property
    def partner(self) -> dict[str, str]:
        out = {}
        for e in self.edges:
            u, v = tuple(e)
            out[u] = v
            out[v] = u
        return out

    def owner(self, v: str) -> int:
        try:
            return self._owner[v]
        except KeyError:
            raise DomainError(f"{v!r} does not occur in the graph") from None

    @cached_property
    def variables(self) -> frozenset[str]:
        return frozenset(self._owner)

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset(v for v in self._owner if v not in self.partner)

    @cached_property
    def bound_vars(self) -> frozenset[str]:
        return frozenset(self.partner)

    def index_of(self, c: Corolla) -> int:
        for i, d in enumerate(self.corollas):
            if d == c:
                return i
        raise DomainError(f"{c} is not a corolla of the graph")

    def neighbour(self, v: str) -> int:
        """Index of the corolla on the other side of the edge at ``v``."""
        return self.owner(self.partner[v])

    @property
    def specials(self) -> list[int]:
        return [i for i, c in enumerate(self.corollas) if isinstance(c, Special)]

    @property
    def ordinaries(self) -> list[int]:
        return [i for i, c in enumerate(self.corollas) if isinstance(c, Ordinary)]

    def __eq__(self, other):
        return (
            isinstance(other, VernonGraph)
            and self.edges == other.edges
            and frozenset(self.corollas) == frozenset(other.corollas)
        )

    def __hash__(self):
        return hash((frozenset(self.corollas), self.edges))

    def __repr__(self):
        from .syntax import print_tree

        return f"VernonGraph({print_tree(self)})"


def free_vars(g: VernonGraph) -> frozenset[str]:
    return g.free_vars


# classification -------------------------------------------------------------


def classify(g: VernonGraph) -> TreeKind:
    n = len(g.corollas)
    arcs = set()
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    defect = None
    for e in sorted(g.edges, key=lambda e: sorted_vars(e)):
        u, v = tuple(e)
        i, j = g.owner(u), g.owner(v)
        if i == j:
            return NotATree(Defect.LOOP)
        pair = (min(i, j), max(i, j))
        if pair in arcs:
            return NotATree(Defect.MULTI_EDGE)
        arcs.add(pair)
    for i, j in sorted(arcs):
        ri, rj = find(i), find(j)
        if ri == rj:
            defect = defect or Defect.CYCLE
        else:
            parent[ri] = rj
    if defect:
        return NotATree(defect)
    if len({find(i) for i in range(n)}) > 1:
        return NotATree(Defect.DISCONNECTED)
    if all(isinstance(c, Ordinary) for c in g.corollas):
        return Kind.ORDINARY
    if n == 1:
        return Kind.EXCEPTIONAL
    return Kind.EXTENDED


def require_tree(g: VernonGraph) -> Kind:
    kind = classify(g)
    if isinstance(kind, NotATree):
        raise NotATreeError(kind.reason.value)
    return kind


# renaming -------------------------------------------------------------------


def rename(t: VernonGraph, theta: Bijection | Mapping[str, str]) -> VernonGraph:
    """``t^theta`` for ``theta`` onto part of V(t), extended by the identity elsewhere."""
    if not isinstance(theta, Bijection):
        theta = Bijection(theta)
    V = t.variables
    if not theta.codomain <= V:
        raise ClashError(f"renaming targets {sorted_vars(theta.codomain - V)} outside the graph")
    untouched = V - theta.codomain
    if theta.domain & untouched:
        raise ClashError(f"renaming introduces {sorted_vars(theta.domain & untouched)} already in use")
    full = theta + Bijection.identity(untouched)

    corollas = []
    for c in t.corollas:
        match c:
            case Ordinary(inst):
                sub = Bijection({full.inv(v): v for v in inst.variables})
                corollas.append(Ordinary(act(inst, sub)))
            case Special(a, b):
                corollas.append(Special(full.inv(a), full.inv(b)))
    edges = frozenset(frozenset(full.inv(v) for v in e) for e in t.edges)
    return VernonGraph(tuple(corollas), edges)


def freshen_bound(t: VernonGraph, avoid: Iterable[str], hint: str = "w") -> tuple[VernonGraph, set[str]]:
    """Rename every bound variable to a fresh name outside ``avoid`` and V(t).

    Returns the renamed graph and the enlarged avoid set.
    """
    used = set(avoid) | set(t.variables)
    pairs = {}
    for v in sorted_vars(t.bound_vars):
        w = fresh(hint, used)
        used.add(w)
        pairs[w] = v
    return rename(t, Bijection(pairs)), used


# canonical forms ------------------------------------------------------------

_PARENT = "^"


def _adjacency(g: VernonGraph) -> list[list[tuple[str, int]]]:
    adj: list[list[tuple[str, int]]] = [[] for _ in g.corollas]
    for v, w in g.partner.items():
        adj[g.owner(v)].append((v, g.owner(w)))
    return adj


def _centers(g: VernonGraph) -> list[int]:
    n = len(g.corollas)
    if n <= 2:
        return list(range(n))
    adj = _adjacency(g)
    degree = [len(a) for a in adj]
    layer = [i for i in range(n) if degree[i] <= 1]
    remaining = n
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        removed.update(layer)
        nxt = []
        for i in layer:
            for _, j in adj[i]:
                if j not in removed:
                    degree[j] -= 1
                    if degree[j] == 1:
                        nxt.append(j)
        layer = nxt
    return [i for i in range(n) if i not in removed]


def _slot_vars(c: Corolla) -> list[str]:
    match c:
        case Ordinary(inst):
            return inst.slots()
        case Special():
            return [c.a, c.b]


class _Encoder:
    """Bottom-up encodings of a tree rooted at a chosen corolla."""

    def __init__(self, g: VernonGraph):
        self.g = g
        self.memo: dict[tuple[int, str | None], str] = {}

    def slot(self, v: str, parent_var: str | None) -> str:
        g = self.g
        if v == parent_var:
            return _PARENT
        if v not in g.partner:
            return "=" + v
        w = g.partner[v]
        return self.encode(g.owner(w), w)

    def encode(self, i: int, parent_var: str | None) -> str:
        k = (i, parent_var)
        if k in self.memo:
            return self.memo[k]
        c = self.g.corollas[i]
        parts = [self.slot(v, parent_var) for v in _slot_vars(c)]
        match c:
            case Ordinary(inst):
                code = f"{inst.decoration.key}({','.join(parts)})"
            case Special():
                code = "~(%s)" % ",".join(sorted(parts))
        self.memo[k] = code
        return code

    def ordered_slots(self, i: int, parent_var: str | None) -> list[str]:
        """Slot variables in the order the canonical traversal visits them."""
        c = self.g.corollas[i]
        vs = _slot_vars(c)
        if isinstance(c, Special):
            vs = sorted(vs, key=lambda v: self.slot(v, parent_var))
        return vs


@dataclass(frozen=True, eq=False)
class TreeClass:
    """An alpha-equivalence class of trees, held by its canonical member."""

    canonical: VernonGraph
    kind: Kind
    key: str

    @property
    def free_vars(self) -> frozenset[str]:
        return self.canonical.free_vars

    def __eq__(self, other):
        return isinstance(other, TreeClass) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        from .syntax import print_tree

        return f"TreeClass({print_tree(self.canonical)})"


def canonical_encoding(t: VernonGraph) -> str:
    enc = _Encoder(t)
    return min(enc.encode(c, None) for c in _centers(t))


def canonicalize(t: VernonGraph) -> TreeClass:
    kind = require_tree(t)
    enc = _Encoder(t)
    code, root = min((enc.encode(c, None), c) for c in _centers(t))

    used = set(t.free_vars)
    new_name: dict[str, str] = {}

    def name():
        v = fresh("b", used)
        used.add(v)
        return v

    stack = [(root, None)]
    while stack:
        i, parent_var = stack.pop()
        children = []
        for v in enc.ordered_slots(i, parent_var):
            if v == parent_var or v not in t.partner:
                continue
            w = t.partner[v]
            new_name[v] = name()
            new_name[w] = name()
            children.append((t.owner(w), w))
        stack.extend(reversed(children))

    renamed = rename(t, Bijection({new: old for old, new in new_name.items()}))
    ordered = tuple(sorted(renamed.corollas, key=lambda c: c.key))
    return TreeClass(VernonGraph(ordered, renamed.edges), kind, code)


def alpha_eq(t1: VernonGraph, t2: VernonGraph) -> bool:
    return canonicalize(t1) == canonicalize(t2)


def single(inst: DecoratedInstance) -> VernonGraph:
    return VernonGraph((Ordinary(inst),), frozenset())


def exceptional(x: str, y: str) -> VernonGraph:
    return VernonGraph((Special(x, y),), frozenset())
