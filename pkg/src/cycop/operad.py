"""Biased cyclic-operad structure: renaming, partial composition, units, total composition.

``OperadModel`` is the interface a carrier must provide.  ``TreeModel`` realizes
it on tree classes by grafting; ``ProfileModel`` is the terminal model whose
elements are just their variable sets and serves as a cheap cross-check.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any, Protocol

from .errors import ClashError, DomainError, ValidationError
from .monad import eta
from .naming import Bijection, fresh, sorted_vars
from .rewrite import normal_form
from .signature import BaseParameter, DecoratedInstance, TreeDecoration
from .trees import TreeClass, VernonGraph, canonicalize, edge, exceptional, rename


class OperadModel(Protocol):
    def vars(self, a) -> frozenset[str]: ...

    def embed(self, f: DecoratedInstance) -> Any: ...

    def act(self, a, sigma: Bijection) -> Any: ...

    def compose(self, a, x: str, y: str, b) -> Any: ...

    def unit(self, x: str, y: str) -> Any: ...


def check_composable(X: frozenset, x: str, Y: frozenset, y: str):
    if x not in X:
        raise DomainError(f"{x!r} is not an entry of the left operand {sorted_vars(X)}")
    if y not in Y:
        raise DomainError(f"{y!r} is not an entry of the right operand {sorted_vars(Y)}")
    clash = (X - {x}) & (Y - {y})
    if clash:
        raise ClashError(f"composition along {x},{y} would share {sorted_vars(clash)}")


# tree model -----------------------------------------------------------------


def vt_action(c: TreeClass, kappa: Bijection) -> TreeClass:
    """Rename the free variables of ``c`` along ``kappa : X' -> X``."""
    X = c.free_vars
    if kappa.codomain != X:
        raise DomainError(f"renaming {kappa} does not land on {sorted_vars(X)}")
    if kappa.is_identity():
        return c
    t = c.canonical
    used = set(t.variables) | set(kappa.domain)
    eps = {}
    for v in sorted_vars(t.bound_vars):
        w = fresh(v, used)
        used.add(w)
        eps[w] = v
    return canonicalize(rename(t, kappa + Bijection(eps)))


def graft(t1: VernonGraph, x: str, t2: VernonGraph, y: str) -> VernonGraph:
    """The extended tree joining ``t1`` at ``x`` to ``t2`` at ``y``, before normalization."""
    check_composable(t1.free_vars, x, t2.free_vars, y)
    used = set(t1.variables) | set(t2.variables)

    def freshen(t, keep_out):
        theta = {}
        for v in sorted_vars(t.bound_vars | {keep_out}):
            w = fresh(v, used)
            used.add(w)
            theta[w] = v
        return rename(t, Bijection(theta)), {old: new for new, old in theta.items()}

    r1, m1 = freshen(t1, x)
    r2, m2 = freshen(t2, y)
    return VernonGraph(r1.corollas + r2.corollas, r1.edges | r2.edges | {edge(m1[x], m2[y])})


def vt_compose(c1: TreeClass, x: str, y: str, c2: TreeClass) -> TreeClass:
    return canonicalize(normal_form(graft(c1.canonical, x, c2.canonical, y)))


def vt_unit(x: str, y: str) -> TreeClass:
    if x == y:
        raise ValidationError(f"unit needs two distinct variables, got {x!r} twice")
    return canonicalize(exceptional(x, y))


def element_of(decoration) -> TreeClass:
    """The tree-model element a decoration stands for."""
    match decoration:
        case TreeDecoration(cls):
            return cls
        case BaseParameter():
            from .signature import instance

            return eta(instance(decoration))
    raise ValidationError(f"cannot interpret decoration {decoration!r}")


class TreeModel:
    """Tree classes under grafting."""

    name = "tree"

    def vars(self, a: TreeClass) -> frozenset[str]:
        return a.free_vars

    def embed(self, f: DecoratedInstance) -> TreeClass:
        return vt_action(element_of(f.decoration), f.attachment)

    def act(self, a: TreeClass, sigma: Bijection) -> TreeClass:
        return vt_action(a, sigma)

    def compose(self, a: TreeClass, x: str, y: str, b: TreeClass) -> TreeClass:
        return vt_compose(a, x, y, b)

    def unit(self, x: str, y: str) -> TreeClass:
        return vt_unit(x, y)


class ProfileModel:
    """The terminal cyclic operad: an element is only its set of entries."""

    name = "profile"

    def vars(self, a: frozenset) -> frozenset[str]:
        return a

    def embed(self, f: DecoratedInstance) -> frozenset:
        return f.variables

    def act(self, a: frozenset, sigma: Bijection) -> frozenset:
        if sigma.codomain != a:
            raise DomainError(f"renaming {sigma} does not land on {sorted_vars(a)}")
        return sigma.domain

    def compose(self, a: frozenset, x: str, y: str, b: frozenset) -> frozenset:
        check_composable(a, x, b, y)
        return (a - {x}) | (b - {y})

    def unit(self, x: str, y: str) -> frozenset:
        if x == y:
            raise ValidationError(f"unit needs two distinct variables, got {x!r} twice")
        return frozenset((x, y))


TREE_MODEL = TreeModel()


# total composition ----------------------------------------------------------


@dataclass(frozen=True)
class Entry:
    """What a total composition grafts onto one entry: an operand and its joining variable."""

    operand: Any
    entry: str


def check_assignment(model: OperadModel, X: frozenset, phi: Mapping[str, Entry]):
    if set(phi) != set(X):
        raise DomainError(
            f"assignment covers {sorted_vars(phi)} but the entries are {sorted_vars(X)}"
        )
    seen: dict[str, str] = {}
    for x in sorted_vars(X):
        e = phi[x]
        Y = model.vars(e.operand)
        if e.entry not in Y:
            raise DomainError(f"joining variable {e.entry!r} is not an entry of the operand for {x!r}")
        for v in Y - {e.entry}:
            if v in seen:
                raise ClashError(f"operands for {seen[v]!r} and {x!r} share the variable {v!r}")
            seen[v] = x


def total_composition(f, phi: Mapping[str, Entry], model: OperadModel = TREE_MODEL, order=None):
    """Graft ``phi[x].operand`` onto every entry ``x`` of ``f``.

    Entries are grafted in ascending order unless ``order`` is given.  If an
    operand's residual variables meet the entries of ``f``, the entries are
    first moved to fresh names.
    """
    X = model.vars(f)
    check_assignment(model, X, phi)
    residue = set()
    for e in phi.values():
        residue |= model.vars(e.operand) - {e.entry}
    target = {x: x for x in X}
    acc = f
    if residue & X:
        used = set(X) | residue
        for e in phi.values():
            used |= model.vars(e.operand)
        pairs = {}
        for x in sorted_vars(X):
            w = fresh(x, used)
            used.add(w)
            pairs[w] = x
            target[x] = w
        acc = model.act(f, Bijection(pairs))
    for x in order or sorted_vars(X):
        e = phi[x]
        acc = model.compose(acc, target[x], e.entry, e.operand)
    return acc


def unit_entry(model: OperadModel, x: str, avoid) -> Entry:
    """An assignment entry that leaves ``x`` in place."""
    bar = fresh(x, set(avoid) | {x})
    return Entry(model.unit(bar, x), bar)


def complete_with_units(model: OperadModel, f, phi: Mapping[str, Entry]) -> dict[str, Entry]:
    """Fill the entries ``phi`` leaves out with units."""
    X = model.vars(f)
    used = set(X)
    for e in phi.values():
        used |= model.vars(e.operand)
    out = dict(phi)
    for x in sorted_vars(X - set(phi)):
        u = unit_entry(model, x, used)
        used.add(u.entry)
        out[x] = u
    return out


def check_operad_axioms(model: OperadModel | None = None, bound: int = 4, seed: int = 0, count: int = 200):
    from .laws import operad_suite

    return operad_suite(model=model or TREE_MODEL, bound=bound, seed=seed, count=count)


def total_composition_properties(model: OperadModel | None = None, bound: int = 4, seed: int = 0, count: int = 100):
    from .laws import total_composition_suite

    return total_composition_suite(model=model or TREE_MODEL, bound=bound, seed=seed, count=count)
