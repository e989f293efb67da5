"""The tree monad: its unit, and a multiplication that flattens trees of trees.

A two-level tree is a Vernon graph whose ordinary corollas are decorated by
tree classes.  Flattening splices each inner tree in place of its corolla;
multiplication flattens and then eliminates the special corollas.
"""

from __future__ import annotations

from .errors import ValidationError
from .naming import Bijection, fresh, sorted_vars
from .rewrite import normal_form
from .signature import DecoratedInstance, TreeDecoration, instance
from .trees import Ordinary, Special, TreeClass, VernonGraph, canonicalize, rename, single


def eta(f: DecoratedInstance) -> TreeClass:
    """The one-corolla tree class of ``f``."""
    return canonicalize(single(f))


def eta_decoration(decoration) -> TreeClass:
    return eta(instance(decoration))


def wrap(cls: TreeClass, attachment: Bijection | None = None) -> Ordinary:
    """An ordinary corolla decorated by ``cls``."""
    dec = TreeDecoration(cls)
    if attachment is None:
        return Ordinary(instance(dec))
    return Ordinary(DecoratedInstance(dec, attachment))


def flatten(t: VernonGraph) -> VernonGraph:
    """Splice every tree-decorated corolla of ``t`` into one extended tree."""
    used = set(t.variables)
    corollas = []
    edges = set(t.edges)
    for c in t.corollas:
        match c:
            case Special():
                corollas.append(c)
            case Ordinary(inst) if isinstance(inst.decoration, TreeDecoration):
                inner = inst.decoration.cls.canonical
                theta = {}
                for v in sorted_vars(inner.bound_vars):
                    w = fresh(v, used)
                    used.add(w)
                    theta[w] = v
                for p in inner.free_vars:
                    theta[inst.current(p)] = p
                spliced = rename(inner, Bijection(theta))
                corollas.extend(spliced.corollas)
                edges |= spliced.edges
            case Ordinary(inst):
                raise ValidationError(f"corolla {inst.decoration.label} is not decorated by a tree class")
    return VernonGraph(tuple(corollas), frozenset(edges))


def mu(t: VernonGraph | TreeClass) -> TreeClass:
    if isinstance(t, TreeClass):
        t = t.canonical
    return canonicalize(normal_form(flatten(t)))


def map_decorations(t: VernonGraph, fn) -> VernonGraph:
    """Replace each tree decoration ``K`` by ``fn(K)``, keeping attachments.

    ``fn`` must preserve free variables.
    """
    corollas = []
    for c in t.corollas:
        match c:
            case Ordinary(inst) if isinstance(inst.decoration, TreeDecoration):
                new = fn(inst.decoration.cls)
                if new.free_vars != inst.decoration.cls.free_vars:
                    raise ValidationError("decoration map changed the free variables")
                corollas.append(Ordinary(DecoratedInstance(TreeDecoration(new), inst.attachment)))
            case _:
                corollas.append(c)
    return VernonGraph(tuple(corollas), t.edges)


def mu_inner(t3: VernonGraph | TreeClass) -> TreeClass:
    """Apply the multiplication corolla by corolla, then once more at the top."""
    if isinstance(t3, TreeClass):
        t3 = t3.canonical
    return mu(map_decorations(t3, mu))


def mu_outer(t3: VernonGraph | TreeClass) -> TreeClass:
    """Apply the multiplication to the outer two levels first, then again."""
    return mu(mu(t3))


def eta_inner(t: VernonGraph | TreeClass) -> TreeClass:
    """Turn every decoration into its one-corolla tree."""
    if isinstance(t, TreeClass):
        t = t.canonical
    corollas = []
    for c in t.corollas:
        match c:
            case Ordinary(inst):
                corollas.append(wrap(eta_decoration(inst.decoration), inst.attachment))
            case _:
                corollas.append(c)
    return canonicalize(VernonGraph(tuple(corollas), t.edges))


def eta_outer(t: VernonGraph | TreeClass) -> TreeClass:
    """The one-corolla tree decorated by the whole class."""
    cls = t if isinstance(t, TreeClass) else canonicalize(t)
    return canonicalize(single(wrap(cls).instance))


def check_monad_laws(sig=None, bound: int = 5, seed: int = 0, count: int = 500):
    """Associativity and both unit laws on generated instances; returns a report."""
    from .laws import monad_suite

    return monad_suite(bound=bound, seed=seed, count=count, signature=sig)
