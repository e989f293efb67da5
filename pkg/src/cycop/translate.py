"""From mu-syntax to combinators and tree classes, and back.

``translate`` turns a command into a combinator (a term is translated at a
fresh index variable that stands for its selected entry).  ``phi`` evaluates
that combinator in the tree model; ``phi_direct`` computes the same class
clause by clause without building the combinator.  ``delta`` evaluates a
decorated tree in any operad model by extracting a command for it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinators import Act, Combinator, Comp, Id, Param, interpret
from .decompose import command_of
from .errors import TypingError, ValidationError
from .mu import Apply, Mu, MuExpr, MuTerm, Pair, Var, all_names, is_term, mu_typeof, rename_expr, substitute
from .naming import Bijection, fresh, sorted_vars
from .operad import TREE_MODEL, Entry, OperadModel, total_composition, vt_action, vt_compose, vt_unit
from .rewrite import normal_form
from .signature import DecoratedInstance, TreeDecoration, act, instance
from .trees import Ordinary, TreeClass, VernonGraph, edge, require_tree, single


@dataclass(frozen=True)
class IndexedTerm:
    """A term together with the fresh variable its translation is indexed by."""

    term: MuTerm
    index: str

    def __post_init__(self):
        if self.index in all_names(self.term):
            raise ValidationError(f"index {self.index!r} is not fresh for the term")


class _Fresh:
    def __init__(self, avoid):
        self.used = set(avoid)

    def __call__(self, hint: str = "i") -> str:
        v = fresh(hint, self.used)
        self.used.add(v)
        return v


class Translator:
    """Deterministic translation; fresh indices are drawn in traversal order."""

    def __init__(self, avoid=()):
        self.fresh = _Fresh(avoid)

    def command(self, c: MuExpr) -> Combinator:
        match c:
            case Pair(s, t):
                x, y = self.fresh(), self.fresh()
                return Comp(self.term(s, x), x, y, self.term(t, y))
            case Apply(inst, args):
                X = inst.variables
                residue = frozenset()
                for _, t in args:
                    residue |= mu_typeof(t)
                target = {x: x for x in X}
                head = inst
                if residue & X:
                    pairs = {}
                    for x in sorted_vars(X):
                        w = self.fresh(x)
                        pairs[w] = x
                        target[x] = w
                    head = act(inst, Bijection(pairs))
                acc: Combinator = Param(head)
                for k, t in args:
                    bar = self.fresh(k)
                    acc = Comp(acc, target[k], bar, self.term(t, bar))
                return acc
        raise TypingError(f"not a command: {c!r}")

    def term(self, t: MuTerm, y: str) -> Combinator:
        match t:
            case Var(x):
                return Id(x, y)
            case Mu(x, body):
                return self.command(substitute(body, x, Var(y)))
        raise TypingError(f"not a term: {t!r}")


def translate(e: MuExpr | IndexedTerm, index: str | None = None) -> Combinator:
    """The combinator of a command, or of a term at ``index`` (fresh if omitted)."""
    if isinstance(e, IndexedTerm):
        e, index = e.term, e.index
    mu_typeof(e)
    tr = Translator(all_names(e) | ({index} if index else set()))
    if is_term(e):
        if index is None:
            index = tr.fresh()
        return tr.term(e, index)
    return tr.command(e)


def phi(e: MuExpr, index: str | None = None) -> TreeClass:
    """The tree class a command (or an indexed term) denotes."""
    return interpret(translate(e, index), TREE_MODEL)


class _Direct:
    def __init__(self, avoid):
        self.fresh = _Fresh(avoid)

    def command(self, c: MuExpr) -> TreeClass:
        match c:
            case Pair(s, t):
                x, y = self.fresh(), self.fresh()
                return vt_compose(self.term(s, x), x, y, self.term(t, y))
            case Apply(inst, args):
                entries = {}
                for k, t in args:
                    bar = self.fresh(k)
                    entries[k] = Entry(self.term(t, bar), bar)
                return total_composition(TREE_MODEL.embed(inst), entries, TREE_MODEL)
        raise TypingError(f"not a command: {c!r}")

    def term(self, t: MuTerm, y: str) -> TreeClass:
        match t:
            case Var(x):
                return vt_unit(x, y)
            case Mu(x, body):
                cls = self.command(body)
                kappa = Bijection({(y if v == x else v): v for v in cls.free_vars})
                return vt_action(cls, kappa)
        raise TypingError(f"not a term: {t!r}")


def phi_direct(e: MuExpr, index: str | None = None) -> TreeClass:
    """The same class as :func:`phi`, computed clause by clause on tree classes."""
    mu_typeof(e)
    d = _Direct(all_names(e) | ({index} if index else set()))
    if is_term(e):
        return d.term(e, index or d.fresh())
    return d.command(e)


def mu_equiv(c1: MuExpr, c2: MuExpr) -> bool:
    """Equality in the mu-theory, decided by comparing denoted tree classes."""
    T1, T2 = mu_typeof(c1), mu_typeof(c2)
    if T1 != T2:
        raise TypingError(f"cannot compare commands of types {sorted_vars(T1)} and {sorted_vars(T2)}")
    return phi(c1) == phi(c2)


def comb_to_mu(c: Combinator) -> MuExpr:
    """A command denoting the same element as the combinator."""
    match c:
        case Param(inst):
            return Apply.of(inst, {v: Var(v) for v in inst.variables})
        case Id(x, y):
            return Pair(Var(x), Var(y))
        case Comp(left, x, y, right):
            return Pair(Mu(x, comb_to_mu(left)), Mu(y, comb_to_mu(right)))
        case Act(body, sigma):
            return rename_expr(comb_to_mu(body), sigma)
    raise TypingError(f"not a combinator: {c!r}")


# algebra structure map ------------------------------------------------------


def _ordinary_form(t: VernonGraph | TreeClass) -> VernonGraph:
    if isinstance(t, TreeClass):
        t = t.canonical
    require_tree(t)
    return normal_form(t)


def delta(t: VernonGraph | TreeClass, model: OperadModel = TREE_MODEL, at: int = 0):
    """Evaluate a tree whose decorations are elements of ``model``.

    Special corollas are eliminated first; the remaining tree is read as a
    command headed by corolla ``at`` and that command is interpreted.
    """
    g = _ordinary_form(t)
    return interpret(translate(command_of(g, at)), model)


def delta_every_head(t: VernonGraph | TreeClass, model: OperadModel = TREE_MODEL) -> list:
    """``delta`` computed once per choice of head corolla."""
    g = _ordinary_form(t)
    return [interpret(translate(command_of(g, i)), model) for i in range(len(g.corollas))]


def embed_element(cls: TreeClass, current: dict[str, str] | None = None) -> Ordinary:
    """An ordinary corolla decorated by a tree-model element."""
    dec = TreeDecoration(cls)
    if current is None:
        return Ordinary(instance(dec))
    return Ordinary(DecoratedInstance(dec, Bijection(current)))


def delta_compose(a: TreeClass, x: str, y: str, b: TreeClass) -> TreeClass:
    """Partial composition recovered from ``delta``: evaluate the two-corolla tree joining ``a`` and ``b``."""
    used = set(a.free_vars) | set(b.free_vars)
    x2 = fresh(x, used)
    used.add(x2)
    y2 = fresh(y, used)
    left = embed_element(a, {(x2 if v == x else v): v for v in a.free_vars})
    right = embed_element(b, {(y2 if v == y else v): v for v in b.free_vars})
    return delta(VernonGraph((left, right), frozenset({edge(x2, y2)})))


def delta_eta(cls: TreeClass) -> TreeClass:
    """``delta`` applied to the one-corolla tree decorated by ``cls``."""
    return delta(single(embed_element(cls).instance))
