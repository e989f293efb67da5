"""The mu-syntax: commands and terms with a single binder.

Terms are variables or abstractions ``mu x. c``; commands are pairs
``<s | t>`` or applications ``f{t_x | x in X}``.  Every free variable occurs
exactly once.  Binders may shadow, so substitution and renaming avoid capture.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import ClashError, DomainError, TypingError
from .naming import Bijection, fresh, sorted_vars, var_key
from .signature import DecoratedInstance, instance


class _HashOnce:
    """Memoized structural hash; expressions are immutable and deeply nested."""

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash((type(self).__name__,) + tuple(getattr(self, f) for f in self.__dataclass_fields__))
            object.__setattr__(self, "_hash", h)
            return h


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Mu(_HashOnce):
    binder: str
    body: "MuCommand"

    __hash__ = _HashOnce.__hash__


@dataclass(frozen=True)
class Pair(_HashOnce):
    left: "MuTerm"
    right: "MuTerm"

    __hash__ = _HashOnce.__hash__


@dataclass(frozen=True)
class Apply(_HashOnce):
    """``f{...}``: one argument term per current variable of the instance, sorted by key."""

    instance: DecoratedInstance
    args: tuple[tuple[str, "MuTerm"], ...]

    def __post_init__(self):
        keys = [k for k, _ in self.args]
        if len(keys) != len(self.instance.variables) or not self.instance.variables.issuperset(keys):
            raise TypingError(
                f"arguments {sorted_vars(keys)} do not match the entries {sorted_vars(self.instance.variables)}"
            )
        ordered = tuple(sorted(self.args, key=lambda p: var_key(p[0])))
        if ordered != self.args:
            object.__setattr__(self, "args", ordered)

    __hash__ = _HashOnce.__hash__

    @classmethod
    def of(cls, inst: DecoratedInstance, args: Mapping[str, "MuTerm"]) -> Apply:
        return cls(inst, tuple(args.items()))

    def arg(self, k: str) -> "MuTerm":
        for key, t in self.args:
            if key == k:
                return t
        raise DomainError(f"{k!r} is not an entry of {self.instance.decoration.label}")

    def replace(self, k: str, t: "MuTerm") -> Apply:
        return Apply(self.instance, tuple((key, t if key == k else s) for key, s in self.args))


MuTerm = Union[Var, Mu]
MuCommand = Union[Pair, Apply]
MuExpr = Union[Var, Mu, Pair, Apply]


def is_term(e) -> bool:
    return isinstance(e, (Var, Mu))


def is_command(e) -> bool:
    return isinstance(e, (Pair, Apply))


def application(inst: DecoratedInstance, args: Mapping[str, MuTerm] | None = None) -> Apply:
    """``f{...}``; omitted arguments default to the entry's own variable."""
    args = dict(args or {})
    for v in inst.variables:
        args.setdefault(v, Var(v))
    return Apply.of(inst, args)


# variables and typing -------------------------------------------------------


@lru_cache(maxsize=65536)
def free_vars(e: MuExpr) -> frozenset[str]:
    match e:
        case Var(x):
            return frozenset((x,))
        case Mu(b, body):
            return free_vars(body) - {b}
        case Pair(s, t):
            return free_vars(s) | free_vars(t)
        case Apply(_, args):
            out = frozenset()
            for _, t in args:
                out |= free_vars(t)
            return out
    raise TypingError(f"not a mu-expression: {e!r}")


@lru_cache(maxsize=65536)
def all_names(e: MuExpr) -> frozenset[str]:
    """Every variable written in ``e``: free occurrences and binders."""
    match e:
        case Var(x):
            return frozenset((x,))
        case Mu(b, body):
            return all_names(body) | {b}
        case Pair(s, t):
            return all_names(s) | all_names(t)
        case Apply(_, args):
            out = frozenset()
            for _, t in args:
                out |= all_names(t)
            return out
    raise TypingError(f"not a mu-expression: {e!r}")


@lru_cache(maxsize=65536)
def mu_typeof(e: MuExpr) -> frozenset[str]:
    """The type of a command, or the unselected entries of a term."""
    match e:
        case Var(x):
            return frozenset((x,))
        case Mu(b, body):
            if not is_command(body):
                raise TypingError(f"body of mu {b} must be a command")
            T = mu_typeof(body)
            if b not in T:
                raise TypingError(f"binder {b!r} does not occur in its body")
            return T - {b}
        case Pair(s, t):
            if not (is_term(s) and is_term(t)):
                raise TypingError("both sides of a pair must be terms")
            X, Y = mu_typeof(s), mu_typeof(t)
            if X & Y:
                raise TypingError(f"pair sides share {sorted_vars(X & Y)}")
            return X | Y
        case Apply(_, args):
            out: frozenset[str] = frozenset()
            for k, t in args:
                if not is_term(t):
                    raise TypingError(f"argument {k} must be a term")
                Y = mu_typeof(t)
                if out & Y:
                    raise TypingError(f"arguments share {sorted_vars(out & Y)}")
                out |= Y
            return out
    raise TypingError(f"not a mu-expression: {e!r}")


def binder_count(e: MuExpr) -> int:
    match e:
        case Var():
            return 0
        case Mu(_, body):
            return 1 + binder_count(body)
        case Pair(s, t):
            return binder_count(s) + binder_count(t)
        case Apply(_, args):
            return sum(binder_count(t) for _, t in args)


def occurrences(e: MuExpr) -> dict[str, int]:
    """How often each variable occurs free; a well-typed expression has all counts 1."""
    out: dict[str, int] = {}

    def go(e, bound):
        match e:
            case Var(x):
                if x not in bound:
                    out[x] = out.get(x, 0) + 1
            case Mu(b, body):
                go(body, bound | {b})
            case Pair(s, t):
                go(s, bound)
                go(t, bound)
            case Apply(_, args):
                for _, t in args:
                    go(t, bound)

    go(e, frozenset())
    return out


# substitution and renaming --------------------------------------------------


def _rename_free(e: MuExpr, m: Mapping[str, str]) -> MuExpr:
    """Simultaneously rename free variables along ``m`` (old -> new), avoiding capture."""
    if not m:
        return e
    match e:
        case Var(x):
            return Var(m.get(x, x))
        case Mu(b, body):
            inner = {k: v for k, v in m.items() if k != b and k in free_vars(body)}
            if not inner:
                return e
            if b in inner.values():
                nb = fresh(b, all_names(body) | set(inner) | set(inner.values()))
                body = _rename_free(body, {b: nb})
                b = nb
            return Mu(b, _rename_free(body, inner))
        case Pair(s, t):
            return Pair(_rename_free(s, m), _rename_free(t, m))
        case Apply(inst, args):
            return Apply(inst, tuple((k, _rename_free(t, m)) for k, t in args))


def _subst(e: MuExpr, x: str, s: MuTerm, fv_s: frozenset[str]) -> MuExpr:
    match e:
        case Var(y):
            return s if y == x else e
        case Mu(b, body):
            if b == x or x not in free_vars(body):
                return e
            if b in fv_s:
                nb = fresh(b, all_names(body) | fv_s | {x})
                body = _rename_free(body, {b: nb})
                b = nb
            return Mu(b, _subst(body, x, s, fv_s))
        case Pair(l, r):
            if x in free_vars(l):
                return Pair(_subst(l, x, s, fv_s), r)
            return Pair(l, _subst(r, x, s, fv_s))
        case Apply(inst, args):
            return Apply(inst, tuple((k, _subst(t, x, s, fv_s) if x in free_vars(t) else t) for k, t in args))


def substitute(c: MuExpr, x: str, s: MuTerm) -> MuExpr:
    """``c[s/x]``: replace the unique free occurrence of ``x``."""
    fv_c = free_vars(c)
    if x not in fv_c:
        raise DomainError(f"{x!r} does not occur free")
    fv_s = free_vars(s)
    clash = fv_s & (fv_c - {x})
    if clash:
        raise ClashError(f"substituting would duplicate {sorted_vars(clash)}")
    return _subst(c, x, s, fv_s)


def rename_expr(e: MuExpr, sigma: Bijection) -> MuExpr:
    """``e^sigma`` for ``sigma : X' -> X`` onto the free variables of ``e``."""
    X = free_vars(e)
    if sigma.codomain != X:
        raise DomainError(f"renaming {sigma} does not land on {sorted_vars(X)}")
    return _rename_free(e, {x: sigma.inv(x) for x in X if sigma.inv(x) != x})


# reduction ------------------------------------------------------------------


def mu_step(e: MuExpr) -> set[MuExpr]:
    """All one-step reducts: swapping a pair, or contracting ``<mu x.c | s>``."""
    match e:
        case Var():
            return set()
        case Mu(b, body):
            return {Mu(b, c) for c in mu_step(body)}
        case Pair(s, t):
            out = {Pair(t, s)}
            if isinstance(s, Mu):
                out.add(substitute(s.body, s.binder, t))
            out |= {Pair(s2, t) for s2 in mu_step(s)}
            out |= {Pair(s, t2) for t2 in mu_step(t)}
            return out
        case Apply(_, args):
            out = set()
            for k, t in args:
                out |= {e.replace(k, t2) for t2 in mu_step(t)}
            return out
    raise TypingError(f"not a mu-expression: {e!r}")


def is_unit_command(c: MuExpr) -> bool:
    """``<u | v>`` with two bare variables: the normal form of a unit."""
    return isinstance(c, Pair) and isinstance(c.left, Var) and isinstance(c.right, Var)


def mu_normal_form(c: MuExpr) -> MuExpr:
    """Normalize a command (or term) by contracting pairs, left side first."""
    if is_term(c):
        return _nf_term(c)
    while isinstance(c, Pair):
        match c:
            case Pair(Mu(x, body), t):
                c = substitute(body, x, t)
            case Pair(s, Mu(y, body)):
                c = substitute(body, y, s)
            case _:
                return c
    return Apply(c.instance, tuple((k, _nf_term(t)) for k, t in c.args))


def _nf_term(t: MuTerm) -> MuTerm:
    match t:
        case Var():
            return t
        case Mu(x, body):
            nb = mu_normal_form(body)
            if is_unit_command(nb):
                # mu x.<x|v> and mu x.<v|x> both denote the plain variable v.
                a, b = nb.left.name, nb.right.name
                return Var(b if a == x else a)
            return Mu(x, nb)


def is_normal(e: MuExpr, top: bool = True) -> bool:
    """Membership in the normal-form grammar (a top-level unit command is admitted)."""
    match e:
        case Var():
            return True
        case Mu(_, body):
            return isinstance(body, Apply) and is_normal(body, top=False)
        case Apply(_, args):
            return all(is_normal(t, top=False) for _, t in args)
        case Pair():
            return top and is_unit_command(e)
    return False


# rotation on normal forms ---------------------------------------------------


def prime_step(c: Apply) -> list[Apply]:
    """Every rotation of a normal command, at the head and inside abstractions."""
    if not isinstance(c, Apply):
        return []
    out = []
    for k, t in c.args:
        if not isinstance(t, Mu):
            continue
        y, body = t.binder, t.body
        others = frozenset()
        for k2, t2 in c.args:
            if k2 != k:
                others |= free_vars(t2)
        x = k if k not in others else fresh(k, others | all_names(t) | {k})
        head = Mu(x, c.replace(k, Var(x)))
        out.append(substitute(body, y, head))
        for inner in prime_step(body):
            out.append(c.replace(k, Mu(y, inner)))
    return out


def prime_closure(c: Apply, limit: int = 100_000) -> set[MuExpr]:
    """Canonical forms of everything reachable from ``c`` by rotations."""
    start = mu_canonical(c)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for r in prime_step(d):
                k = mu_canonical(r)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
                    if len(seen) > limit:
                        from .errors import FuelExhausted

                        raise FuelExhausted(f"rotation closure exceeded {limit} commands")
        frontier = nxt
    return seen


# alpha-equivalence ----------------------------------------------------------


@lru_cache(maxsize=4096)
def identity_instance(decoration) -> DecoratedInstance:
    return instance(decoration)


def normalize_indexing(e: MuExpr) -> MuExpr:
    """Re-key every application by its decoration's profile (identity attachment)."""
    match e:
        case Var():
            return e
        case Mu(b, body):
            return Mu(b, normalize_indexing(body))
        case Pair(s, t):
            return Pair(normalize_indexing(s), normalize_indexing(t))
        case Apply(inst, args):
            d = dict(args)
            new = identity_instance(inst.decoration)
            return Apply.of(new, {p: normalize_indexing(d[inst.current(p)]) for p in inst.decoration.profile})


def mu_canonical(e: MuExpr) -> MuExpr:
    """Binders numbered ``m#k`` in leftmost-outermost order, applications re-keyed by profile."""
    used = set(free_vars(e))

    def go(e, env):
        match e:
            case Var(x):
                return Var(env.get(x, x))
            case Mu(b, body):
                nb = fresh("m", used)
                used.add(nb)
                return Mu(nb, go(body, {**env, b: nb}))
            case Pair(s, t):
                left = go(s, env)
                return Pair(left, go(t, env))
            case Apply(inst, args):
                d = dict(args)
                new = identity_instance(inst.decoration)
                out = {}
                for p in inst.decoration.profile:
                    out[p] = go(d[inst.current(p)], env)
                return Apply.of(new, out)

    return go(e, {})


def mu_alpha_eq(e1: MuExpr, e2: MuExpr) -> bool:
    return mu_canonical(e1) == mu_canonical(e2)


def vars_in(es: Iterable[MuExpr]) -> frozenset[str]:
    out = frozenset()
    for e in es:
        out |= all_names(e)
    return out
