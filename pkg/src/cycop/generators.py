"""Seeded random and enumerated instances for the law suites and tests."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence

from .combinators import Act, Combinator, Comp, Id, Param, typeof
from .mu import Apply, Mu, MuExpr, Pair, Var, _rename_free, free_vars
from .naming import Bijection, sorted_vars
from .signature import BaseParameter, Signature, TreeDecoration, act, instance
from .trees import Ordinary, Special, TreeClass, VernonGraph, canonicalize, edge, exceptional, rename

PROFILE_POOL = ("x", "y", "z", "u", "v", "w")


class Names:
    """Distinct user-style variable names, drawn in order."""

    def __init__(self, stem: str = "n"):
        self.stem = stem
        self.k = 0

    def __call__(self) -> str:
        self.k += 1
        return f"{self.stem}{self.k}"

    def many(self, n: int) -> list[str]:
        return [self() for _ in range(n)]


def random_signature(rng: random.Random, count: int = 4, max_arity: int = 4) -> Signature:
    sig = Signature()
    for i in range(count):
        arity = rng.randint(1, max_arity)
        sig.declare(f"f{i}", rng.sample(PROFILE_POOL, arity))
    return sig


def default_signature() -> Signature:
    return Signature.of(
        BaseParameter("f", ("x", "y", "z", "u")),
        BaseParameter("g", ("a", "b", "c", "d")),
        BaseParameter("h", ("p", "q")),
        BaseParameter("k", ("x", "y", "z")),
        BaseParameter("m", ("u",)),
    )


# graphs -----------------------------------------------------------------------


def _shape(rng: random.Random, arities: Sequence[int]) -> list[tuple[int, int]] | None:
    """A random spanning tree on nodes with the given maximum degrees, or None."""
    n = len(arities)
    order = list(range(n))
    rng.shuffle(order)
    order.sort(key=lambda i: -arities[i] if n > 2 else 0)
    spare = {order[0]: arities[order[0]]}
    arcs = []
    for j in order[1:]:
        hosts = [i for i, s in spare.items() if s > 0]
        if not hosts:
            return None
        i = rng.choice(hosts)
        spare[i] -= 1
        spare[j] = arities[j] - 1
        arcs.append((i, j))
    return arcs


def graph_from_decorations(
    rng: random.Random, decorations: Sequence, n_special: int = 0, names: Names | None = None
) -> VernonGraph:
    """A random tree whose ordinary corollas carry ``decorations`` plus ``n_special`` special corollas."""
    names = names or Names()
    kinds = list(decorations) + [None] * n_special
    rng.shuffle(kinds)
    arities = [2 if d is None else len(d.profile) for d in kinds]
    if len(kinds) > 1 and 0 in arities:
        raise ValueError("a decoration without variables cannot be joined to anything")
    for _ in range(50):
        arcs = _shape(rng, arities)
        if arcs is not None:
            break
    else:
        raise ValueError("decorations cannot be joined into a tree")
    slots = [names.many(a) for a in arities]
    free = [list(s) for s in slots]
    for lst in free:
        rng.shuffle(lst)
    edges = []
    for i, j in arcs:
        edges.append(edge(free[i].pop(), free[j].pop()))
    corollas = []
    for d, s in zip(kinds, slots):
        if d is None:
            corollas.append(Special(s[0], s[1]))
        else:
            cur = list(s)
            rng.shuffle(cur)
            corollas.append(Ordinary(instance(d, cur)))
    return VernonGraph(tuple(corollas), frozenset(edges))


def random_tree(
    rng: random.Random, sig: Signature, n_ordinary: int, n_special: int = 0, names: Names | None = None
) -> VernonGraph:
    params = list(sig)
    if n_ordinary + n_special == 0:
        raise ValueError("empty tree")
    for _ in range(100):
        decs = [rng.choice(params) for _ in range(n_ordinary)]
        try:
            return graph_from_decorations(rng, decs, n_special, names)
        except ValueError:
            continue
    raise ValueError("could not build a tree with this signature")


def random_class(rng: random.Random, sig: Signature, max_corollas: int, exceptional_rate: float = 0.0) -> TreeClass:
    if rng.random() < exceptional_rate:
        a, b = rng.sample(PROFILE_POOL, 2)
        return canonicalize(exceptional(a, b))
    while True:
        t = random_tree(rng, sig, rng.randint(1, max_corollas))
        if t.free_vars:
            return canonicalize(relabel_free(rng, t))


def relabel_free(rng: random.Random, t: VernonGraph) -> VernonGraph:
    """Rename free variables to short names so classes share variables with each other."""
    fv = sorted_vars(t.free_vars)
    pool = [f"{p}{k}" if k else p for k in range(3) for p in PROFILE_POOL]
    targets = [v for v in pool if v not in t.bound_vars][: len(fv)]
    rng.shuffle(targets)
    return rename(t, Bijection(dict(zip(targets, fv))))


def random_two_level(
    rng: random.Random,
    sig: Signature,
    outer: int,
    inner: int,
    exceptional_rate: float = 0.2,
    n_special: int = 0,
) -> VernonGraph:
    """An outer tree whose ordinary corollas are decorated by random classes."""
    for _ in range(100):
        decs = [TreeDecoration(random_class(rng, sig, inner, exceptional_rate)) for _ in range(outer)]
        try:
            return graph_from_decorations(rng, decs, n_special)
        except ValueError:
            continue
    raise ValueError("could not build a two-level tree with this signature")


def random_three_level(rng: random.Random, sig: Signature, bound: int, exceptional_rate: float = 0.2) -> VernonGraph:
    per = min(bound, 3)
    for _ in range(100):
        try:
            return graph_from_decorations(rng, _middle_decorations(rng, sig, per, exceptional_rate))
        except ValueError:
            continue
    raise ValueError("could not build a three-level tree with this signature")


def _middle_decorations(rng, sig, per, exceptional_rate) -> list[TreeDecoration]:
    decs = []
    for _ in range(rng.randint(1, per)):
        if rng.random() < exceptional_rate:
            a, b = rng.sample(PROFILE_POOL, 2)
            decs.append(TreeDecoration(canonicalize(exceptional(a, b))))
        else:
            mid = random_two_level(rng, sig, rng.randint(1, per), per, exceptional_rate)
            while not mid.free_vars:
                mid = random_two_level(rng, sig, rng.randint(1, per), per, exceptional_rate)
            decs.append(TreeDecoration(canonicalize(relabel_free(rng, mid))))
    return decs


def alpha_variant(rng: random.Random, t: VernonGraph) -> VernonGraph:
    """Rename bound variables at random and shuffle the corolla order."""
    bound = sorted_vars(t.bound_vars)
    used = set(t.variables)
    new = []
    for k in range(len(bound)):
        while True:
            cand = f"r{rng.randint(0, 10 * len(bound) + 10)}"
            if cand not in used:
                break
        used.add(cand)
        new.append(cand)
    g = rename(t, Bijection(dict(zip(new, bound))))
    cs = list(g.corollas)
    rng.shuffle(cs)
    return VernonGraph(tuple(cs), g.edges)


# enumerated corpus --------------------------------------------------------------

SHAPES: dict[int, list[list[int]]] = {
    1: [[]],
    2: [[0]],
    3: [[0, 1]],
    4: [[0, 1, 2], [0, 0, 0]],
    5: [[0, 1, 2, 3], [0, 0, 0, 0], [0, 0, 0, 1]],
}


def corpus(max_corollas: int = 5, uniform: bool = True) -> Iterator[VernonGraph]:
    """Every tree shape up to ``max_corollas`` with every choice of one extra free variable per corolla.

    With ``uniform`` the decoration depends only on the arity, which produces
    symmetric trees; otherwise every corolla gets its own parameter.
    """
    for n in range(1, max_corollas + 1):
        for parents in SHAPES[n]:
            arcs = [(p, i + 1) for i, p in enumerate(parents)]
            degree = [0] * n
            for i, j in arcs:
                degree[i] += 1
                degree[j] += 1
            for mask in range(2**n):
                extra = [(mask >> i) & 1 for i in range(n)]
                arity = [degree[i] + extra[i] for i in range(n)]
                if 0 in arity:
                    continue
                for style in ((True, False) if uniform else (False,)):
                    yield _corpus_tree(n, arcs, arity, style)


def _corpus_tree(n, arcs, arity, uniform) -> VernonGraph:
    names = Names("t")
    slots = [names.many(a) for a in arity]
    free = [list(s) for s in slots]
    edges = [edge(free[i].pop(0), free[j].pop(0)) for i, j in arcs]
    corollas = []
    for i in range(n):
        pname = f"p{arity[i]}" if uniform else f"q{i}"
        dec = BaseParameter(pname, PROFILE_POOL[: arity[i]])
        corollas.append(Ordinary(instance(dec, slots[i])))
    return VernonGraph(tuple(corollas), frozenset(edges))


def corpus_signature(max_corollas: int = 5) -> Signature:
    sig = Signature()
    for t in corpus(max_corollas):
        for c in t.corollas:
            d = c.instance.decoration
            sig.declare(d.name, d.profile)
    return sig


# mu-expressions -------------------------------------------------------------------


def random_command(rng: random.Random, sig: Signature, depth: int, names: Names | None = None) -> MuExpr:
    names = names or Names("m")
    params = list(sig)

    def term(d):
        if d <= 0 or rng.random() < 0.45:
            return Var(names())
        c = command(d - 1)
        fv = sorted_vars(free_vars(c))
        return Mu(rng.choice(fv), c) if fv else Var(names())

    def command(d):
        if rng.random() < 0.3:
            return Pair(term(d), term(d))
        dec = rng.choice(params)
        cur = names.many(len(dec.profile))
        rng.shuffle(cur)
        inst = instance(dec, cur)
        return Apply.of(inst, {v: term(d) for v in cur})

    while True:
        c = command(depth)
        if free_vars(c):
            return c


def random_term(rng: random.Random, sig: Signature, depth: int, names: Names | None = None) -> MuExpr:
    names = names or Names("m")
    while True:
        c = random_command(rng, sig, depth, names)
        fv = sorted_vars(free_vars(c))
        if len(fv) > 1:
            return Mu(rng.choice(fv), c)


def mu_alpha_variant(rng: random.Random, e: MuExpr, pool: Sequence[str] = ("a", "b", "c", "x", "y")) -> MuExpr:
    """Rebind binders to names from a small pool, creating shadowing where legal."""
    match e:
        case Var():
            return e
        case Mu(b, body):
            body = mu_alpha_variant(rng, body, pool)
            n = rng.choice(pool)
            if n == b or n in free_vars(body):
                return Mu(b, body)
            return Mu(n, _rename_free(body, {b: n}))
        case Pair(s, t):
            return Pair(mu_alpha_variant(rng, s, pool), mu_alpha_variant(rng, t, pool))
        case Apply(inst, args):
            return Apply(inst, tuple((k, mu_alpha_variant(rng, t, pool)) for k, t in args))


def reindex(rng: random.Random, c: Apply) -> Apply:
    """A variant equal by reindexing: rename the instance's current variables and re-key the arguments."""
    inst = c.instance
    old = sorted_vars(inst.variables)
    new = [f"k{i}" for i in range(len(old))]
    rng.shuffle(new)
    tau = Bijection(dict(zip(new, old)))
    d = dict(c.args)
    return Apply.of(act(inst, tau), {w: d[tau(w)] for w in new})


# combinators --------------------------------------------------------------------


def random_comb(rng: random.Random, sig: Signature, depth: int, names: Names | None = None) -> Combinator:
    names = names or Names("c")
    params = list(sig)

    def go(d):
        r = rng.random()
        if d <= 0 or r < 0.25:
            if rng.random() < 0.2:
                return Id(names(), names())
            dec = rng.choice(params)
            cur = names.many(len(dec.profile))
            return Param(instance(dec, cur))
        if r < 0.4:
            body = go(d - 1)
            X = sorted_vars(typeof(body))
            perm = list(X)
            rng.shuffle(perm)
            if rng.random() < 0.5:
                perm = [names() if rng.random() < 0.5 else p for p in perm]
            return Act(body, Bijection(dict(zip(perm, X))))
        left, right = go(d - 1), go(d - 1)
        while not typeof(left):
            left = go(d - 1)
        while not typeof(right):
            right = go(d - 1)
        x = rng.choice(sorted_vars(typeof(left)))
        y = rng.choice(sorted_vars(typeof(right)))
        return Comp(left, x, y, right)

    return go(depth)
