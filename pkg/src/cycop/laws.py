"""Randomized and enumerated law suites with text and JSON reports.

Every suite draws its instances from ``random.Random`` seeded by the suite
name and the user seed, so a report is reproducible bit for bit.
"""

from __future__ import annotations

import json
import random
from collections.abc import Callable
from dataclasses import dataclass, field

from . import generators as gen
from .combinators import interpret
from .decompose import (
    command_of,
    decomposition,
    pluck,
    pluck_by_rules,
    reconstruct,
    subtrees_satisfying,
)
from .errors import CycopError
from .monad import eta_inner, eta_outer, mu, mu_inner, mu_outer
from .mu import free_vars, is_normal, mu_alpha_eq, mu_canonical, mu_normal_form, mu_step, prime_closure, prime_step, rename_expr, substitute
from .naming import Bijection, fresh, sorted_vars
from .operad import TREE_MODEL, Entry, OperadModel, complete_with_units, total_composition, unit_entry
from .rewrite import expected_steps, survey_reductions
from .syntax import print_object
from .translate import comb_to_mu, delta, delta_compose, delta_every_head, delta_eta, phi, phi_direct
from .trees import canonicalize

SUITES = ("operad", "monad", "translate", "decompose", "rewrite", "all")


@dataclass
class Failure:
    law: str
    witness: str


@dataclass
class LawReport:
    suite: str
    bound: int
    seed: int
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, law: str, ok: bool, witness: Callable[[], str] | str = ""):
        self.counts[law] = self.counts.get(law, 0) + 1
        if not ok:
            self.failures.append(Failure(law, witness() if callable(witness) else witness))

    def guarded(self, law: str, fn: Callable[[], bool], witness: Callable[[], str]):
        """Run one check; an exception counts as a failure carrying its message."""
        try:
            ok = fn()
        except CycopError as e:
            msg = f"raised {type(e).__name__}: {e}"
            self.check(law, False, lambda: f"{witness()}  {msg}")
            return
        self.check(law, ok, witness)

    def failed(self, law: str) -> int:
        return sum(1 for f in self.failures if f.law == law)

    def merge(self, other: LawReport) -> LawReport:
        for k, v in other.counts.items():
            self.counts[k] = self.counts.get(k, 0) + v
        self.failures.extend(other.failures)
        return self

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  bound {self.bound}  seed {self.seed}"]
        for law in sorted(self.counts):
            n, bad = self.counts[law], self.failed(law)
            lines.append(f"  {'FAIL' if bad else 'ok  '}  {law:<28} {n:>6} checked  {bad} failed")
        for f in self.failures[:20]:
            lines.append(f"  counterexample [{f.law}]: {f.witness}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "bound": self.bound,
                "seed": self.seed,
                "ok": self.ok,
                "counts": dict(sorted(self.counts.items())),
                "failures": [{"law": f.law, "witness": f.witness} for f in self.failures],
            },
            indent=2,
        )


def _rng(suite: str, seed: int) -> random.Random:
    return random.Random(f"{suite}:{seed}")


def _show(*objs) -> str:
    return "  ".join(print_object(o) if not isinstance(o, str) else o for o in objs)


# operad ---------------------------------------------------------------------------


def _fresh_class(rng, sig, bound, prefix, exceptional_rate=0.15, model: OperadModel = TREE_MODEL):
    """A random element whose variables are ``prefix1, prefix2, ...``.

    Elements of models other than the tree model are the images of random tree classes.
    """
    cls = gen.random_class(rng, sig, bound, exceptional_rate)
    fv = sorted_vars(cls.free_vars)
    names = [f"{prefix}{i}" for i in range(1, len(fv) + 1)]
    rng.shuffle(names)
    cls = TREE_MODEL.act(cls, Bijection(dict(zip(names, fv))))
    return cls if model is TREE_MODEL else delta(cls, model)


def _rename_one(model, a, old, new):
    if old == new:
        return a
    X = model.vars(a)
    return model.act(a, Bijection({(new if v == old else v): v for v in X}))


def operad_suite(model: OperadModel = TREE_MODEL, bound: int = 4, seed: int = 0, count: int = 200, signature=None) -> LawReport:
    rng = _rng("operad", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("operad", bound, seed)
    m = model

    def cls(prefix, min_vars=1):
        while True:
            c = _fresh_class(rng, sig, bound, prefix, model=m)
            if len(m.vars(c)) >= min_vars:
                return c

    def pick(a, k=1):
        return rng.sample(sorted_vars(m.vars(a)), k)

    for _ in range(count):
        # A1: sequential composition through the middle operand
        f, g, h = cls("f"), cls("g", 2), cls("h")
        (x,), (y, u), (z,) = pick(f), pick(g, 2), pick(h)
        if rng.random() < 0.3:
            g = _rename_one(m, g, y, x)
            y = x
        lhs = lambda: m.compose(m.compose(f, x, y, g), u, z, h)
        rhs = lambda: m.compose(f, x, y, m.compose(g, u, z, h))
        rep.guarded("A1", lambda: lhs() == rhs(), lambda: _show(f, g, h, f"x={x} y={y} u={u} z={z}"))

        # A2: parallel composition on two entries of the same operand
        f, g, h = cls("f", 2), cls("g"), cls("h")
        (x, u), (y,), (z,) = pick(f, 2), pick(g), pick(h)
        lhs = lambda: m.compose(m.compose(f, x, y, g), u, z, h)
        rhs = lambda: m.compose(m.compose(f, u, z, h), x, y, g)
        rep.guarded("A2", lambda: lhs() == rhs(), lambda: _show(f, g, h, f"x={x} u={u} y={y} z={z}"))

        # EQ: renaming commutes with composition
        f, g = cls("f"), cls("g")
        (x,), (y,) = pick(f), pick(g)
        X, Y = sorted_vars(m.vars(f)), sorted_vars(m.vars(g))
        s1 = Bijection({f"s{i}": v for i, v in enumerate(X)})
        s2 = Bijection({f"t{i}": v for i, v in enumerate(Y)})
        if rng.random() < 0.5:
            s1 = Bijection(dict(zip(rng.sample(list(s1.domain), len(X)), X)))
        sigma_pairs = {a: b for a, b in s1.items() if b != x}
        sigma_pairs.update({a: b for a, b in s2.items() if b != y})
        sigma = Bijection(sigma_pairs)
        lhs = lambda: m.compose(m.act(f, s1), s1.inv(x), s2.inv(y), m.act(g, s2))
        rhs = lambda: m.act(m.compose(f, x, y, g), sigma)
        rep.guarded("EQ", lambda: lhs() == rhs(), lambda: _show(f, g, f"x={x} y={y} s1={s1} s2={s2}"))

        # U1 / U2: units on either side
        f = cls("f")
        (x,) = pick(f)
        X = m.vars(f)
        yv, zv = "e1", rng.choice(["e2", x])
        kappa = Bijection({(zv if v == x else v): v for v in X})
        rep.guarded(
            "U1",
            lambda: m.compose(f, x, yv, m.unit(yv, zv)) == m.act(f, kappa),
            lambda: _show(f, f"x={x} unit=({yv},{zv})"),
        )
        rep.guarded(
            "U2",
            lambda: m.compose(m.unit(yv, zv), yv, x, f) == m.act(f, kappa),
            lambda: _show(f, f"x={x} unit=({yv},{zv})"),
        )

        # U3: renaming a unit gives a unit
        a, b = rng.sample(["p", "q", "r", "s"], 2)
        c, d = rng.sample(["p", "q", "r", "s", "t"], 2)
        rep.guarded(
            "U3",
            lambda: m.act(m.unit(a, b), Bijection({c: a, d: b})) == m.unit(c, d),
            lambda: f"id({a},{b}) renamed to id({c},{d})",
        )

        # CO: composition is symmetric
        f, g = cls("f"), cls("g")
        (x,), (y,) = pick(f), pick(g)
        rep.guarded(
            "CO",
            lambda: m.compose(f, x, y, g) == m.compose(g, y, x, f),
            lambda: _show(f, g, f"x={x} y={y}"),
        )
    return rep


def total_composition_suite(model: OperadModel = TREE_MODEL, bound: int = 3, seed: int = 0, count: int = 100, signature=None) -> LawReport:
    """Total composition against post-renamings and stacked assignments, plus fold-order independence."""
    rng = _rng("total-composition", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("total-composition", bound, seed)
    m = model

    for n in range(count):
        f = _fresh_class(rng, sig, min(bound, 2), "f", 0.0, m)
        X = sorted_vars(m.vars(f))
        phi = {}
        for i, x in enumerate(X):
            op = _fresh_class(rng, sig, min(bound, 2), f"a{i}_", model=m)
            phi[x] = Entry(op, rng.choice(sorted_vars(m.vars(op))))
        if rng.random() < 0.3:
            # operands whose residues reuse the names of f's entries
            x0 = X[0]
            e = phi[x0]
            res = sorted_vars(m.vars(e.operand) - {e.entry})
            if res and X[-1] != x0:
                phi[x0] = Entry(_rename_one(m, e.operand, res[0], X[-1]), e.entry)
        total = total_composition(f, phi, m)

        order = list(X)
        rng.shuffle(order)
        rep.guarded(
            "fold-order",
            lambda: total_composition(f, phi, m, order) == total,
            lambda: _show(f, f"order={order}"),
        )

        # renaming after composing equals composing renamed operands
        W = sorted_vars(m.vars(total))
        psi = Bijection({f"w{i}": v for i, v in enumerate(W)})
        phi_psi = {}
        for x, e in phi.items():
            res = m.vars(e.operand) - {e.entry}
            kappa = Bijection({**{psi.inv(v): v for v in res}, e.entry: e.entry})
            phi_psi[x] = Entry(m.act(e.operand, kappa), e.entry)
        rep.guarded(
            "rename-after-total",
            lambda: m.act(total, psi) == total_composition(f, phi_psi, m),
            lambda: _show(f, f"psi={psi}"),
        )

        # composing twice equals composing once with stacked assignments
        chosen = [w for w in W if rng.random() < 0.5]
        psi_assign = {}
        used = set(W)
        for j, w in enumerate(chosen):
            op = _fresh_class(rng, sig, 1, f"b{j}_", 0.2, m)
            ent = rng.choice(sorted_vars(m.vars(op)))
            psi_assign[w] = Entry(op, ent)
            used |= m.vars(op)
        full_psi = complete_with_units(m, total, psi_assign)
        lhs = total_composition(total, full_psi, m)
        stacked = {}
        for x, e in phi.items():
            res = m.vars(e.operand) - {e.entry}
            inner = {v: full_psi[v] for v in res}
            inner[e.entry] = unit_entry(m, e.entry, used | m.vars(e.operand))
            stacked[x] = Entry(total_composition(e.operand, inner, m), e.entry)
        rep.guarded(
            "stacked-total",
            lambda: lhs == total_composition(f, stacked, m),
            lambda: _show(f, f"stacked on {sorted_vars(psi_assign)}"),
        )
    return rep


# monad ----------------------------------------------------------------------------


def monad_suite(bound: int = 5, seed: int = 0, count: int = 500, signature=None) -> LawReport:
    rng = _rng("monad", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("monad", bound, seed)
    for _ in range(count):
        t3 = gen.random_three_level(rng, sig, bound)
        rep.guarded("associativity", lambda: mu_inner(t3) == mu_outer(t3), lambda: _show(t3))

        t2 = gen.random_two_level(rng, sig, rng.randint(1, bound), bound, exceptional_rate=0.25)
        rep.guarded("associativity-two-level", lambda: mu(t2) == mu(canonicalize(t2)), lambda: _show(t2))

        t = gen.random_class(rng, sig, bound, exceptional_rate=0.2)
        rep.guarded("unit-outer", lambda: mu(eta_outer(t)) == t, lambda: _show(t))
        rep.guarded("unit-inner", lambda: mu(eta_inner(t)) == t, lambda: _show(t))
    return rep


# rewriting ------------------------------------------------------------------------


def rewrite_suite(bound: int = 4, seed: int = 0, count: int = 1000, max_special: int = 6, signature=None) -> LawReport:
    """Unique normal forms and exact path lengths for extended trees."""
    rng = _rng("rewrite", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("rewrite", bound, seed)
    for _ in range(count):
        n_ord = rng.randint(0, bound)
        n_sp = rng.randint(1 if n_ord == 0 else 0, max_special)
        t = gen.random_tree(rng, sig, n_ord, n_sp)
        survey = survey_reductions(t)
        rep.check("unique-normal-form", len(survey.normal_forms) == 1, lambda: _show(t))
        rep.check(
            "path-length",
            survey.path_lengths == {expected_steps(t)},
            lambda: _show(t, f"lengths={sorted(survey.path_lengths)}"),
        )
    return rep


# translation ----------------------------------------------------------------------


def _depth(bound: int) -> int:
    return max(1, min(bound - 1, 3))


def translate_suite(bound: int = 4, seed: int = 0, count: int = 200, signature=None) -> LawReport:
    rng = _rng("translate", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("translate", bound, seed)
    depth = _depth(bound)
    for _ in range(count):
        c = gen.random_command(rng, sig, rng.randint(0, depth))
        pc = phi(c)

        rep.guarded("phi-direct", lambda: phi_direct(c) == pc, lambda: _show(c))
        t = gen.random_term(rng, sig, rng.randint(0, depth - 1) if depth > 1 else 0)
        rep.guarded("phi-direct-term", lambda: phi_direct(t, "j") == phi(t, "j"), lambda: _show(t))

        for r in sorted(mu_step(c), key=repr)[:3]:
            rep.guarded("one-step-soundness", lambda: phi(r) == pc, lambda: _show(c, "->", r))

        variant = gen.mu_alpha_variant(rng, c)
        rep.guarded("alpha-variant", lambda: phi(variant) == pc and mu_alpha_eq(variant, c), lambda: _show(c, variant))
        if hasattr(c, "instance"):
            re = gen.reindex(rng, c)
            rep.guarded("reindex-variant", lambda: phi(re) == pc and mu_alpha_eq(re, c), lambda: _show(c, re))

        nf = mu_normal_form(c)
        rep.guarded("normal-form", lambda: is_normal(nf) and phi(nf) == pc, lambda: _show(c, nf))
        for r in prime_step(nf)[:2]:
            rep.guarded("rotation-soundness", lambda: is_normal(r) and phi(r) == pc, lambda: _show(nf, "->", r))

        # renaming commutes with the translation
        X = sorted_vars(free_vars(c))
        targets = [f"q{i}" for i in range(len(X))] if rng.random() < 0.5 else rng.sample(X, len(X))
        sigma = Bijection(dict(zip(targets, X)))
        rep.guarded(
            "renaming-commutes",
            lambda: phi(rename_expr(c, sigma)) == TREE_MODEL.act(pc, sigma),
            lambda: _show(c, f"sigma={sigma}"),
        )

        # substitution is composition
        x = rng.choice(X)
        s = gen.random_term(rng, sig, rng.randint(0, 1), gen.Names("s"))
        v = fresh("v", set(X) | free_vars(s))
        rep.guarded(
            "substitution-composes",
            lambda: phi(substitute(c, x, s)) == TREE_MODEL.compose(pc, x, v, phi(s, v)),
            lambda: _show(c, f"[{print_object(s)}/{x}]"),
        )

        k = gen.random_comb(rng, sig, depth)
        rep.guarded("comb-roundtrip", lambda: phi(comb_to_mu(k)) == interpret(k), lambda: _show(k))

    _delta_checks(rep, rng, sig, bound, count)
    return rep


def _delta_checks(rep: LawReport, rng, sig, bound, count):
    for _ in range(count):
        t2 = gen.random_two_level(rng, sig, rng.randint(1, bound), min(bound, 3), exceptional_rate=0.2)
        m2 = mu(t2)
        rep.guarded("delta-is-mu", lambda: delta(t2) == m2, lambda: _show(t2))
        rep.guarded("delta-any-head", lambda: all(d == m2 for d in delta_every_head(t2)), lambda: _show(t2))
        cls = gen.random_class(rng, sig, bound, exceptional_rate=0.2)
        rep.guarded("delta-eta", lambda: delta_eta(cls) == cls, lambda: _show(cls))

        def a1():
            f = _fresh_class(rng, sig, min(bound, 3), "f")
            g = _fresh_class(rng, sig, min(bound, 3), "g")
            while len(g.free_vars) < 2:
                g = _fresh_class(rng, sig, min(bound, 3), "g")
            h = _fresh_class(rng, sig, min(bound, 3), "h")
            x = rng.choice(sorted_vars(f.free_vars))
            y, u = rng.sample(sorted_vars(g.free_vars), 2)
            z = rng.choice(sorted_vars(h.free_vars))
            lhs = delta_compose(delta_compose(f, x, y, g), u, z, h)
            rhs = delta_compose(f, x, y, delta_compose(g, u, z, h))
            return lhs == rhs and lhs == TREE_MODEL.compose(TREE_MODEL.compose(f, x, y, g), u, z, h)

        rep.guarded("delta-A1", a1, lambda: "delta-derived composition")


# decomposition ----------------------------------------------------------------------


def decompose_suite(bound: int = 5, seed: int = 0, count: int = 100, signature=None, exhaustive: bool = True) -> LawReport:
    """Extraction and plucking checks on the enumerated corpus plus random trees."""
    rng = _rng("decompose", seed)
    sig = signature or gen.default_signature()
    rep = LawReport("decompose", bound, seed)
    trees = list(gen.corpus(min(bound, 5)))
    for _ in range(count):
        trees.append(gen.alpha_variant(rng, gen.random_tree(rng, sig, rng.randint(1, bound))))
    for t in trees:
        decompose_checks(rep, t, exhaustive)
    return rep


def decompose_checks(rep: LawReport, t, exhaustive: bool = True):
    cls = canonicalize(t)
    commands = []
    for i in range(len(t.corollas)):
        c = command_of(t, i)
        commands.append(c)
        rep.guarded("surjectivity", lambda: is_normal(c) and phi(c) == cls, lambda: _show(t, f"at {i}"))
        rep.guarded("reconstruct", lambda: reconstruct(t, i) == cls, lambda: _show(t, f"at {i}"))
        d = decomposition(t, i)
        pieces = [frozenset(p.corollas) for p in d.pieces()]
        union = frozenset().union(*pieces)
        rep.check(
            "partition",
            union == frozenset(t.corollas) and sum(len(p) for p in pieces) == len(t.corollas),
            lambda: _show(t, f"at {i}"),
        )
        for v in sorted_vars(t.corollas[i].fv - t.free_vars):
            p = pluck(t, i, v)
            rep.check("pluck-oracle", p == pluck_by_rules(t, i, v), lambda: _show(t, f"at {i} along {v}"))
            if exhaustive:
                sat = subtrees_satisfying(t, i, v)
                rep.check("pluck-characterization", sat == [p.graph], lambda: _show(t, f"at {i} along {v}"))
    closure = prime_closure(commands[0])
    rep.check(
        "injectivity-witness",
        all(mu_canonical(c) in closure for c in commands),
        lambda: _show(t),
    )


def run_suite(name: str, bound: int = 4, seed: int = 0) -> LawReport:
    match name:
        case "operad":
            return operad_suite(bound=bound, seed=seed).merge(total_composition_suite(bound=bound, seed=seed))
        case "monad":
            return monad_suite(bound=bound, seed=seed, count=200)
        case "translate":
            return translate_suite(bound=bound, seed=seed, count=100)
        case "decompose":
            return decompose_suite(bound=bound, seed=seed, count=50)
        case "rewrite":
            return rewrite_suite(bound=bound, seed=seed, count=300)
        case "all":
            rep = LawReport("all", bound, seed)
            for s in ("operad", "monad", "translate", "decompose", "rewrite"):
                rep.merge(run_suite(s, bound, seed))
            return rep
    raise ValueError(f"unknown suite {name!r}")
