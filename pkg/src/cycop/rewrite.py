"""Elimination of special corollas from extended trees.

Two contraction rules apply across an edge: an ordinary corolla absorbs an
adjacent special corolla by renaming its endpoint, and two adjacent special
corollas fuse into one.  Every contraction removes exactly one special corolla.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FuelExhausted, ValidationError
from .naming import Bijection
from .signature import act
from .trees import Ordinary, Special, TreeClass, VernonGraph, canonicalize


class RedexKind(enum.Enum):
    ORDINARY_SPECIAL = "OrdinarySpecial"
    SPECIAL_SPECIAL = "SpecialSpecial"


@dataclass(frozen=True)
class Redex:
    """A contractible edge.

    For ``ORDINARY_SPECIAL``, ``near`` is the ordinary corolla's variable and
    ``far`` the special corolla's endpoint.  For ``SPECIAL_SPECIAL`` both are
    special endpoints, ordered so the sort key is deterministic.
    """

    kind: RedexKind
    near: str
    far: str
    sort_key: tuple = ()


def find_redexes(t: VernonGraph) -> list[Redex]:
    out = []
    for e in t.edges:
        u, v = tuple(e)
        cu, cv = t.corollas[t.owner(u)], t.corollas[t.owner(v)]
        match cu, cv:
            case Special(), Special():
                a, b = sorted((u, v), key=lambda w: t.corollas[t.owner(w)].key + "|" + w)
                key = (1, t.corollas[t.owner(a)].key, t.corollas[t.owner(b)].key, a, b)
                out.append(Redex(RedexKind.SPECIAL_SPECIAL, a, b, key))
            case Ordinary(), Special():
                out.append(Redex(RedexKind.ORDINARY_SPECIAL, u, v, (0, cu.key, cv.key, u, v)))
            case Special(), Ordinary():
                out.append(Redex(RedexKind.ORDINARY_SPECIAL, v, u, (0, cv.key, cu.key, v, u)))
    out.sort(key=lambda r: r.sort_key)
    return out


def contract(t: VernonGraph, r: Redex) -> VernonGraph:
    if t.partner.get(r.near) != r.far:
        raise ValidationError(f"({r.near}~{r.far}) is not an edge of the graph")
    i, j = t.owner(r.near), t.owner(r.far)
    near_c, far_c = t.corollas[i], t.corollas[j]
    edges = t.edges - {frozenset((r.near, r.far))}
    rest = [c for k, c in enumerate(t.corollas) if k not in (i, j)]
    match r.kind, near_c, far_c:
        case RedexKind.ORDINARY_SPECIAL, Ordinary(inst), Special():
            z = far_c.other(r.far)
            tau = Bijection({z if v == r.near else v: v for v in inst.variables})
            merged = Ordinary(act(inst, tau))
        case RedexKind.SPECIAL_SPECIAL, Special(), Special():
            merged = Special(near_c.other(r.near), far_c.other(r.far))
        case _:
            raise ValidationError(f"{r.kind.value} redex does not match the corollas at ({r.near}~{r.far})")
    return VernonGraph(tuple(rest[: min(i, j)]) + (merged,) + tuple(rest[min(i, j) :]), edges)


def normal_form(t: VernonGraph, trace: list | None = None) -> VernonGraph:
    """Contract the first redex until none remain.  Steps are appended to ``trace``."""
    while True:
        redexes = find_redexes(t)
        if not redexes:
            return t
        r = redexes[0]
        t = contract(t, r)
        if trace is not None:
            trace.append((r, t))


@dataclass
class ReductionSurvey:
    normal_forms: set[TreeClass]
    path_lengths: set[int]
    states: int


def survey_reductions(t: VernonGraph, fuel: int = 100_000) -> ReductionSurvey:
    """Explore every reduction sequence from ``t``."""
    memo: dict[VernonGraph, tuple[frozenset, frozenset]] = {}
    budget = [fuel]

    def go(g: VernonGraph):
        hit = memo.get(g)
        if hit is not None:
            return hit
        budget[0] -= 1
        if budget[0] < 0:
            raise FuelExhausted(f"reduction search exceeded {fuel} states")
        redexes = find_redexes(g)
        if not redexes:
            res = (frozenset([canonicalize(g)]), frozenset([0]))
        else:
            nfs, lens = set(), set()
            for r in redexes:
                a, b = go(contract(g, r))
                nfs |= a
                lens |= {n + 1 for n in b}
            res = (frozenset(nfs), frozenset(lens))
        memo[g] = res
        return res

    nfs, lens = go(t)
    return ReductionSurvey(set(nfs), set(lens), len(memo))


def all_normal_forms(t: VernonGraph, fuel: int = 100_000) -> set[TreeClass]:
    return survey_reductions(t, fuel).normal_forms


def expected_steps(t: VernonGraph) -> int:
    """Number of contractions any full reduction of ``t`` performs."""
    n_special = len(t.specials)
    return n_special - 1 if n_special == len(t.corollas) else n_special
