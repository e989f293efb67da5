"""Finite bijections between variable sets, and the fresh-name supply.

Variables are plain strings. Names produced by :func:`fresh` always contain the
reserved character ``#``; names typed by a user never do, so generated names
cannot collide with user input.
"""

from __future__ import annotations

import re
from functools import lru_cache
from collections.abc import Iterable, Iterator, Mapping

from .errors import ClashError, DomainError, ValidationError

RESERVED = "#"

_TOKEN = re.compile(r"[A-Za-z0-9_']+")
_GENERATED = re.compile(r"([^#]*)#(\d+)$")


def check_user_token(name: str) -> str:
    """Return ``name`` if it is a legal user-written variable, else raise."""
    if not isinstance(name, str) or not _TOKEN.fullmatch(name):
        raise ValidationError(f"illegal variable name {name!r}")
    return name


@lru_cache(maxsize=1 << 16)
def var_key(name: str):
    """Sort key: lexicographic by stem, ``stem#n`` after every plain name of that stem."""
    m = _GENERATED.match(name)
    if m:
        return (m.group(1), 1, int(m.group(2)), name)
    return (name, 0, 0, name)


def sorted_vars(names: Iterable[str]) -> list[str]:
    return sorted(names, key=var_key)


def fresh(hint: str, avoid: Iterable[str]) -> str:
    """The name ``stem#n`` with the least ``n`` such that it is not in ``avoid``."""
    avoid = avoid if isinstance(avoid, (set, frozenset)) else set(avoid)
    stem = hint.split(RESERVED, 1)[0] or "v"
    n = 0
    while f"{stem}{RESERVED}{n}" in avoid:
        n += 1
    return f"{stem}{RESERVED}{n}"


def fresh_many(hints: Iterable[str], avoid: Iterable[str]) -> list[str]:
    """Fresh names for each hint, pairwise distinct and outside ``avoid``."""
    used = set(avoid)
    out = []
    for h in hints:
        v = fresh(h, used)
        used.add(v)
        out.append(v)
    return out


class Bijection:
    """A finite bijection ``domain -> codomain`` between sets of variables.

    ``sigma(x)`` applies the map; ``sigma.inv(y)`` applies its inverse.  The
    composite ``kappa @ tau`` is ``x -> kappa(tau(x))``.
    """

    __slots__ = ("_fwd", "_inv", "_hash")

    def __init__(self, pairs: Mapping[str, str] | Iterable[tuple[str, str]] = ()):
        fwd = dict(pairs.items() if isinstance(pairs, Mapping) else pairs)
        inv = {}
        for a, b in fwd.items():
            if b in inv:
                raise ClashError(f"codomain entry {b!r} hit twice ({inv[b]!r}, {a!r})")
            inv[b] = a
        self._fwd = fwd
        self._inv = inv
        self._hash = None

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> Bijection:
        seen = set()
        plist = list(pairs)
        for a, _ in plist:
            if a in seen:
                raise ClashError(f"domain entry {a!r} appears twice")
            seen.add(a)
        return cls(plist)

    @classmethod
    def identity(cls, names: Iterable[str]) -> Bijection:
        return cls({x: x for x in names})

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._fwd)

    @property
    def codomain(self) -> frozenset[str]:
        return frozenset(self._inv)

    def __call__(self, x: str) -> str:
        try:
            return self._fwd[x]
        except KeyError:
            raise DomainError(f"{x!r} is not in the domain of {self}") from None

    def inv(self, y: str) -> str:
        try:
            return self._inv[y]
        except KeyError:
            raise DomainError(f"{y!r} is not in the codomain of {self}") from None

    def inverse(self) -> Bijection:
        return Bijection(self._inv)

    def items(self) -> Iterator[tuple[str, str]]:
        return iter(sorted(self._fwd.items(), key=lambda p: var_key(p[0])))

    def as_dict(self) -> dict[str, str]:
        return dict(self._fwd)

    def is_identity(self) -> bool:
        return all(a == b for a, b in self._fwd.items())

    def __len__(self):
        return len(self._fwd)

    def __eq__(self, other):
        return isinstance(other, Bijection) and self._fwd == other._fwd

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._fwd.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.items())
        return f"Bijection({{{body}}})"

    def __matmul__(self, other: Bijection) -> Bijection:
        if other.codomain != self.domain:
            raise DomainError(f"cannot compose {self} after {other}")
        return Bijection({x: self._fwd[y] for x, y in other._fwd.items()})

    def __add__(self, other: Bijection) -> Bijection:
        return disjoint_union(self, other)


def restrict(sigma: Bijection, ys: Iterable[str]) -> Bijection:
    """``sigma|^Y``: the part of ``sigma`` landing in ``Y``."""
    ys = frozenset(ys)
    if not ys <= sigma.codomain:
        raise DomainError(f"{sorted_vars(ys - sigma.codomain)} not in codomain of {sigma}")
    return Bijection({sigma.inv(y): y for y in ys})


def extend_fixpoint(sigma: Bijection, y: str) -> Bijection:
    """``sigma_y``: ``sigma`` plus the fixed point ``y -> y``."""
    if y in sigma.domain or y in sigma.codomain:
        raise ClashError(f"{y!r} already occurs in {sigma}")
    d = sigma.as_dict()
    d[y] = y
    return Bijection(d)


def replace_domain(sigma: Bijection, y: str, x_old: str) -> Bijection:
    """``sigma^{y/x'}``: ``y`` takes the place of ``x'`` in the domain."""
    if x_old not in sigma.domain:
        raise DomainError(f"{x_old!r} is not in the domain of {sigma}")
    if y == x_old:
        return sigma
    if y in sigma.domain:
        raise ClashError(f"{y!r} is already in the domain of {sigma}")
    d = sigma.as_dict()
    d[y] = d.pop(x_old)
    return Bijection(d)


def disjoint_union(sigma: Bijection, tau: Bijection) -> Bijection:
    """``sigma + tau`` for bijections with disjoint domains and disjoint codomains."""
    if sigma.domain & tau.domain:
        raise ClashError(f"domains overlap on {sorted_vars(sigma.domain & tau.domain)}")
    if sigma.codomain & tau.codomain:
        raise ClashError(f"codomains overlap on {sorted_vars(sigma.codomain & tau.codomain)}")
    d = sigma.as_dict()
    d.update(tau.as_dict())
    return Bijection(d)


def all_bijections(source: Iterable[str], target: Iterable[str]) -> Iterator[Bijection]:
    """Every bijection ``source -> target`` (empty if the sizes differ)."""
    from itertools import permutations

    src = sorted_vars(source)
    tgt = sorted_vars(target)
    if len(src) != len(tgt):
        return
    for perm in permutations(tgt):
        yield Bijection(dict(zip(src, perm)))
