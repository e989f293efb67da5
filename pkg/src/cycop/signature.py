"""Decorated instances and the signatures that declare their parameters.

A decoration is either a named base parameter with an ordered variable profile,
or a tree class used as a parameter in its own right (which is how trees of
trees are represented).  A decorated instance pairs a decoration with an
attachment, a bijection from the instance's current variables onto the
decoration's profile.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Union

from .errors import DomainError, ValidationError
from .naming import Bijection, check_user_token, sorted_vars

if TYPE_CHECKING:
    from .trees import TreeClass


@dataclass(frozen=True)
class BaseParameter:
    name: str
    profile: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.profile)) != len(self.profile):
            raise ValidationError(f"profile of {self.name} repeats a variable")
        if not self.profile:
            raise ValidationError(f"parameter {self.name} needs a non-empty profile")

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(self.profile)

    @property
    def key(self) -> str:
        return f"{self.name}/{','.join(self.profile)}"

    @property
    def label(self) -> str:
        return self.name


@dataclass(frozen=True)
class TreeDecoration:
    """A tree class standing in as a parameter; its profile is the class's free variables."""

    cls: TreeClass

    @property
    def profile(self) -> tuple[str, ...]:
        return tuple(sorted_vars(self.cls.free_vars))

    @property
    def variables(self) -> frozenset[str]:
        return self.cls.free_vars

    @property
    def key(self) -> str:
        return f"[{self.cls.key}]"

    @property
    def label(self) -> str:
        return "tree"


Decoration = Union[BaseParameter, TreeDecoration]


@dataclass(frozen=True)
class DecoratedInstance:
    decoration: Decoration
    attachment: Bijection

    def __post_init__(self):
        if self.attachment.codomain != self.decoration.variables:
            raise DomainError(
                f"attachment {self.attachment} does not land on the profile of {self.decoration.label}"
            )

    @property
    def variables(self) -> frozenset[str]:
        return self.attachment.domain

    def current(self, profile_var: str) -> str:
        """The current variable attached to ``profile_var``."""
        return self.attachment.inv(profile_var)

    def slots(self) -> list[str]:
        """Current variables listed in profile order."""
        return [self.attachment.inv(p) for p in self.decoration.profile]

    @property
    def key(self) -> str:
        return f"{self.decoration.key}({','.join(self.slots())})"


def instance(decoration: Decoration, current: Iterable[str] | None = None) -> DecoratedInstance:
    """Instance whose i-th current variable is attached to the i-th profile variable."""
    profile = decoration.profile
    cur = tuple(profile if current is None else current)
    if len(cur) != len(profile):
        raise DomainError(f"{decoration.label} expects {len(profile)} variables, got {len(cur)}")
    return DecoratedInstance(decoration, Bijection.from_pairs(zip(cur, profile)))


def act(f: DecoratedInstance, sigma: Bijection) -> DecoratedInstance:
    """The renamed instance ``f^sigma``; ``sigma`` maps new variables onto the current ones."""
    if sigma.codomain != f.variables:
        raise DomainError(f"renaming {sigma} does not land on {sorted_vars(f.variables)}")
    return DecoratedInstance(f.decoration, f.attachment @ sigma)


@dataclass
class Signature:
    """Named base parameters; declaration order fixes positional argument order."""

    parameters: dict[str, BaseParameter] = field(default_factory=dict)

    def declare(self, name: str, profile: Iterable[str]) -> BaseParameter:
        check_user_token(name)
        prof = tuple(profile)
        existing = self.parameters.get(name)
        if existing is not None:
            if existing.profile != prof:
                raise ValidationError(f"parameter {name} declared twice with different profiles")
            return existing
        p = BaseParameter(name, prof)
        self.parameters[name] = p
        return p

    def __contains__(self, name):
        return name in self.parameters

    def __getitem__(self, name) -> BaseParameter:
        try:
            return self.parameters[name]
        except KeyError:
            raise ValidationError(f"unknown parameter {name!r}") from None

    def __iter__(self):
        return iter(self.parameters.values())

    def __len__(self):
        return len(self.parameters)

    @classmethod
    def of(cls, *params: BaseParameter) -> Signature:
        sig = cls()
        for p in params:
            sig.declare(p.name, p.profile)
        return sig
