"""Combinator terms: parameters, units, partial compositions, and renaming actions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import TypingError
from .naming import Bijection, sorted_vars
from .operad import TREE_MODEL, OperadModel
from .signature import DecoratedInstance


@dataclass(frozen=True)
class Param:
    instance: DecoratedInstance


@dataclass(frozen=True)
class Id:
    x: str
    y: str


@dataclass(frozen=True)
class Comp:
    left: "Combinator"
    x: str
    y: str
    right: "Combinator"


@dataclass(frozen=True)
class Act:
    body: "Combinator"
    sigma: Bijection


Combinator = Union[Param, Id, Comp, Act]


def typeof(c: Combinator) -> frozenset[str]:
    match c:
        case Param(inst):
            return inst.variables
        case Id(x, y):
            if x == y:
                raise TypingError(f"id{{{x},{y}}} needs two distinct variables")
            return frozenset((x, y))
        case Comp(left, x, y, right):
            X, Y = typeof(left), typeof(right)
            if x not in X:
                raise TypingError(f"{x!r} is not in the left type {sorted_vars(X)}")
            if y not in Y:
                raise TypingError(f"{y!r} is not in the right type {sorted_vars(Y)}")
            overlap = (X - {x}) & (Y - {y})
            if overlap:
                raise TypingError(f"composition along {x},{y} shares {sorted_vars(overlap)}")
            return (X - {x}) | (Y - {y})
        case Act(body, sigma):
            X = typeof(body)
            if sigma.codomain != X:
                raise TypingError(f"action {sigma} does not land on {sorted_vars(X)}")
            return sigma.domain
    raise TypingError(f"not a combinator: {c!r}")


def interpret(c: Combinator, model: OperadModel = TREE_MODEL):
    typeof(c)
    return _eval(c, model)


def _eval(c: Combinator, model: OperadModel):
    match c:
        case Param(inst):
            return model.embed(inst)
        case Id(x, y):
            return model.unit(x, y)
        case Comp(left, x, y, right):
            return model.compose(_eval(left, model), x, y, _eval(right, model))
        case Act(body, sigma):
            return model.act(_eval(body, model), sigma)


def size(c: Combinator) -> int:
    match c:
        case Comp(left, _, _, right):
            return 1 + size(left) + size(right)
        case Act(body, _):
            return 1 + size(body)
        case _:
            return 1
