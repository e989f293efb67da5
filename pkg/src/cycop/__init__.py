"""Cyclic operads modeled by Vernon trees, with a tree monad and two term languages."""

from .combinators import Act, Comp, Id, Param, interpret, typeof
from .decompose import command_of, decomposition, pluck, reconstruct
from .errors import (
    ClashError,
    CycopError,
    DomainError,
    FuelExhausted,
    NotATreeError,
    ParseError,
    TypingError,
    ValidationError,
)
from .monad import eta, flatten, mu
from .mu import Apply, Mu, Pair, Var, mu_alpha_eq, mu_normal_form, prime_closure, prime_step
from .naming import Bijection, fresh
from .operad import TREE_MODEL, ProfileModel, TreeModel, total_composition, vt_action, vt_compose, vt_unit
from .rewrite import normal_form
from .signature import BaseParameter, Signature, TreeDecoration, instance
from .syntax import parse_comb, parse_document, parse_mu, parse_tree, print_document, print_object
from .translate import comb_to_mu, delta, mu_equiv, phi, phi_direct, translate
from .trees import Ordinary, Special, TreeClass, VernonGraph, alpha_eq, canonicalize, classify

__all__ = [
    "Act",
    "Apply",
    "BaseParameter",
    "Bijection",
    "ClashError",
    "Comp",
    "CycopError",
    "DomainError",
    "FuelExhausted",
    "Id",
    "Mu",
    "NotATreeError",
    "Ordinary",
    "Pair",
    "Param",
    "ParseError",
    "ProfileModel",
    "Signature",
    "Special",
    "TREE_MODEL",
    "TreeClass",
    "TreeDecoration",
    "TreeModel",
    "TypingError",
    "ValidationError",
    "Var",
    "VernonGraph",
    "alpha_eq",
    "canonicalize",
    "classify",
    "comb_to_mu",
    "command_of",
    "decomposition",
    "delta",
    "eta",
    "flatten",
    "fresh",
    "instance",
    "interpret",
    "mu",
    "mu_alpha_eq",
    "mu_equiv",
    "mu_normal_form",
    "normal_form",
    "parse_comb",
    "parse_document",
    "parse_mu",
    "parse_tree",
    "phi",
    "phi_direct",
    "pluck",
    "prime_closure",
    "prime_step",
    "print_document",
    "print_object",
    "reconstruct",
    "total_composition",
    "translate",
    "typeof",
    "vt_action",
    "vt_compose",
    "vt_unit",
]
