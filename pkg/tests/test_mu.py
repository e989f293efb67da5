import random

import pytest
from conftest import DATA
from hypothesis import given
from strategies import SIG, commands, rngs, terms

from cycop import generators as gen
from cycop.cli import load
from cycop.errors import ClashError, DomainError, FuelExhausted, TypingError
from cycop.mu import (
    Mu,
    Pair,
    Var,
    free_vars,
    is_normal,
    is_unit_command,
    mu_alpha_eq,
    mu_canonical,
    mu_normal_form,
    mu_step,
    mu_typeof,
    occurrences,
    prime_closure,
    prime_step,
    rename_expr,
    substitute,
)
from cycop.naming import Bijection
from cycop.syntax import parse_mu

STAR = load(str(DATA / "star.mu"))


def mu_(text):
    return parse_mu(text, STAR.signature)


def test_typing_errors():
    with pytest.raises(TypingError):
        mu_typeof(Mu("a", Pair(Var("b"), Var("c"))))
    with pytest.raises(TypingError):
        mu_typeof(Pair(Var("a"), Var("a")))
    with pytest.raises(TypingError):
        mu_typeof(mu_("h{z, mu x. <x|z>}"))


def test_types_of_terms_and_commands():
    assert mu_typeof(mu_("h{p, mu a. <a|z>}")) == {"p", "z"}
    assert mu_typeof(mu_("mu p. h{p, q}")) == {"q"}


def test_substitution_avoids_capture():
    c = mu_("h{p, mu a. <a|q>}")
    out = substitute(c, "q", Var("a"))
    assert free_vars(out) == {"p", "a"}
    assert out.arg("q").binder != "a"
    with pytest.raises(DomainError):
        substitute(c, "z", Var("w"))
    with pytest.raises(ClashError):
        substitute(c, "q", Var("p"))


def test_rename_must_cover_free_variables():
    c = mu_("h{p, q}")
    assert rename_expr(c, Bijection({"q": "p", "p": "q"})) == mu_("h{q, p}")
    with pytest.raises(DomainError):
        rename_expr(c, Bijection({"r": "p"}))


def test_star_command_normal_form():
    nf = mu_normal_form(STAR.value)
    assert mu_alpha_eq(nf, mu_("f{mu a. g{a,b,c,d}, mu p. h{p,q}, z, u}"))
    assert is_normal(nf)
    assert not is_normal(STAR.value)


def test_rotation_closure_of_the_star_has_five_members():
    nf = mu_normal_form(STAR.value)
    closure = prime_closure(nf)
    assert len(closure) == 5
    for text in [
        "g{mu x. f{x, mu p. h{p,q}, z, u}, b, c, d}",
        "g{mu x. h{mu y. f{x,y,z,u}, q}, b, c, d}",
        "h{mu y. f{mu a. g{a,b,c,d}, y, z, u}, q}",
        "h{mu y. g{mu x. f{x,y,z,u}, b, c, d}, q}",
    ]:
        assert mu_canonical(mu_(text)) in closure


def test_prime_closure_fuel():
    with pytest.raises(FuelExhausted):
        prime_closure(mu_normal_form(STAR.value), limit=2)


def test_unit_command_contracts_inside_binders():
    assert mu_normal_form(mu_("<mu a. <a|x> | y>")) == Pair(Var("y"), Var("x"))
    assert is_unit_command(Pair(Var("x"), Var("y")))
    nf = mu_normal_form(mu_("h{mu a. <a|x>, q}"))
    assert nf == mu_("h{x, q}")


def test_swap_and_contraction_are_both_reducts():
    c = mu_("<mu p. h{p,q} | x>")
    steps = mu_step(c)
    assert Pair(Var("x"), Mu("p", mu_("h{p,q}"))) in steps
    assert mu_("h{x, q}") in steps


@given(commands(max_depth=3))
def test_normal_form_is_normal_and_keeps_type(c):
    nf = mu_normal_form(c)
    assert mu_typeof(nf) == mu_typeof(c)
    assert is_unit_command(nf) or is_normal(nf)
    assert mu_normal_form(nf) == nf


@given(commands(max_depth=3))
def test_reducts_keep_type_and_linearity(c):
    for r in mu_step(c):
        assert mu_typeof(r) == mu_typeof(c)
        assert set(occurrences(r).values()) <= {1}


@given(commands(max_depth=2), rngs())
def test_alpha_variants(c, rng):
    v = gen.mu_alpha_variant(rng, c)
    assert mu_alpha_eq(c, v)
    assert mu_canonical(v) == mu_canonical(c)


@given(terms(max_depth=2), commands(max_depth=2))
def test_substitution_typing(t, c):
    x = sorted(free_vars(c))[0]
    fresh_t = rename_expr(t, Bijection({f"s{i}": v for i, v in enumerate(sorted(free_vars(t)))}))
    out = substitute(c, x, fresh_t)
    assert mu_typeof(out) == (mu_typeof(c) - {x}) | mu_typeof(fresh_t)


def test_rotations_stay_normal():
    rng = random.Random(5)
    for _ in range(50):
        nf = mu_normal_form(gen.random_command(rng, SIG, 3))
        if is_unit_command(nf):
            continue
        for r in prime_step(nf):
            assert is_normal(r)
            assert mu_typeof(r) == mu_typeof(nf)
