import pytest
from conftest import DATA
from hypothesis import given
from strategies import classes, combinators, commands, parse_class, shared_signature, terms, two_level

from cycop.cli import load
from cycop.combinators import interpret, typeof
from cycop.errors import TypingError, ValidationError
from cycop.monad import mu
from cycop.mu import Var, free_vars, mu_step, mu_typeof, rename_expr
from cycop.naming import Bijection
from cycop.operad import TREE_MODEL, ProfileModel, vt_unit
from cycop.syntax import parse_mu
from cycop.translate import (
    IndexedTerm,
    comb_to_mu,
    delta,
    delta_compose,
    delta_eta,
    delta_every_head,
    mu_equiv,
    phi,
    phi_direct,
    translate,
)

SMALL = shared_signature()


def test_pair_of_variables_is_a_unit():
    assert phi(parse_mu("<x | y>")) == vt_unit("x", "y")


def test_application_maps_to_its_corolla():
    assert phi(parse_mu("h{p, q}", SMALL)) == parse_class("{ h(p,q) }")
    assert phi(parse_mu("h{q, p}", SMALL)) == parse_class("{ h(q,p) }")


def test_term_is_indexed_by_a_fresh_variable():
    t = parse_mu("mu p. h{p, q}", SMALL)
    assert phi(t, "j") == parse_class("{ h(j,q) }")
    with pytest.raises(ValidationError):
        IndexedTerm(t, "q")
    assert typeof(translate(IndexedTerm(t, "j"))) == {"j", "q"}


def test_equivalence_requires_equal_types():
    with pytest.raises(TypingError):
        mu_equiv(parse_mu("h{p, q}", SMALL), parse_mu("h{p, r}", SMALL))
    assert not mu_equiv(parse_mu("h{p, q}", SMALL), parse_mu("h{q, p}", SMALL))


def test_star_command_class():
    star = load(str(DATA / "star.mu")).value
    tree = load(str(DATA / "star_tree.tree")).value
    assert phi(star) == delta(tree)
    assert phi_direct(star) == phi(star)


@given(commands(max_depth=3))
def test_direct_and_combinator_routes_agree(c):
    assert phi_direct(c) == phi(c)
    assert phi(c).free_vars == mu_typeof(c)


@given(terms(max_depth=2))
def test_direct_route_on_terms(t):
    assert phi_direct(t, "j") == phi(t, "j")


@given(commands(max_depth=3))
def test_one_step_soundness(c):
    target = phi(c)
    for r in mu_step(c):
        assert phi(r) == target


@given(commands(max_depth=2))
def test_renaming_commutes_with_the_class(c):
    X = sorted(free_vars(c))
    sigma = Bijection({f"r{i}": v for i, v in enumerate(reversed(X))})
    assert phi(rename_expr(c, sigma)) == TREE_MODEL.act(phi(c), sigma)


@given(combinators())
def test_combinator_round_trip(k):
    assert phi(comb_to_mu(k)) == interpret(k)


@given(two_level())
def test_delta_is_multiplication(t2):
    m = mu(t2)
    assert delta(t2) == m
    assert all(d == m for d in delta_every_head(t2))


@given(classes(exceptional_rate=0.3))
def test_delta_after_eta(cls):
    assert delta_eta(cls) == cls


def test_delta_in_the_profile_model():
    tree = load(str(DATA / "star_tree.tree")).value
    assert delta(tree, ProfileModel()) == tree.free_vars


def test_delta_composition_matches_grafting():
    f = parse_class("{ f(x,y) }")
    g = parse_class("{ k(x,y,z) }")
    assert delta_compose(f, "y", "x", g) == TREE_MODEL.compose(f, "y", "x", g)


def test_variable_term_translates_to_identity():
    assert interpret(translate(Var("x"), "j")) == vt_unit("x", "j")
