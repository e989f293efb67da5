import pytest
from hypothesis import given
from strategies import classes, parse_class

from cycop.errors import ClashError, DomainError, ValidationError
from cycop.laws import total_composition_suite, operad_suite
from cycop.naming import Bijection
from cycop.operad import (
    TREE_MODEL,
    Entry,
    ProfileModel,
    complete_with_units,
    total_composition,
    vt_action,
    vt_compose,
    vt_unit,
)


cls = parse_class


def test_compose_grafts_along_an_edge():
    f, g = cls("{ f(x,y) }"), cls("{ k(a,b,c) }")
    assert vt_compose(f, "y", "a", g) == cls("{ f(x,y), k(a,b,c) ; (y~a) }")


def test_unit_is_neutral():
    f = cls("{ f(x,y) }")
    assert vt_compose(f, "y", "a", vt_unit("a", "b")) == cls("{ f(x,b) }")
    assert vt_compose(vt_unit("a", "b"), "a", "x", f) == cls("{ f(b,y) }")
    with pytest.raises(ValidationError):
        vt_unit("a", "a")


def test_composition_preconditions():
    f, g = cls("{ f(x,y) }"), cls("{ g(x,b) }")
    with pytest.raises(ClashError):
        vt_compose(f, "y", "b", g)
    with pytest.raises(DomainError):
        vt_compose(f, "z", "b", g)


def test_action_renames_free_variables():
    f = cls("{ f(x,y), g(a,b) ; (y~a) }")
    assert vt_action(f, Bijection({"p": "x", "q": "b"})) == cls("{ f(p,y), g(a,q) ; (y~a) }")
    with pytest.raises(DomainError):
        vt_action(f, Bijection({"p": "x"}))


def test_total_composition_with_clashing_residues():
    f = cls("{ f(x,y) }")
    phi = {"x": Entry(cls("{ g(a,y) }"), "a"), "y": Entry(cls("{ h(b,x) }"), "b")}
    assert total_composition(f, phi) == cls("{ f(s,t), g(a,y), h(b,x) ; (s~a)(t~b) }")


def test_complete_with_units_fills_missing_entries():
    f = cls("{ f(x,y) }")
    full = complete_with_units(TREE_MODEL, f, {"x": Entry(cls("{ g(a,b) }"), "a")})
    assert set(full) == {"x", "y"}
    assert total_composition(f, full) == cls("{ f(x,y), g(a,b) ; (x~a) }")


def test_profile_model():
    m = ProfileModel()
    assert m.compose(frozenset("xy"), "y", "a", frozenset("ab")) == frozenset("xb")
    assert m.unit("x", "y") == frozenset("xy")


@given(classes(), classes())
def test_commutativity(f, g):
    x, y = sorted(f.free_vars)[0], sorted(g.free_vars)[0]
    if (f.free_vars - {x}) & (g.free_vars - {y}):
        return
    assert vt_compose(f, x, y, g) == vt_compose(g, y, x, f)


@pytest.mark.parametrize("model", [TREE_MODEL, ProfileModel()], ids=["tree", "profile"])
def test_axiom_suite_in_both_models(model):
    rep = operad_suite(model, bound=3, seed=1, count=40)
    assert rep.ok, rep.to_text()


def test_total_composition_properties():
    rep = total_composition_suite(bound=3, seed=1, count=40)
    assert rep.ok, rep.to_text()
    assert rep.counts["rename-after-total"] == rep.counts["stacked-total"] == 40
