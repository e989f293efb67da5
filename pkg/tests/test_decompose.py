import pytest
from conftest import DATA
from hypothesis import given
from strategies import trees

from cycop.cli import load
from cycop.decompose import (
    command_of,
    decomposition,
    find_leaf_corolla,
    is_connected,
    pluck,
    pluck_by_rules,
    reconstruct,
    remove_leaf,
    subtrees_satisfying,
)
from cycop.errors import DomainError, ValidationError
from cycop.mu import Pair, Var, is_normal, mu_alpha_eq
from cycop.syntax import parse_mu, parse_tree
from cycop.translate import phi
from cycop.trees import canonicalize

STAR = load(str(DATA / "star_tree.tree"))
T = STAR.value
SIG = STAR.signature


def test_pluck_along_each_edge():
    assert pluck(T, 0, "x").graph == parse_tree("{ g(a,b,c,d) }", SIG)
    assert pluck(T, 0, "x").entry == "a"
    assert pluck(T, 1, "a").graph == parse_tree("{ f(x,y,z,u), h(p,q) ; (y~p) }", SIG)
    assert pluck(T, 1, "a").entry == "x"
    with pytest.raises(DomainError):
        pluck(T, 0, "z")


def test_decomposition_of_the_star():
    d = decomposition(T, 0)
    assert d.head == parse_tree("{ f(x,y,z,u) }", SIG)
    assert [v for v, _ in d.plucked] == ["x", "y"]


@pytest.mark.parametrize(
    "at, text",
    [
        (0, "f{mu a. g{a,b,c,d}, mu p. h{p,q}, z, u}"),
        (1, "g{mu x. f{x, mu p. h{p,q}, z, u}, b, c, d}"),
        (2, "h{mu y. f{mu a. g{a,b,c,d}, y, z, u}, q}"),
    ],
)
def test_command_of_each_corolla(at, text):
    c = command_of(T, at)
    assert mu_alpha_eq(c, parse_mu(text, SIG))
    assert phi(c) == canonicalize(T)


def test_exceptional_tree_gives_a_pair():
    assert command_of(parse_tree("{ (b,a) }")) == Pair(Var("a"), Var("b"))


def test_extended_trees_are_rejected():
    t = parse_tree("{ f(x,y), (a,b) ; (y~a) }")
    with pytest.raises(ValidationError):
        decomposition(t, 0)


def test_leaf_removal():
    leaf = find_leaf_corolla(T)
    rest = remove_leaf(T, leaf)
    assert len(rest.corollas) == 2
    assert is_connected(T, {0, 1, 2})


@given(trees(max_corollas=5))
def test_pluck_agrees_with_rules_and_characterization(t):
    for i, c in enumerate(t.corollas):
        for v in sorted(c.fv - t.free_vars):
            p = pluck(t, i, v)
            assert p == pluck_by_rules(t, i, v)
            assert subtrees_satisfying(t, i, v) == [p.graph]
            assert len(p.graph.corollas) < len(t.corollas)


@given(trees(max_corollas=5))
def test_every_head_gives_the_class(t):
    cls = canonicalize(t)
    for i in range(len(t.corollas)):
        c = command_of(t, i)
        assert is_normal(c)
        assert phi(c) == cls
        assert reconstruct(t, i) == cls
        pieces = decomposition(t, i).pieces()
        assert sum(len(p.corollas) for p in pieces) == len(t.corollas)
