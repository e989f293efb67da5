import pytest
from hypothesis import given
from strategies import combinators, commands, extended_trees, terms, trees, two_level

from cycop.errors import ParseError
from cycop.mu import Apply, Mu, Var
from cycop.syntax import (
    detect_lang,
    parse_comb,
    parse_document,
    parse_mu,
    parse_tree,
    print_document,
    print_mu,
    print_tree,
    tokenize,
)
from cycop.trees import Special


def roundtrip(obj, lang):
    text = print_document(obj)
    return parse_document(text, lang).value


@given(extended_trees())
def test_tree_round_trip(t):
    assert roundtrip(t, "tree") == t


@given(two_level())
def test_tree_of_trees_round_trip(t):
    assert roundtrip(t, "tree") == t


@given(commands(max_depth=3))
def test_command_round_trip(c):
    assert roundtrip(c, "mu") == c


@given(terms(max_depth=2))
def test_term_round_trip(t):
    assert roundtrip(t, "mu") == t


@given(combinators())
def test_combinator_round_trip(c):
    assert roundtrip(c, "comb") == c


@given(trees())
def test_printing_is_stable(t):
    assert print_document(roundtrip(t, "tree")) == print_document(t)


def test_tree_syntax():
    t = parse_tree("// a comment\nf : {x, y}\n{ f(a,b), (c,d) ; (b~c) }")
    assert t.corollas[1] == Special("c", "d")
    assert print_tree(t) == "{ f(a,b), (c,d) ; (b~c) }"


def test_named_and_positional_arguments():
    sig_text = "f : {x, y}\n"
    a = parse_mu(sig_text + "f{y: q, x: p}")
    b = parse_mu(sig_text + "f{p, q}")
    assert a == b
    assert isinstance(a, Apply) and a.arg("x") == Var("p")


def test_attached_instances_print_their_slots():
    c = parse_mu("f : {x, y}\nf(u,v){mu a. <a|s>, t}")
    assert isinstance(c.arg("u"), Mu)
    assert print_mu(c) == "f(u,v){mu a. <a | s>, t}"


def test_let_bindings_in_combinator_scripts():
    c = parse_comb("f : {x, y}\nlet F = act[p->x, q->y](f);\n(F q*x f)")
    assert parse_comb("f : {x, y}\n(act[p->x, q->y](f) q*x f)") == c


def test_empty_renaming_of_a_closed_combinator():
    c = parse_comb("m : {u}\nact[]((m u*v m))")
    assert print_document(c) == "m : {u}\nact[]((m u*v m))\n"


def test_inline_tree_decoration():
    t = parse_tree("f : {x, y}\n{ { f(x,y) }(a,b) }")
    assert t.free_vars == {"a", "b"}


@pytest.mark.parametrize(
    "text, lang, line, column",
    [
        ("{ f(a,b) ; (a~", "tree", 1, 15),
        ("f : {x, y}\n\nf{p}", "mu", 3, 1),
        ("mu x. <x | $>", "mu", 1, 12),
        ("f : {x}\n(f x*y", "comb", 2, 7),
    ],
)
def test_errors_are_located(text, lang, line, column):
    with pytest.raises(ParseError) as info:
        parse_document(text, lang)
    assert (info.value.line, info.value.column) == (line, column)


def test_reserved_words_are_not_variables():
    with pytest.raises(ParseError):
        parse_mu("mu let. <let | x>")


def test_tokens_carry_positions():
    toks = tokenize("f{\n  x}")
    assert [(t.text, t.line, t.column) for t in toks[:4]] == [("f", 1, 1), ("{", 1, 2), ("x", 2, 3), ("}", 2, 4)]


def test_language_detection():
    assert detect_lang("a.mu", "") == "mu"
    assert detect_lang("a.comb", "") == "comb"
    assert detect_lang("a.vt", "") == "tree"
    assert detect_lang(None, "f : {x}\n{ f(a) }") == "tree"
    assert detect_lang(None, "(f x*y g)") == "comb"
    assert detect_lang(None, "<x | y>") == "mu"
