import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycop.errors import ClashError, DomainError, ValidationError
from cycop.naming import (
    Bijection,
    all_bijections,
    check_user_token,
    disjoint_union,
    extend_fixpoint,
    fresh,
    fresh_many,
    replace_domain,
    restrict,
    sorted_vars,
)

names = st.sets(st.sampled_from(["x", "y", "z", "u", "v", "w", "a", "b"]), min_size=1)


def test_fresh_uses_reserved_character_and_least_index():
    assert fresh("x", {"x", "x#0"}) == "x#1"
    assert fresh("x#4", set()) == "x#0"
    assert fresh("", set()) == "v#0"


def test_fresh_many_is_pairwise_distinct():
    out = fresh_many(["x", "x", "y"], {"x#0"})
    assert out == ["x#1", "x#2", "y#0"]


def test_generated_names_sort_after_plain_names():
    assert sorted_vars(["x#1", "y", "x", "x#0", "a"]) == ["a", "x", "x#0", "x#1", "y"]


def test_user_tokens_reject_the_reserved_character():
    assert check_user_token("x1'") == "x1'"
    with pytest.raises(ValidationError):
        check_user_token("x#0")


def test_bijection_must_be_injective():
    with pytest.raises(ClashError):
        Bijection({"a": "x", "b": "x"})


def test_restrict_and_replace_domain():
    s = Bijection({"a": "x", "b": "y", "c": "z"})
    assert restrict(s, {"x", "z"}) == Bijection({"a": "x", "c": "z"})
    with pytest.raises(DomainError):
        restrict(s, {"w"})
    assert replace_domain(s, "d", "a") == Bijection({"d": "x", "b": "y", "c": "z"})
    with pytest.raises(ClashError):
        replace_domain(s, "b", "a")


def test_extend_fixpoint_and_disjoint_union():
    s = Bijection({"a": "x"})
    assert extend_fixpoint(s, "y") == Bijection({"a": "x", "y": "y"})
    with pytest.raises(ClashError):
        extend_fixpoint(s, "x")
    with pytest.raises(ClashError):
        disjoint_union(s, Bijection({"b": "x"}))


def test_all_bijections_counts():
    assert len(list(all_bijections("abc", "xyz"))) == 6
    assert list(all_bijections("ab", "x")) == []


@given(names, st.randoms())
def test_composition_with_inverse_is_identity(xs, rnd):
    xs = sorted(xs)
    ys = list(xs)
    rnd.shuffle(ys)
    s = Bijection(dict(zip(ys, xs)))
    assert (s @ s.inverse()).is_identity()
    assert (s.inverse() @ s).is_identity()
    for y in ys:
        assert s.inv(s(y)) == y


@given(names, names)
def test_fresh_avoids_everything(hints, avoid):
    out = fresh_many(sorted(hints), avoid)
    assert len(set(out)) == len(out)
    assert not set(out) & avoid
