"""Hypothesis strategies that drive the seeded package generators."""

import random

from hypothesis import strategies as st

from cycop import generators as gen

SIG = gen.default_signature()

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rngs():
    return seeds.map(random.Random)


@st.composite
def trees(draw, max_corollas=4, n_special=0):
    rng = draw(rngs())
    return gen.random_tree(rng, SIG, draw(st.integers(1, max_corollas)), n_special)


@st.composite
def extended_trees(draw, max_ordinary=3, max_special=4):
    rng = draw(rngs())
    n_ord = draw(st.integers(0, max_ordinary))
    n_sp = draw(st.integers(1 if n_ord == 0 else 0, max_special))
    return gen.random_tree(rng, SIG, n_ord, n_sp)


@st.composite
def classes(draw, max_corollas=3, exceptional_rate=0.15):
    return gen.random_class(draw(rngs()), SIG, max_corollas, exceptional_rate)


@st.composite
def commands(draw, max_depth=2):
    rng = draw(rngs())
    return gen.random_command(rng, SIG, draw(st.integers(0, max_depth)))


@st.composite
def terms(draw, max_depth=2):
    rng = draw(rngs())
    return gen.random_term(rng, SIG, draw(st.integers(0, max_depth)))


@st.composite
def combinators(draw, max_depth=3):
    rng = draw(rngs())
    return gen.random_comb(rng, SIG, draw(st.integers(0, max_depth)))


@st.composite
def two_level(draw, bound=3):
    rng = draw(rngs())
    return gen.random_two_level(rng, SIG, draw(st.integers(1, bound)), bound)


def shared_signature():
    """Profiles for the hand-written examples, so that every parse agrees on them."""
    from cycop.signature import Signature

    sig = Signature()
    for name, profile in (("f", "xy"), ("g", "ab"), ("h", "pq"), ("k", "xyz")):
        sig.declare(name, profile)
    return sig


def parse_class(text, sig=None):
    from cycop.syntax import parse_tree
    from cycop.trees import canonicalize

    return canonicalize(parse_tree(text, sig or shared_signature()))
