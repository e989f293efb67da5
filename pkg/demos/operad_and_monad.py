"""Compose tree classes, check the axioms, and multiply trees of trees.

Run with ``python3 demos/operad_and_monad.py``.
"""

from cycop.laws import monad_suite, operad_suite
from cycop.monad import flatten, mu
from cycop.operad import ProfileModel, vt_compose, vt_unit
from cycop.syntax import parse_tree, print_tree
from cycop.trees import canonicalize

SIGNATURE = "f : {x, y}\ng : {a, b, c}\n"


def cls(text):
    return canonicalize(parse_tree(SIGNATURE + text))


f, g = cls("{ f(x,y) }"), cls("{ g(a,b,c) }")
fg = vt_compose(f, "y", "a", g)
print(f"f along y with g along a: {print_tree(fg)}")
print(f"composing with a unit renames: {print_tree(vt_compose(fg, 'x', 'e', vt_unit('e', 'n')))}")

print("\naxioms in the tree model")
print(operad_suite(bound=3, seed=0, count=50).to_text())
print("\naxioms in the model that only tracks variable sets")
print(operad_suite(ProfileModel(), bound=3, seed=0, count=50).to_text())

two_level = parse_tree(SIGNATURE + "{ { f(x,y), g(a,b,c) ; (y~a) }(p,q,r), { (x,y) }(s,t) ; (r~s) }")
print(f"\ntree of trees: {print_tree(two_level)}")
print(f"flattened:     {print_tree(flatten(two_level))}")
print(f"multiplied:    {print_tree(mu(two_level))}")
print()
print(monad_suite(bound=4, seed=0, count=50).to_text())
