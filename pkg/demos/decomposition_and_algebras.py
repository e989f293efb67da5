"""Split a tree at each corolla, read back commands, and evaluate trees in other models.

Run with ``python3 demos/decomposition_and_algebras.py``.
"""

from cycop.decompose import command_of, decomposition, reconstruct
from cycop.dot import to_dot
from cycop.monad import mu
from cycop.operad import ProfileModel
from cycop.syntax import parse_tree, print_mu, print_tree
from cycop.translate import delta, phi
from cycop.trees import canonicalize

TREE = parse_tree(
    """
f : {x, y, z, u}
g : {a, b, c, d}
h : {p, q}
{ f(x,y,z,u), g(a,b,c,d), h(p,q) ; (x~a)(y~p) }
"""
)
cls = canonicalize(TREE)

for i, corolla in enumerate(TREE.corollas):
    d = decomposition(TREE, i)
    pieces = ", ".join(f"{v}: {print_tree(p.graph)}" for v, p in d.plucked)
    c = command_of(TREE, i)
    print(f"head {print_tree(d.head)}  plucked {pieces}")
    print(f"  command {print_mu(c)}")
    print(f"  denotes the tree: {phi(c) == cls}, rebuilt by composition: {reconstruct(TREE, i) == cls}")

print(f"\nevaluated in the tree model: {delta(TREE) == cls}")
print(f"evaluated in the variable-set model: {sorted(delta(TREE, ProfileModel()))}")

two_level = parse_tree(
    "f : {x, y}\n{ { f(x,y), f(a,b) ; (y~a) }(p,q), { f(x,y) }(r,s) ; (q~r) }"
)
print(f"\nstructure map on a tree of trees equals multiplication: {delta(two_level) == mu(two_level)}")

print("\nGraphviz source for the tree:")
print(to_dot(TREE), end="")
