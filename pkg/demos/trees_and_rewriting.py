"""Build graphs from text, classify them, and eliminate special corollas.

Run with ``python3 demos/trees_and_rewriting.py``.
"""

from cycop.rewrite import normal_form, survey_reductions
from cycop.syntax import parse_tree, print_tree
from cycop.trees import NotATree, canonicalize, classify

SIGNATURE = "s : {x, y, z, u, v}\nt : {a, b, c, d}\nw : {p, q, r}\n"

GRAPHS = {
    "two edges between the same corollas": "{ s(x,y,z,u,v), t(a,b,c,d) ; (u~c)(v~b) }",
    "an edge inside one corolla": "{ s(x,y,z,u,v), t(a,b,c,d) ; (x~a)(b~c) }",
    "three corollas in a ring": "{ s(x,y,z,u,v), t(a,b,c,d), w(p,q,r) ; (v~b)(c~q)(r~u) }",
    "a genuine tree": "{ s(x,y,z,u,v), t(a,b,c,d), w(p,q,r) ; (v~b)(c~q) }",
}

print("classification")
for label, text in GRAPHS.items():
    g = parse_tree(SIGNATURE + text)
    kind = classify(g)
    verdict = f"rejected: {kind.reason.value}" if isinstance(kind, NotATree) else f"{kind.value} tree"
    print(f"  {label:<38} -> {verdict}")

tree = parse_tree(SIGNATURE + GRAPHS["a genuine tree"])
print(f"\nfree variables of the tree: {sorted(tree.free_vars)}")
print(f"canonical representative:   {print_tree(canonicalize(tree))}")

extended = parse_tree(SIGNATURE + "{ (e,f), s(x,y,z,u,v), (g,h), (i,j) ; (f~x)(v~g)(h~i) }")
trace = []
result = normal_form(extended, trace)
print(f"\nextended tree: {print_tree(extended)}")
for rule, graph in trace:
    print(f"  {rule.kind.value:<16} at ({rule.near}~{rule.far}) gives {print_tree(graph)}")
survey = survey_reductions(extended)
print(f"every reduction order: {len(survey.normal_forms)} normal form, lengths {sorted(survey.path_lengths)}")
print(f"normal form: {print_tree(result)}")
