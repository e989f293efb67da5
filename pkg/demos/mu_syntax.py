"""Normalize a command, rotate its head, and compare it with the tree it denotes.

Run with ``python3 demos/mu_syntax.py``.
"""

from cycop.mu import mu_normal_form, prime_closure
from cycop.syntax import parse_document, print_comb, print_mu, print_tree
from cycop.translate import mu_equiv, phi, phi_direct, translate

SOURCE = """
f : {x, y, z, u}
g : {a, b, c, d}
h : {p, q}
<mu y. f{mu a. g{a,b,c,d}, y, z, u} | mu p. h{p,q}>
"""

doc = parse_document(SOURCE, "mu")
command = doc.value
normal = mu_normal_form(command)
print(f"command:     {print_mu(command)}")
print(f"normal form: {print_mu(normal)}")

closure = sorted(prime_closure(normal), key=print_mu)
print(f"\nre-rooting the normal form reaches {len(closure)} commands:")
for c in closure:
    print(f"  {print_mu(c)}")
print(f"all equivalent to the normal form: {all(mu_equiv(c, normal) for c in closure)}")

print(f"\ncombinator: {print_comb(translate(command))}")
print(f"tree class: {print_tree(phi(command))}")
print(f"computed clause by clause: {print_tree(phi_direct(command))}")
