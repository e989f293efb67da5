"""Independent reference implementations used only by the tests."""

from itertools import permutations

from cycop.naming import Bijection, sorted_vars
from cycop.trees import VernonGraph, rename


def alpha_eq_bruteforce(t1: VernonGraph, t2: VernonGraph) -> bool:
    """Try every bijection between the bound variables of the two graphs."""
    if t1.free_vars != t2.free_vars or len(t1.bound_vars) != len(t2.bound_vars):
        return False
    if len(t1.corollas) != len(t2.corollas):
        return False
    source = sorted_vars(t1.bound_vars)
    for image in permutations(sorted_vars(t2.bound_vars)):
        # rename through temporaries so overlapping names cannot collide
        tmp = rename(t1, Bijection({f"tmp{i}": v for i, v in enumerate(source)}))
        moved = rename(tmp, Bijection({w: f"tmp{i}" for i, w in enumerate(image)}))
        if moved == t2:
            return True
    return False
