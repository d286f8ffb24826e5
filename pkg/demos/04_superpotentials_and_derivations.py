"""
Superpotentials and their derivatives
=====================================

A superpotential is a sum of closed paths, all the same length, that is
fixed by the signed cyclic shift.  Its left derivatives by paths of
length n - 2 generate a quadratic presentation.
"""

# %%
import itertools

from prepro import (
    PathVector,
    Quiver,
    Superpotential,
    check_superpotential,
    derivation_quotient,
    derive,
    polynomial_quiver,
    same_relation_span,
    signed_cyclic_shift,
)

q = Quiver.build(["0"], [(0, 0, "x"), (0, 0, "y"), (0, 0, "z")])
terms = {}
for perm in itertools.permutations("xyz"):
    inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if perm[i] > perm[j])
    terms[q.path(*perm)] = (-1) ** inversions
w = PathVector(terms)
print("antisymmetrizer:", w.format(q))

# %%
# For an odd length the signed shift is the plain rotation.
print("fixed by the shift:", signed_cyclic_shift(w, q) == w)
print(check_superpotential(w, q))

# %%
ws = Superpotential(q, w)
for label in "xyz":
    print(f"d/d{label}:", derive(ws, q.path(label)).format(q))
print("derivation quotient is k[x,y,z]:",
      same_relation_span(derivation_quotient(ws), polynomial_quiver(3)))
