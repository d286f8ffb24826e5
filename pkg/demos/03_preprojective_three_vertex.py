"""
A higher preprojective algebra from scratch
===========================================

Start from the three-vertex quiver of global dimension 2 and add one new
arrow for each basis element of the top Koszul space.  The new arrows run
backwards, from the last vertex to the first.
"""

# %%
from prepro import (
    beilinson_p2,
    build_preprojective,
    check_superpotential,
    derivation_quotient,
    koszul_basis,
    preprojective_superpotential,
    same_relation_span,
)

p = beilinson_p2()
q0 = p.quiver
gens = koszul_basis(p, 2)
for g in gens:
    print("K_2 generator:", g.format(q0))

# %%
pp = build_preprojective(p, 2)
q = pp.quiver
for i, arrow_id in sorted(pp.new_arrows.items()):
    a = q.arrows[arrow_id]
    print(f"new arrow {a.label}: {q.vertices[a.source].label} -> {q.vertices[a.target].label}")

print("relations of the preprojective algebra:")
for r in pp.presentation.relations:
    print("  ", r.format(q))

# %%
# The new arrows sit in degree 1 of the preprojective grading.  Summing
# signed rotations of q * a_q gives a superpotential whose derivatives
# recover exactly the same relations.
w = preprojective_superpotential(pp)
print(len(w), "superpotential terms of length", w.degree)
print("superpotential check:", check_superpotential(w.form, q))
print("derivation quotient matches:", same_relation_span(derivation_quotient(w), pp.presentation))
