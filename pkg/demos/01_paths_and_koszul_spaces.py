"""
Paths, relations and Koszul spaces
===================================

A quiver with three vertices and three parallel arrows at each step.  We
build it by hand, count its paths, and then watch the Koszul spaces
shrink to zero after degree 2.
"""

# %%
# The built-in catalog entry has arrows a, b, c from vertex 1 to 2 and
# d, e, f from 2 to 3.  Paths are written right to left: ``d*b`` means
# "b first, then d".
from prepro import beilinson_p2, enumerate_paths, graded_dim, koszul_space
from prepro.koszul import koszul_dims

p = beilinson_p2()
q = p.quiver
print(q.num_vertices, "vertices,", q.num_arrows, "arrows")
print([q.format_path(x) for x in enumerate_paths(q, 2)][:6], "...")

# %%
# Three commutativity relations cut the nine length-2 paths down to six.
for r in p.relations:
    print("  ", r.format(q))
print("dims of the quotient:", [graded_dim(p, d).total for d in range(4)])

# %%
# Koszul spaces: K_0 and K_1 are everything, K_2 is the relation space,
# K_3 is the intersection of the two padded copies, here zero.
for row in koszul_dims(p, 4):
    print(f"K_{row.l}: dim {row.dim}")

# %%
# Exact rational arithmetic under the hood.  The basis of K_2 is the
# reduced echelon basis of the relation span.
k2 = koszul_space(p, 2)
print(k2)
