"""
Tensor products and the shuffle product
=======================================

The tensor product of two quadratic presentations lives on the product
of the vertex sets.  Shuffling the two superpotentials gives a
superpotential for the product, and gradings add.
"""

# %%
from prepro import (
    CyclicGroupSpec,
    WeightGrading,
    air_grading,
    gorenstein_parameter,
    koszul_space,
    lift_grading_sum,
    mckay_presentation,
    shuffle_product,
    skew_superpotential,
    tensor_presentation,
)

s = CyclicGroupSpec.parse("3:1,2")
p = mckay_presentation(s)
t, tm = tensor_presentation(p, p)
print(f"{t.quiver.num_vertices} vertices, {t.quiver.num_arrows} arrows, {t.num_relations} relations")
print("Koszul dims:", [koszul_space(t, l).dim for l in range(6)])

# %%
w = skew_superpotential(s)
sh = shuffle_product(w, w, tm)
print(len(sh), "terms of length", sh.degree)

# %%
# The AIR grading has parameter 1 on each factor.  On the product the
# parameters add.
g = air_grading(s)
zero = WeightGrading.zero(len(g))
print("AIR + AIR :", gorenstein_parameter(t, sh, lift_grading_sum(g, g, tm)))
print("AIR + zero:", gorenstein_parameter(t, sh, lift_grading_sum(g, zero, tm)))
