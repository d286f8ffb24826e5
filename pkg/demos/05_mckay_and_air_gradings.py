"""
McKay quivers of cyclic groups
==============================

The group 1/r(a_1, ..., a_n) acts diagonally on n-space by r-th roots of
unity.  Its McKay quiver has r vertices and an arrow l -> l + a_i for every
weight.  When the weights sum to r the AIR grading, which puts the
wrap-around arrows in degree 1, turns the skew-group algebra into a
higher preprojective algebra.
"""

# %%
from prepro import (
    CyclicGroupSpec,
    air_grading,
    classify_group,
    degree_zero_part,
    finiteness_check,
    mckay_presentation,
    skew_superpotential,
    validate_grading,
)

s = CyclicGroupSpec.parse("5:1,1,3")
p = mckay_presentation(s)
q = p.quiver
print(f"{s}: {q.num_vertices} vertices, {q.num_arrows} arrows, {p.num_relations} relations")

# %%
g = air_grading(s)
print("degree 1:", [q.arrows[i].label for i in g.arrows_of_degree(1)])
w = skew_superpotential(s)
v = validate_grading(p, w, g)
print("Gorenstein parameter:", v.gorenstein_parameter)
print("degree-0 part:", finiteness_check(degree_zero_part(p, g)))

# %%
# Classification only uses the weights of the group generators.
for text in ("5:1,1,3", "7:3,5,6", "3:1,2,1,2", "4:1,3,0", "3:1,1"):
    c = classify_group(CyclicGroupSpec.parse(text))
    print(f"{text:>10}  {c.verdict:<30} {c.description}")
