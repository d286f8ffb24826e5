"""
Searching for gradings
======================

Try every assignment of degrees 0 and 1 to the arrows.  Keep the ones
that make all relations homogeneous and put every superpotential term in
degree 1.  A preprojective structure also needs a finite dimensional
degree-0 part.
"""

# %%
from prepro import CyclicGroupSpec, degree_zero_part, grading_search, mckay_presentation, skew_superpotential

s = CyclicGroupSpec.parse("3:1,2,1,2")
p = mckay_presentation(s)
res = grading_search(p, skew_superpotential(s))
print(res.summary())

# %%
# Each surviving grading leaves a cycle in degree 0 whose powers never
# vanish (checked up to length 12).
q = p.quiver
for g, v in res.valid:
    p0 = degree_zero_part(p, g)
    f = v.degree0_finiteness
    print("degree 1:", [q.arrows[i].label for i in g.arrows_of_degree(1)],
          "| witness:", p0.quiver.format_path(f.witness))

# %%
# The same search on a group with a preprojective grading.
s2 = CyclicGroupSpec.parse("5:1,1,3")
print(grading_search(mckay_presentation(s2), skew_superpotential(s2)).summary())
