"""
Quadratic duals and a Koszulity probe
=====================================

For a Koszul algebra the Hilbert series of the algebra and of its
quadratic dual are inverse to each other (with a sign twist).  The probe
checks this identity degree by degree.  Passing is only a necessary
condition; failing is a proof of non-Koszulity.
"""

# %%
from prepro import (
    PathVector,
    QuadraticPresentation,
    Quiver,
    graded_dim,
    koszulity_probe,
    polynomial_quiver,
    quadratic_dual,
)

p = polynomial_quiver(2)
d = quadratic_dual(p)
print("k[x,y]   :", [graded_dim(p, k).total for k in range(6)])
print("its dual :", [graded_dim(d, k).total for k in range(6)])
print(koszulity_probe(p, 8).message)

# %%
# Three loops with relations y*y and z*z - z*y.  The dual has enough
# room left in degree 4 that the series no longer cancel.
q = Quiver.build(["0"], [(0, 0, "x"), (0, 0, "y"), (0, 0, "z")])
yy = q.path("y", "y")
zz, zy = q.path("z", "z"), q.path("z", "y")
bad = QuadraticPresentation(q, (PathVector({yy: 1}), PathVector({zz: 1, zy: -1})))
v = koszulity_probe(bad, 6)
print(v.message)
