"""
Building a cd-index one facet at a time
=======================================

Walk a facet order of the cube boundary.  Each prefix is a ball; capping it
with a single new cell gives a sphere whose cd-index grows by a predictable
increment at every step.
"""

from cdgamma.shelling import (
    boundary,
    builtin_shelling,
    capped_cd,
    gamma_region,
    omega,
    stanley_step,
    telescoped_cd,
    verify_c2_lower_bound,
)
from cdgamma.words import cd_index

so = builtin_shelling("cube", 3)
print("facets in order:", ["".join(sorted(next(iter(f)))) for f in so.order])

# The first facet alone, capped, is a sphere with two facets.
print(capped_cd(omega(so, 1)))

# Each new facet meets the earlier ones; the part of its boundary that is
# still new is the region Gamma.
for j in range(2, so.r):
    g = gamma_region(so, j)
    print(j, "new boundary cells:", len(g.maximal), "their boundary:", len(boundary(g).faces))

# One step of the recursion: before + psi*c + Phi(boundary of Gamma)*d.
for i in range(1, so.r - 1):
    step = stanley_step(so, i)
    print(i, step.before, "->", step.after, "| psi =", step.psi, "| holds:", step.holds)

# The lower bound used in the induction.
print([verify_c2_lower_bound(so, i) for i in range(2, so.r - 1)])

# Telescoping from the first facet reproduces the direct computation.
print(telescoped_cd(so), "==", cd_index(so.poset))
