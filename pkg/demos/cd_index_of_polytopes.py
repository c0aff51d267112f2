"""
cd-indices of small polytopes
=============================

Build face lattices, count chains by rank set and rewrite the resulting
ab-polynomial in c and d.
"""

from cdgamma import polytopes
from cdgamma.flags import flag_f, flag_h, gamma_vector, sd_h_from_flag_h
from cdgamma.words import ab_to_cd, psi_from_flag_h, specialize_c1

# The 3-cube, built from its vertex/facet incidence.
cube = polytopes.cube(3)
print([len(level) for level in cube.levels])

# Flag f-vector: chains counted by the ranks they visit.
f = flag_f(cube)
for s, v in f.items():
    print(sorted(s), v)

# Inclusion-exclusion gives the flag h-vector, which is the ab-polynomial.
psi = psi_from_flag_h(flag_h(f))
print(psi)

# Eulerian posets have a cd-index.
phi = ab_to_cd(psi)
print(phi)

# Setting c = 1 groups the coefficients by number of d's.
delta = specialize_c1(phi)
print("delta", delta)

# The barycentric subdivision is a flag sphere whose gamma-vector is
# 2^i * delta_i.
h_sd = sd_h_from_flag_h(flag_h(f))
print("h(sd)", h_sd, "gamma", gamma_vector(h_sd))

# A few more.
for p in (polytopes.simplex(4), polytopes.crosspolytope(3), polytopes.polygon(6)):
    print(p.name, ab_to_cd(psi_from_flag_h(flag_h(flag_f(p)))))
