"""
Ruling out d-polynomials in rank 5
==================================

A candidate ``1 + a d + b d^2`` for a rank-5 sphere must split ``a`` into
three cd-coefficients satisfying two inequalities.  When no split survives,
the candidate is impossible.
"""

from cdgamma import polytopes
from cdgamma.colored import is_k_ffk
from cdgamma.poset import join
from cdgamma.realizability import rank5_screen
from cdgamma.words import cd_index, specialize_c1

# (1, 6, 7) is the f-vector of a 2-colored complex, so the FFK test alone
# cannot exclude it.  The screen does.
print(is_k_ffk((1, 6, 7), 2), rank5_screen((1, 6, 7)).lines())

# The family (1, 2a, a^2 - 2) is excluded for every a >= 3.
for a in range(3, 7):
    print(a, rank5_screen((1, 2 * a, a * a - 2)).lines())

# (1, 4, 4) survives, and the join of two squares realizes it.
print(rank5_screen((1, 4, 4)).lines())
sq = polytopes.polygon(4)
phi = cd_index(join(sq, sq))
print(phi, "=", cd_index(sq) * cd_index(sq), specialize_c1(phi))

# All joins of two polygons pass.
for m in range(3, 7):
    for k in range(m, 7):
        delta = specialize_c1(cd_index(join(polytopes.polygon(m), polytopes.polygon(k))))
        print(m, k, delta, rank5_screen(delta).ruled_out)
