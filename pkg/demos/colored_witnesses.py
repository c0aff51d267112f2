"""
Colored complexes behind d-vectors
==================================

Check that a vector is the f-vector of a k-colored complex by colored
compression, inspect the compressed witness and double it.
"""

from cdgamma import polytopes
from cdgamma.colored import double_complex, ffk_compress, is_k_ffk, is_k_ffk_bruteforce
from cdgamma.flags import gamma_from_delta
from cdgamma.io import write_colored
from cdgamma.realizability import conjecture_search, delta_ffk_report
from cdgamma.words import alpha_vector, cd_index

# Two colors, six vertices, seven edges: fine.  One vertex per color with
# an edge is impossible with only one vertex in total.
print(is_k_ffk((1, 6, 7), 2), is_k_ffk((1, 1, 1), 2))

# The compressed family takes colex-first rainbow sets on each level.
fam = ffk_compress((1, 6, 7), 2)
print(fam.levels)

# A small brute-force search agrees.
print(is_k_ffk_bruteforce((1, 6, 7), 2))

# The 4-simplex: delta = (1, 11, 4) is realized by a 2-colored complex.
phi = cd_index(polytopes.simplex(4))
report = delta_ffk_report(phi)
print(report.delta, report.k, report.ok)
print(write_colored(report.witness))

# Doubling every vertex multiplies f_{i-1} by 2^i, matching the gamma-vector
# of the barycentric subdivision.
print(double_complex(report.witness).f_vector(), gamma_from_delta(report.delta))

# A finer question: realize every cd-coefficient as a flag count by colors.
witness = conjecture_search(alpha_vector(phi))
print(witness.flag_f_by_color())
