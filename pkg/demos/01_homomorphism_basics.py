"""
Deciding homomorphisms
======================

Build a few small graphs, ask whether one maps onto another, and look at
what the dynamic programme did along the way.
"""

from bandhom import SolveOptions, check_hom, make_complete, make_cycle, solve_hom, solve_lihom

# A 5-cycle is 3-colourable, i.e. it maps to the triangle.
c5, k3 = make_cycle(5), make_complete(3)
result = solve_hom(c5, k3, SolveOptions(witness=True))
print("C5 -> K3:", result.answer, "colours:", result.witness)
assert check_hom(c5, k3, result.witness)

# The triangle does not map to the 5-cycle: C5 has no triangles.
result = solve_hom(k3, c5)
print("K3 -> C5:", result.answer)

# The window width beta is one more than the bandwidth of the target's
# complement.  The complement of C5 is again a 5-cycle, so beta = 3 and the
# state words use the symbols 0..3.
print("beta:", result.beta, "ordering of C5:", result.ordering)
print("|T[k]| per stage:", result.stage_sizes)

# Locally injective mode only changes which vertex sets may share an image:
# they must be pairwise at distance at least 3.
c6 = make_cycle(6)
for target in (make_cycle(3), make_cycle(6)):
    r = solve_lihom(c6, target, SolveOptions(witness=True))
    print(f"C6 -> C{target.n} locally injective:", r.answer, r.witness)
