"""
Colorings and distance labelings
================================

(m,k)-colorings, L(2,1) spans and circular L(2,1) spans all reduce to the
homomorphism solvers.
"""

from bandhom import (
    SolveOptions,
    circular_l21_span,
    l21_span,
    make_complete,
    make_cycle,
    make_path,
    solve_mk_coloring,
)

c5 = make_cycle(5)
for m, k in [(2, 1), (3, 1), (5, 2), (7, 3)]:
    r = solve_mk_coloring(c5, m, k, SolveOptions(witness=True))
    print(f"C5 ({m},{k})-coloring: {r.answer}  colours={r.witness}  alphabet={r.beta + 1}")

# L(2,1): adjacent vertices get labels at least 2 apart, vertices at distance
# two get different labels; the span is the largest label used.
for name, g in [("P3", make_path(3)), ("C5", c5), ("K3", make_complete(3))]:
    span = l21_span(g, SolveOptions(witness=True))
    print(f"L(2,1) span of {name}: {span.span}  labels={span.witness}")

# Circular version: labels live on a cycle of k+1 vertices.
for name, g in [("K3", make_complete(3)), ("C5", c5)]:
    span = circular_l21_span(g, SolveOptions(witness=True))
    print(f"circular span of {name}: {span.span} (cycle of {span.target_size})  labels={span.witness}")
