"""
Growth of the state sets
========================

With H = P4 the complement is again a path, so the window is 2 and every
stage set holds at most 3^n words.  Watch the actual sizes and timings as G
grows.
"""

import random

from bandhom import Graph, make_path, solve_hom

h = make_path(4)
previous = None
for n in range(6, 15, 2):
    rng = random.Random(n)
    g = Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.3])
    r = solve_hom(g, h)
    ratio = "" if previous is None else f"  x{(r.wall_time / previous) ** 0.5:.2f} per vertex"
    print(f"n={n:2d}  answer={r.answer!s:5}  largest stage={max(r.stage_sizes):7d}"
          f"  bound 3^n={3 ** n:8d}  time={r.wall_time:.3f}s{ratio}")
    previous = r.wall_time
