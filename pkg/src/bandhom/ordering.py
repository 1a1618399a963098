"""Vertex orderings and graph bandwidth.

An ordering is a tuple ``perm`` of vertex names where ``perm[i - 1]`` is the
vertex placed at position ``i``.  The solver orders the target graph so that
the complement's edges are short; the stretch of that ordering fixes the
window width of the dynamic programme.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph

DEFAULT_EXACT_THRESHOLD = 24

Ordering = tuple[int, ...]


class BandwidthTooLarge(ValueError):
    """The exact search refuses graphs above its vertex threshold."""


@dataclass(frozen=True)
class BandwidthCertificate:
    value: int
    ordering: Ordering


def validate_ordering(g: Graph, ordering: Sequence[int]) -> Ordering:
    perm = tuple(ordering)
    if len(perm) != g.n:
        raise ValueError(f"ordering has {len(perm)} entries, graph has {g.n} vertices")
    if sorted(perm) != list(g.vertices()):
        raise ValueError(f"ordering {list(perm)} is not a permutation of 1..{g.n}")
    return perm


def positions(ordering: Sequence[int]) -> dict[int, int]:
    """Map each vertex to its 1-based position."""
    return {v: i for i, v in enumerate(ordering, start=1)}


def stretch(g: Graph, ordering: Sequence[int]) -> int:
    """Longest edge under ``ordering``; 0 for an edgeless graph."""
    pos = positions(validate_ordering(g, ordering))
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def _lower_bound(g: Graph) -> int:
    if g.num_edges == 0:
        return 0
    # a vertex of degree d needs d slots within distance b
    return max(1, max((g.degree(v) + 1) // 2 for v in g.vertices()))


def _layout_within(g: Graph, bound: int) -> Ordering | None:
    """Lexicographically smallest ordering of stretch at most ``bound``, or None."""
    n = g.n
    nbrs = [sorted(g.neighbors(v)) for v in range(n + 1)]
    pos = [0] * (n + 1)  # 0 means unplaced
    perm: list[int] = []

    def feasible(p: int) -> bool:
        # every unplaced vertex with a placed neighbour has a deadline; the
        # i-th smallest deadline must leave room for i earlier placements
        deadlines = []
        for w in range(1, n + 1):
            if pos[w]:
                continue
            d = min((pos[u] + bound for u in nbrs[w] if pos[u]), default=None)
            if d is not None:
                deadlines.append(d)
        deadlines.sort()
        return all(d >= p + 1 + i for i, d in enumerate(deadlines))

    def extend(p: int) -> bool:
        if p > n:
            return True
        for v in range(1, n + 1):
            if pos[v]:
                continue
            if any(pos[u] and p - pos[u] > bound for u in nbrs[v]):
                continue
            pos[v] = p
            perm.append(v)
            if feasible(p) and extend(p + 1):
                return True
            pos[v] = 0
            perm.pop()
        return False

    return tuple(perm) if extend(1) else None


def exact_bandwidth(g: Graph, threshold: int = DEFAULT_EXACT_THRESHOLD) -> BandwidthCertificate:
    """Minimum stretch over all orderings, with the lexicographically first optimal ordering.

    Iterative deepening on the bound: the first bound admitting a layout is the
    bandwidth, and the depth-first search tries vertices in increasing order at
    every position so the first layout found is the lexicographically smallest.
    The heuristic layout caps the search.
    """
    if g.n > threshold:
        raise BandwidthTooLarge(
            f"exact bandwidth limited to {threshold} vertices (graph has {g.n}); "
            "use heuristic_bandwidth or raise the threshold")
    upper = heuristic_bandwidth(g).value
    for bound in range(_lower_bound(g), upper + 1):
        perm = _layout_within(g, bound)
        if perm is not None:
            return BandwidthCertificate(bound, perm)
    raise AssertionError("heuristic layout not reproduced by exact search")


def _bfs_levels(g: Graph, start: int) -> list[list[int]]:
    seen = {start}
    levels = [[start]]
    while True:
        nxt = sorted({w for u in levels[-1] for w in g.neighbors(u)} - seen)
        if not nxt:
            return levels
        seen.update(nxt)
        levels.append(nxt)


def _pseudo_peripheral(g: Graph, component: list[int]) -> int:
    start = min(component, key=lambda v: (g.degree(v), v))
    ecc = len(_bfs_levels(g, start))
    while True:
        last = _bfs_levels(g, start)[-1]
        cand = min(last, key=lambda v: (g.degree(v), v))
        cand_ecc = len(_bfs_levels(g, cand))
        if cand_ecc <= ecc:
            return start
        start, ecc = cand, cand_ecc


def heuristic_bandwidth(g: Graph) -> BandwidthCertificate:
    """Cuthill-McKee layout from a pseudo-peripheral vertex of each component.

    Components are laid out one after another in order of their smallest
    vertex; ties are broken by (degree, vertex index).  Gives an upper bound.
    """
    placed: set[int] = set()
    perm: list[int] = []
    for root in g.vertices():
        if root in placed:
            continue
        component = sorted(g.distances_from(root))
        start = _pseudo_peripheral(g, component)
        placed.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            perm.append(u)
            for w in sorted(g.neighbors(u) - placed, key=lambda v: (g.degree(v), v)):
                placed.add(w)
                queue.append(w)
    order = tuple(perm)
    return BandwidthCertificate(stretch(g, order), order)


def cycle_power_ordering(m: int, k: int) -> Ordering:
    """Zigzag layout ``1, m, 2, m-1, 3, ...`` of the m-cycle's vertices.

    On ``C_m^(k-1)`` this has stretch ``2(k-1)`` whenever ``k <= (m-1)/2 + 1``.
    """
    if m < 3 or k < 1:
        raise ValueError(f"need m >= 3 and k >= 1, got m={m}, k={k}")
    lo, hi = 1, m
    perm = []
    while lo <= hi:
        perm.append(lo)
        if lo != hi:
            perm.append(hi)
        lo, hi = lo + 1, hi - 1
    return tuple(perm)
