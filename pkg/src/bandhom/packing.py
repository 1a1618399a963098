"""Characteristic vectors of independent and 2-independent vertex sets.

Coordinate ``i`` of every word refers to vertex ``i + 1`` of the graph, the
same alignment the solver's state vectors use.
"""

from __future__ import annotations

from .graph import Graph, power
from .trie import LEAF, VectorSet


def _conflict_masks(g: Graph) -> list[int]:
    # later neighbours only; earlier ones are handled when they were chosen
    masks = []
    for v in g.vertices():
        mask = 0
        for w in g.neighbors(v):
            if w > v:
                mask |= 1 << (w - 1)
        masks.append(mask)
    return masks


def _packing_trie(g: Graph) -> VectorSet:
    n = g.n
    conflicts = _conflict_masks(g)

    def build(i: int, forbidden: int):
        if i == n:
            return LEAF
        out = build(i + 1, forbidden)
        take = None
        if not forbidden >> i & 1:
            take = build(i + 1, forbidden | conflicts[i])
        return [out, take]

    return VectorSet(n, 2, build(0, 0))


def enum_independent_sets(g: Graph) -> VectorSet:
    """All characteristic vectors of independent sets of ``g`` (the empty set included)."""
    return _packing_trie(g)


def enum_2_independent_sets(g: Graph) -> VectorSet:
    """Characteristic vectors of vertex sets with pairwise distance at least 3."""
    return _packing_trie(power(g, 2))
