"""Direct checkers and brute-force search, used as an independent reference.

Mappings are tuples whose entry ``i - 1`` is the image of vertex ``i``.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

Mapping = tuple[int, ...]


def _valid_mapping(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    return len(phi) == g.n and all(1 <= x <= h.n for x in phi)


def check_hom(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if not _valid_mapping(g, h, phi):
        return False
    return all(h.adjacent(phi[u - 1], phi[v - 1]) for u, v in g.edges())


def check_lihom(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    """Homomorphism under which no two vertices with a common neighbour share an image."""
    if not check_hom(g, h, phi):
        return False
    for v in g.vertices():
        images = [phi[w - 1] for w in g.neighbors(v)]
        if len(set(images)) != len(images):
            return False
    return True


def check_h21(g: Graph, h: Graph, psi: Sequence[int]) -> bool:
    """Adjacent vertices land at H-distance >= 2, vertices at distance 2 on distinct labels.

    Labels in different components of H are infinitely far apart.
    """
    if not _valid_mapping(g, h, psi):
        return False
    hdist = {x: h.distances_from(x) for x in set(psi)}
    for v in g.vertices():
        for w, d in g.distances_from(v).items():
            if w <= v or d > 2:
                continue
            dh = hdist[psi[v - 1]].get(psi[w - 1])
            if dh is None:
                continue
            if d == 1 and dh < 2:
                return False
            if d == 2 and dh < 1:
                return False
    return True


def _backtrack(g: Graph, h: Graph, injective: bool) -> Mapping | None:
    n = g.n
    phi = [0] * (n + 1)
    earlier = [sorted(w for w in g.neighbors(v) if w < v) for v in range(n + 1)]
    # vertices sharing a neighbour with v, restricted to earlier ones
    second = [sorted({x for w in g.neighbors(v) for x in g.neighbors(w) if x < v})
              for v in range(n + 1)]

    def place(v: int) -> bool:
        if v > n:
            return True
        for x in range(1, h.n + 1):
            if any(not h.adjacent(phi[w], x) for w in earlier[v]):
                continue
            if injective and any(phi[w] == x for w in second[v]):
                continue
            phi[v] = x
            if place(v + 1):
                return True
        phi[v] = 0
        return False

    return tuple(phi[1:]) if place(1) else None


def brute_hom(g: Graph, h: Graph) -> Mapping | None:
    """Lexicographically first homomorphism, or None."""
    return _backtrack(g, h, injective=False)


def brute_lihom(g: Graph, h: Graph) -> Mapping | None:
    """Lexicographically first locally injective homomorphism, or None."""
    return _backtrack(g, h, injective=True)


def brute_mk_coloring(g: Graph, m: int, k: int) -> Mapping | None:
    """Assignment ``f: V -> {0..m-1}`` with ``k <= |f(u) - f(v)| <= m - k`` on every edge."""
    n = g.n
    f = [0] * (n + 1)
    earlier = [sorted(w for w in g.neighbors(v) if w < v) for v in range(n + 1)]

    def place(v: int) -> bool:
        if v > n:
            return True
        for c in range(m):
            if all(k <= abs(f[w] - c) <= m - k for w in earlier[v]):
                f[v] = c
                if place(v + 1):
                    return True
        return False

    return tuple(f[1:]) if place(1) else None


def brute_h21(g: Graph, h: Graph) -> Mapping | None:
    """Lexicographically first H(2,1)-labeling, by exhaustive backtracking on the distance rules."""
    n = g.n
    psi = [0] * (n + 1)
    hdist = {x: h.distances_from(x) for x in h.vertices()}
    gdist = {v: g.distances_from(v) for v in g.vertices()}

    def ok(v: int, x: int) -> bool:
        for w in range(1, v):
            d = gdist[v].get(w)
            if d is None or d > 2:
                continue
            dh = hdist[x].get(psi[w])
            if dh is not None and dh < (2 if d == 1 else 1):
                return False
        return True

    def place(v: int) -> bool:
        if v > n:
            return True
        for x in range(1, h.n + 1):
            if ok(v, x):
                psi[v] = x
                if place(v + 1):
                    return True
        return False

    return tuple(psi[1:]) if place(1) else None
