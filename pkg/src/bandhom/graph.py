"""Simple undirected graphs, standard constructors and the edge-list format.

Vertices are named ``1..n`` everywhere in the public interface.  Graphs are
immutable once built.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphFormatError(ValueError):
    """Raised for malformed edge-list documents or invalid built-in names."""


class Graph:
    """A simple, loopless, undirected graph on vertices ``1..n``."""

    __slots__ = ("n", "_nbrs", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        # slot 0 is unused so that vertex v lives at index v
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._edges = tuple(sorted((u, v) for u in range(1, n + 1) for v in nbrs[u] if u < v))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._nbrs[1:]), default=0)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def distances_from(self, source: int) -> dict[int, int]:
        """BFS distances from ``source``; unreachable vertices are absent."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``1..len(vertices)`` in the given order."""
        vs = list(vertices)
        index = {v: i + 1 for i, v in enumerate(vs)}
        return Graph(len(vs), [(index[u], index[v]) for u, v in self._edges
                               if u in index and v in index])

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Graph whose vertex ``i`` is the old vertex ``perm[i-1]``."""
        return self.induced(perm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u in g.vertices() for v in range(u + 1, g.n + 1)
                       if not g.adjacent(u, v)])


def power(g: Graph, k: int) -> Graph:
    """Join every pair of distinct vertices at distance at most ``k``.

    ``k = 0`` gives the edgeless graph on the same vertex set.
    """
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    edges = []
    for u in g.vertices():
        for v, d in g.distances_from(u).items():
            if u < v and d <= k:
                edges.append((u, v))
    return Graph(g.n, edges)


def make_path(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"path needs at least 1 vertex, got {m}")
    return Graph(m, [(i, i + 1) for i in range(1, m)])


def make_cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {m}")
    return Graph(m, [(i, i + 1) for i in range(1, m)] + [(1, m)])


def make_complete(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {m}")
    return Graph(m, [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)])


def make_edgeless(m: int) -> Graph:
    return Graph(m)


def make_cycle_power(m: int, k: int) -> Graph:
    """``C_m^k``: vertices of the m-cycle joined when their cycle distance is at most k."""
    return power(make_cycle(m), k)


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS-style edge list.

    Comment lines start with ``c``; exactly one ``p edge <n> <m>`` line must
    precede the ``e <u> <v>`` lines.  Duplicate edges collapse; the edge count
    on the problem line is informational only.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: second problem line: {raw!r}")
                if len(parts) != 4 or parts[1] != "edge":
                    raise GraphFormatError(f"line {lineno}: expected 'p edge <n> <m>': {raw!r}")
                n, declared = int(parts[2]), int(parts[3])
                if n < 0 or declared < 0:
                    raise GraphFormatError(f"line {lineno}: negative count: {raw!r}")
            elif parts[0] == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before problem line: {raw!r}")
                if len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>': {raw!r}")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}: {raw!r}")
                if u == v:
                    raise GraphFormatError(f"line {lineno}: self-loop: {raw!r}")
                edges.append((u, v))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line type: {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: bad integer: {raw!r}") from None
    if n is None:
        raise GraphFormatError("missing problem line 'p edge <n> <m>'")
    return Graph(n, edges)


def render_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_BUILTINS = {
    "cycle": (1, make_cycle),
    "path": (1, make_path),
    "complete": (1, make_complete),
    "edgeless": (1, make_edgeless),
    "cyclepow": (2, make_cycle_power),
}


def builtin_graph(spec: str) -> Graph:
    """Build a named graph such as ``cycle:5`` or ``cyclepow:7:2``."""
    name, *args = spec.split(":")
    if name not in _BUILTINS:
        raise GraphFormatError(f"unknown built-in graph {name!r}")
    arity, ctor = _BUILTINS[name]
    if len(args) != arity:
        raise GraphFormatError(f"{name} takes {arity} integer argument(s): {spec!r}")
    try:
        return ctor(*(int(a) for a in args))
    except ValueError as exc:
        raise GraphFormatError(f"{spec!r}: {exc}") from None


def is_builtin_spec(spec: str) -> bool:
    return spec.split(":")[0] in _BUILTINS and ":" in spec


def load_graph(spec: str) -> Graph:
    """Load a graph from a built-in name or an edge-list file path."""
    if is_builtin_spec(spec):
        return builtin_graph(spec)
    with open(spec) as fh:
        return parse_graph(fh.read())

