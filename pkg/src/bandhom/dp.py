"""Windowed dynamic programme deciding (locally injective) homomorphisms G -> H.

The vertices of H are processed in an order ``h_1, ..., h_m`` in which every
non-edge of H joins vertices at most ``beta - 1`` positions apart.  After
stage ``k`` the set ``T[k]`` holds one word per class of partial
homomorphisms into ``H[h_1..h_k]``; coordinate ``i`` of a word describes
vertex ``v_i`` of G:

* ``0``: unmapped;
* ``1``: mapped to some ``h_l`` with ``l <= k - beta + 1``.  Such targets are
  adjacent to every later vertex of H, so they never need to be told apart;
* ``x`` in ``2..beta``: mapped to ``h_{k - beta + x}``.

Stage ``k + 1`` marks the unmapped vertices that cannot go to ``h_{k+1}``
(the *barred* zero), then combines each marked word with every packing
vector, i.e. every set of vertices allowed to share the image ``h_{k+1}``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, complement
from .ordering import (
    DEFAULT_EXACT_THRESHOLD,
    Ordering,
    exact_bandwidth,
    heuristic_bandwidth,
    stretch,
    validate_ordering,
)
from .packing import enum_2_independent_sets, enum_independent_sets
from .trie import LEAF, VectorSet, build_trie, iter_words, union_nodes

HOM = "hom"
LIHOM = "lihom"
MODES = (HOM, LIHOM)


class _BarredZero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO_BAR"


#: The barred zero: unmapped, and blocked from the next vertex of H.
ZERO_BAR = _BarredZero()

_OK, _BLOCKED, _INVALID = 0, 1, 2


@dataclass(frozen=True)
class SolverContext:
    g: Graph
    h: Graph
    ordering: Ordering
    beta: int
    p_family: VectorSet
    mode: str = HOM
    ordering_source: str = "user"

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return self.h.n

    @property
    def zero_bar(self) -> int:
        """Trie code of the barred zero."""
        return self.beta + 1


def choose_ordering(h: Graph, heuristic: bool = False,
                    exact_threshold: int = DEFAULT_EXACT_THRESHOLD) -> tuple[Ordering, str]:
    """Ordering of H minimising the stretch of H's complement, and how it was found."""
    hbar = complement(h)
    if heuristic or h.n > exact_threshold:
        return heuristic_bandwidth(hbar).ordering, "heuristic"
    return exact_bandwidth(hbar, exact_threshold).ordering, "exact"


def make_context(g: Graph, h: Graph, mode: str = HOM, ordering: Sequence[int] | None = None,
                 heuristic: bool = False,
                 exact_threshold: int = DEFAULT_EXACT_THRESHOLD) -> SolverContext:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if ordering is None:
        perm, source = choose_ordering(h, heuristic, exact_threshold)
    else:
        perm, source = validate_ordering(h, ordering), "user"
    beta = stretch(complement(h), perm) + 1
    packings = enum_independent_sets(g) if mode == HOM else enum_2_independent_sets(g)
    return SolverContext(g, h, perm, beta, packings, mode, source)


# -- symbol level -----------------------------------------------------------

def oplus_symbol(x, y: int, beta: int) -> int | None:
    """Combine a (possibly barred) state symbol with a packing bit; None if undefined."""
    if y == 0:
        if x == 0 or x is ZERO_BAR:
            return 0
        if x in (1, 2):
            return 1
        if 3 <= x <= beta:
            return x - 1
        return None
    if y == 1 and x == 0:
        return beta
    return None


# -- bar operation ------------------------------------------------------------

class _Layout:
    """Per-context tables shared by the bar computations of all stages."""

    def __init__(self, ctx: SolverContext):
        self.ctx = ctx
        h, perm = ctx.h, ctx.ordering
        # g_nbrs[i]: 0-based coordinates adjacent to coordinate i
        self.g_nbrs = [tuple(w - 1 for w in sorted(ctx.g.neighbors(v))) for v in ctx.g.vertices()]
        self.h_adj = [[False] * (ctx.m + 1) for _ in range(ctx.m + 1)]
        for i, u in enumerate(perm, start=1):
            for j, v in enumerate(perm, start=1):
                self.h_adj[i][j] = h.adjacent(u, v)

    def status(self, k: int) -> list[int]:
        """Effect of each plain symbol on placing a neighbour at ``h_{k+1}``."""
        beta, t = self.ctx.beta, k + 1
        # old targets are adjacent to h_{k+1} because the ordering's window is beta
        for l in range(1, k - beta + 2):
            assert self.h_adj[l][t], f"h_{l} not adjacent to h_{t} outside the window"
        table = [_OK, _OK]
        for s in range(2, beta + 1):
            l = k - beta + s
            if l < 1:
                table.append(_INVALID)
            elif not self.h_adj[l][t]:
                table.append(_BLOCKED)
            else:
                table.append(_OK)
        return table

    def bar_word(self, a: Sequence[int], status: list[int]) -> tuple[int, ...]:
        out = None
        zb = self.ctx.zero_bar
        nbrs = self.g_nbrs
        for j, s in enumerate(a):
            st = status[s]
            if st:
                if st == _INVALID:
                    raise AssertionError(f"symbol {s} refers to a vertex before h_1 in {tuple(a)}")
                for i in nbrs[j]:
                    if a[i] == 0:
                        if out is None:
                            out = list(a)
                        out[i] = zb
        return tuple(a) if out is None else tuple(out)


def bar(a: Sequence[int], k: int, ctx: SolverContext) -> tuple:
    """Mark with ``ZERO_BAR`` each unmapped vertex that cannot be sent to ``h_{k+1}``."""
    if not 0 <= k < ctx.m:
        raise ValueError(f"stage {k} outside 0..{ctx.m - 1}")
    layout = _Layout(ctx)
    w = layout.bar_word(a, layout.status(k))
    return tuple(ZERO_BAR if s == ctx.zero_bar else s for s in w)


def bar_set(t: VectorSet, k: int, ctx: SolverContext, layout: _Layout | None = None) -> VectorSet:
    """The barred image of a stage set; alphabet ``0..beta`` plus the barred zero."""
    layout = layout or _Layout(ctx)
    status = layout.status(k)
    words = (layout.bar_word(a, status) for a in iter_words(t.root, t.length))
    return VectorSet(t.length, ctx.beta + 2, build_trie(words, t.length, ctx.beta + 2))


# -- oplus on sets ------------------------------------------------------------

def _oplus_nodes(a, b, rem: int, beta: int):
    if a is None or b is None:
        return None
    if rem == 0:
        return LEAF
    r = rem - 1
    b0, b1 = b
    out = [None] * (beta + 1)
    empty = True
    if b0 is not None:
        # 0 and barred 0 both stay 0
        c = _oplus_nodes(union_nodes(a[0], a[beta + 1], r), b0, r, beta)
        if c is not None:
            out[0] = c
            empty = False
        # 1 and 2 merge into the old class
        c = _oplus_nodes(union_nodes(a[1], a[2], r) if beta >= 2 else a[1], b0, r, beta)
        if c is not None:
            out[1] = c
            empty = False
        # the window slides by one
        for x in range(2, beta):
            c = _oplus_nodes(a[x + 1], b0, r, beta)
            if c is not None:
                out[x] = c
                empty = False
    if b1 is not None and a[0] is not None:
        # fresh placement at h_{k+1}; only an unbarred 0 may take it
        c = _oplus_nodes(a[0], b1, r, beta)
        if c is not None:
            out[beta] = c if out[beta] is None else union_nodes(out[beta], c, r)
            empty = False
    return None if empty else out


def oplus_sets(a: VectorSet, b: VectorSet, beta: int) -> VectorSet:
    """All defined coordinate-wise combinations of a barred word of ``a`` and a bit word of ``b``."""
    if a.length != b.length:
        raise ValueError(f"word lengths differ: {a.length} vs {b.length}")
    if a.alphabet != beta + 2 or b.alphabet != 2:
        raise ValueError("oplus_sets expects a barred set over beta+2 symbols and a bit set")
    return VectorSet(a.length, beta + 1, _oplus_nodes(a.root, b.root, a.length, beta))


def encode_barred(words, beta: int) -> VectorSet:
    """Barred words written with ``ZERO_BAR`` as a trie over the barred alphabet."""
    words = [tuple(beta + 1 if s is ZERO_BAR else s for s in w) for w in words]
    length = len(words[0]) if words else 0
    return VectorSet.from_words(words, length, beta + 2)


# -- main loop ----------------------------------------------------------------

def _has_zero_free(node, rem: int) -> bool:
    if node is None:
        return False
    if rem == 0:
        return True
    return any(_has_zero_free(c, rem - 1) for c in node[1:])


def _first_zero_free(node, rem: int) -> tuple[int, ...] | None:
    if node is None:
        return None
    if rem == 0:
        return ()
    for s in range(1, len(node)):
        tail = _first_zero_free(node[s], rem - 1)
        if tail is not None:
            return (s, *tail)
    return None


@dataclass
class SolveResult:
    answer: bool
    mode: str
    beta: int
    ordering: Ordering
    ordering_source: str
    p_size: int
    stage_sizes: list[int] = field(default_factory=list)
    bar_sizes: list[int] = field(default_factory=list)
    peak_nodes: int = 0
    wall_time: float = 0.0
    witness: tuple[int, ...] | None = None
    stages: list[VectorSet] | None = None


def solve(ctx: SolverContext, keep_stages: bool = False, witness: bool = False,
          statistics: bool = True) -> SolveResult:
    """Run the stage loop; optionally keep every ``T[k]`` and rebuild a mapping."""
    start = time.perf_counter()
    n, m, beta = ctx.n, ctx.m, ctx.beta
    keep_stages = keep_stages or witness
    layout = _Layout(ctx)
    t = VectorSet(n, beta + 1, build_trie([(0,) * n], n, beta + 1))
    stages = [t] if keep_stages else None
    result = SolveResult(False, ctx.mode, beta, ctx.ordering, ctx.ordering_source,
                         p_size=len(ctx.p_family))
    if statistics:
        result.stage_sizes.append(len(t))
        result.peak_nodes = t.node_count()
    for k in range(m):
        tbar = bar_set(t, k, ctx, layout)
        t = oplus_sets(tbar, ctx.p_family, beta)
        if statistics:
            result.bar_sizes.append(len(tbar))
            result.stage_sizes.append(len(t))
            result.peak_nodes = max(result.peak_nodes, tbar.node_count(), t.node_count())
        if stages is not None:
            stages.append(t)
        if not t:
            break
    result.answer = _has_zero_free(t.root, n)
    if witness and result.answer:
        result.witness = reconstruct_witness(ctx, stages)
    result.stages = stages
    result.wall_time = time.perf_counter() - start
    return result


def reconstruct_witness(ctx: SolverContext, stages: Sequence[VectorSet]) -> tuple[int, ...]:
    """Rebuild a mapping from the retained stage sets, walking from ``T[m]`` back to ``T[0]``.

    At stage ``k`` the current word ``a`` must be ``bar(a') (+) p`` for some
    ``a'`` in ``T[k-1]`` and packing vector ``p``; the coordinates with
    ``p_i = 1`` are the vertices sent to ``h_k``.  Each coordinate of ``a``
    admits at most two preimages, so a joint depth-first walk of the two
    tries finds the pair quickly.
    """
    n, m, beta = ctx.n, ctx.m, ctx.beta
    if len(stages) != m + 1:
        raise ValueError(f"need all {m + 1} stage sets, got {len(stages)}")
    a = _first_zero_free(stages[m].root, n)
    if a is None:
        raise ValueError("final stage holds no complete mapping")
    layout = _Layout(ctx)
    image = [0] * n
    for k in range(m, 0, -1):
        status = layout.status(k - 1)
        found = _preimage(a, stages[k - 1].root, ctx.p_family.root, beta, layout, status)
        assert found is not None, f"no preimage of {a} in stage {k - 1}"
        prev, p = found
        for i, bit in enumerate(p):
            if bit:
                image[i] = ctx.ordering[k - 1]
        a = prev
    assert not any(a), "walk back did not end at the all-zero word"
    return tuple(image)


def _candidates(s: int, beta: int) -> tuple[tuple[int, int], ...]:
    """Pairs (previous symbol, packing bit) that combine to ``s``."""
    if s == 0:
        return ((0, 0),)
    if s == beta:
        return ((0, 1), (1, 0)) if beta == 1 else ((0, 1),)
    if s == 1:
        return ((1, 0), (2, 0))
    return ((s + 1, 0),)


def _preimage(a, t_root, p_root, beta, layout, status):
    n = len(a)
    prev: list[int] = []
    bits: list[int] = []

    def walk(i, tnode, pnode):
        if i == n:
            barred = layout.bar_word(prev, status)
            if all(barred[j] == 0 for j in range(n) if bits[j]):
                return tuple(prev), tuple(bits)
            return None
        for s, y in _candidates(a[i], beta):
            tc, pc = tnode[s], pnode[y]
            if tc is None or pc is None:
                continue
            prev.append(s)
            bits.append(y)
            got = walk(i + 1, tc, pc)
            if got is not None:
                return got
            prev.pop()
            bits.pop()
        return None

    return walk(0, t_root, p_root)


@dataclass
class SolveOptions:
    ordering: Sequence[int] | None = None
    witness: bool = False
    statistics: bool = True
    heuristic: bool = False
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD
    keep_stages: bool = False


def _solve_mode(g: Graph, h: Graph, mode: str, options: SolveOptions | None) -> SolveResult:
    opts = options or SolveOptions()
    ctx = make_context(g, h, mode, opts.ordering, opts.heuristic, opts.exact_threshold)
    return solve(ctx, keep_stages=opts.keep_stages, witness=opts.witness,
                 statistics=opts.statistics)


def solve_hom(g: Graph, h: Graph, options: SolveOptions | None = None) -> SolveResult:
    """Decide whether G has a homomorphism to H."""
    return _solve_mode(g, h, HOM, options)


def solve_lihom(g: Graph, h: Graph, options: SolveOptions | None = None) -> SolveResult:
    """Decide whether G has a locally injective homomorphism to H."""
    return _solve_mode(g, h, LIHOM, options)
