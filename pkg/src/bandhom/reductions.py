"""Labeling and coloring problems phrased as (locally injective) homomorphism instances."""

from __future__ import annotations

from dataclasses import dataclass

from .dp import SolveOptions, SolveResult, solve_hom, solve_lihom
from .graph import Graph, complement, make_cycle, make_path
from .ordering import cycle_power_ordering


class InfeasibleInRange(RuntimeError):
    """No labeling was found among the cycle sizes searched."""

    def __init__(self, lo: int, hi: int):
        super().__init__(f"no circular labeling with cycle size in {lo}..{hi}")
        self.lo, self.hi = lo, hi


@dataclass
class SpanResult:
    span: int
    target_size: int  # vertices of the path or cycle realising the span
    witness: tuple[int, ...] | None = None
    result: SolveResult | None = None  # the solve that succeeded


def _options(options: SolveOptions | None, **overrides) -> SolveOptions:
    base = options or SolveOptions()
    return SolveOptions(**{**base.__dict__, **overrides})


def mk_coloring_target(m: int, k: int) -> Graph:
    """Colours ``0..m-1`` as vertices ``1..m``, joined when ``k <= |i - j| <= m - k``.

    For ``m >= 3`` this is the complement of ``C_m^(k-1)``.
    """
    return Graph(m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)
                     if k <= j - i <= m - k])


def solve_mk_coloring(g: Graph, m: int, k: int,
                      options: SolveOptions | None = None) -> SolveResult:
    """(m,k)-coloring via homomorphism to the complement of a cycle power.

    The zigzag layout of the cycle is supplied so the window is ``2(k-1) + 1``.
    Witness colours are reported as ``0..m-1``.
    """
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    opts = options
    if opts is None or opts.ordering is None:
        perm = cycle_power_ordering(m, k) if m >= 3 else tuple(range(1, m + 1))
        opts = _options(options, ordering=perm)
    result = solve_hom(g, mk_coloring_target(m, k), opts)
    if result.witness is not None:
        result.witness = tuple(x - 1 for x in result.witness)
    return result


def solve_h21(g: Graph, h: Graph, options: SolveOptions | None = None) -> SolveResult:
    """H(2,1)-labeling as a locally injective homomorphism into H's complement."""
    return solve_lihom(g, complement(h), options)


def l21_span(g: Graph, options: SolveOptions | None = None) -> SpanResult:
    """Least k such that G has an L(2,1)-labeling with labels 0..k (path on k+1 vertices)."""
    if g.n == 0:
        return SpanResult(0, 1, () if options and options.witness else None)
    delta = g.max_degree()
    limit = delta * delta + delta
    k = 0
    while True:
        result = solve_h21(g, make_path(k + 1), options)
        if result.answer:
            witness = None if result.witness is None else tuple(x - 1 for x in result.witness)
            return SpanResult(k, k + 1, witness, result)
        if k >= limit:
            raise AssertionError(f"no L(2,1)-labeling with span <= {limit}")
        k += 1


def circular_l21_span(g: Graph, options: SolveOptions | None = None) -> SpanResult:
    """Least k >= 2 such that G has a C_{k+1}(2,1)-labeling, scanning cycles of size 3..2n.

    A single vertex still gets the triangle, so the scan always covers size 3.
    """
    if g.n == 0:
        raise ValueError("circular span needs a nonempty graph")
    lo, hi = 3, max(3, 2 * g.n)
    for size in range(lo, hi + 1):
        result = solve_h21(g, make_cycle(size), options)
        if result.answer:
            witness = None if result.witness is None else tuple(x - 1 for x in result.witness)
            return SpanResult(size - 1, size, witness, result)
    raise InfeasibleInRange(lo, hi)
