"""Exact graph homomorphism and locally injective homomorphism solver.

The running time is exponential in the number of vertices of G with base
``bw(complement(H)) + 2``.
"""

from .dp import (
    ZERO_BAR,
    SolveOptions,
    SolveResult,
    SolverContext,
    bar,
    make_context,
    oplus_sets,
    oplus_symbol,
    reconstruct_witness,
    solve,
    solve_hom,
    solve_lihom,
)
from .graph import (
    Graph,
    GraphFormatError,
    complement,
    load_graph,
    make_complete,
    make_cycle,
    make_cycle_power,
    make_path,
    parse_graph,
    power,
    render_graph,
)
from .oracle import brute_hom, brute_lihom, check_h21, check_hom, check_lihom
from .ordering import (
    BandwidthCertificate,
    cycle_power_ordering,
    exact_bandwidth,
    heuristic_bandwidth,
    stretch,
)
from .packing import enum_2_independent_sets, enum_independent_sets
from .reductions import circular_l21_span, l21_span, solve_h21, solve_mk_coloring
from .trie import VectorSet

__version__ = "0.1.0"
