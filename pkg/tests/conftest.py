import random
from itertools import combinations, product

import pytest

from bandhom.graph import Graph


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p])


def atlas_graphs(max_n):
    """All graphs on 1..max_n vertices up to isomorphism."""
    import networkx as nx
    out = []
    for nxg in nx.graph_atlas_g():
        if 1 <= nxg.number_of_nodes() <= max_n:
            out.append(Graph(nxg.number_of_nodes(), [(u + 1, v + 1) for u, v in nxg.edges()]))
    return out


def all_graphs(n):
    """Every labelled graph on n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield Graph(n, [e for e, b in zip(pairs, bits) if b])


def partial_hom_words(g, h, ordering, beta, k, injective=False):
    """Encode every partial homomorphism into the first k vertices of the ordering.

    With ``injective`` the mapped vertices sharing an image must be at distance >= 3.
    """
    prefix = ordering[:k]
    close = [(u, v) for u in g.vertices() for v, d in g.distances_from(u).items() if u < v and d == 2]
    words = set()
    for images in product(range(k + 1), repeat=g.n):  # 0 = unmapped, j = ordering[j-1]
        if any(images[u - 1] and images[v - 1]
               and not h.adjacent(prefix[images[u - 1] - 1], prefix[images[v - 1] - 1])
               for u, v in g.edges()):
            continue
        if injective and any(images[u - 1] and images[u - 1] == images[v - 1] for u, v in close):
            continue
        word = []
        for l in images:
            if l == 0:
                word.append(0)
            elif l <= k - beta + 1:
                word.append(1)
            else:
                word.append(l - k + beta)
        words.add(tuple(word))
    return words


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
