import pytest
from hypothesis import given, strategies as st

from bandhom.graph import (
    Graph,
    GraphFormatError,
    builtin_graph,
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


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_parse_triangle():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == make_complete(3)


def test_parse_isolated_and_comments():
    g = parse_graph("c two isolated vertices\np edge 2 0\n")
    assert g.n == 2 and g.num_edges == 0


def test_parse_duplicates_collapse():
    g = parse_graph("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.edges() == ((1, 2),)


@pytest.mark.parametrize("text, where", [
    ("p edge 3 1\ne 1 1\n", "line 2"),
    ("p edge 3 1\ne 1 4\n", "line 2"),
    ("p edge 3 1\ne 1\n", "line 2"),
    ("p edge 3 1\nx 1 2\n", "line 2"),
    ("e 1 2\n", "line 1"),
    ("p edge 3 1\ne a 2\n", "line 2"),
    ("p edge 2 0\np edge 2 0\n", "line 2"),
])
def test_parse_errors_name_the_line(text, where):
    with pytest.raises(GraphFormatError, match=where):
        parse_graph(text)


def test_parse_missing_problem_line():
    with pytest.raises(GraphFormatError):
        parse_graph("c nothing here\n")


def test_graph_rejects_loops():
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])


def test_complement_of_complete_is_edgeless():
    assert complement(make_complete(3)) == Graph(3)


def test_complement_of_p4_is_p4():
    c = complement(make_path(4))
    assert set(c.edges()) == {(1, 3), (1, 4), (2, 4)}
    assert c.relabel((2, 4, 1, 3)) == make_path(4)


def test_power():
    assert power(make_cycle(5), 0) == Graph(5)
    assert power(make_cycle(5), 2) == make_complete(5)
    assert set(power(make_path(4), 2).edges()) == {(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)}


def test_power_ignores_disconnected_pairs():
    g = Graph(4, [(1, 2), (3, 4)])
    assert power(g, 10) == g


def test_constructors():
    assert make_cycle(3) == make_complete(3)
    assert make_path(1) == Graph(1)
    assert make_complete(4).num_edges == 6
    with pytest.raises(ValueError):
        make_cycle(2)


def test_builtins():
    assert builtin_graph("cycle:5") == make_cycle(5)
    assert load_graph("cyclepow:7:2") == make_cycle_power(7, 2)
    assert load_graph("path:3") == make_path(3)
    with pytest.raises(GraphFormatError):
        builtin_graph("cycle:2")
    with pytest.raises(GraphFormatError):
        builtin_graph("wheel:5")


def test_load_from_file(tmp_path):
    f = tmp_path / "g.col"
    f.write_text("c demo\np edge 3 2\ne 1 2\ne 2 3\n")
    assert load_graph(str(f)) == make_path(3)


@given(graphs())
def test_graph_invariants(g):
    for u in g.vertices():
        assert not g.adjacent(u, u)
        for v in g.vertices():
            assert g.adjacent(u, v) == g.adjacent(v, u)
            assert g.adjacent(u, v) == (v in g.neighbors(u))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_render_round_trip(g):
    assert parse_graph(render_graph(g)) == g


@given(graphs())
def test_high_power_completes_components(g):
    big = power(g, max(g.n, 1))
    for u in g.vertices():
        comp = set(g.distances_from(u)) - {u}
        assert big.neighbors(u) == comp
