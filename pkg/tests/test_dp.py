import random

import pytest

from bandhom.dp import (
    HOM,
    LIHOM,
    ZERO_BAR,
    SolveOptions,
    SolverContext,
    bar,
    bar_set,
    encode_barred,
    make_context,
    oplus_sets,
    oplus_symbol,
    reconstruct_witness,
    solve,
    solve_hom,
    solve_lihom,
)
from bandhom.graph import Graph, complement, make_complete, make_cycle, make_path
from bandhom.oracle import brute_hom, brute_lihom, check_hom, check_lihom
from bandhom.ordering import stretch
from bandhom.packing import enum_independent_sets
from bandhom.trie import VectorSet

from conftest import partial_hom_words, random_graph

EDGE = Graph(2, [(1, 2)])


def context(g, h, beta, ordering=None, mode=HOM):
    ordering = ordering or tuple(h.vertices())
    return SolverContext(g, h, tuple(ordering), beta, enum_independent_sets(g), mode)


@pytest.mark.parametrize("x, y, beta, expected", [
    (ZERO_BAR, 0, 3, 0),
    (5, 0, 5, 4),
    (5, 0, 6, 4),
    (ZERO_BAR, 1, 3, None),
    (0, 1, 4, 4),
    (0, 0, 2, 0),
    (1, 0, 1, 1),
    (2, 0, 2, 1),
    (1, 1, 3, None),
    (3, 1, 3, None),
])
def test_oplus_symbol(x, y, beta, expected):
    assert oplus_symbol(x, y, beta) == expected


def test_bar_initial_stage():
    ctx = make_context(make_cycle(4), make_path(3))
    assert bar((0, 0, 0, 0), 0, ctx) == (0, 0, 0, 0)


def test_bar_adjacent_target_leaves_zero():
    # window wider than needed is still sound; beta = 2 mirrors the hand example
    ctx = context(EDGE, make_path(2), beta=2)
    assert bar((0, 2), 1, ctx) == (0, 2)
    # with the minimal window the same state reads (0, 1)
    ctx1 = make_context(EDGE, make_path(2), ordering=(1, 2))
    assert ctx1.beta == 1
    assert bar((0, 1), 1, ctx1) == (0, 1)


def test_bar_blocked_target():
    h = Graph(2)
    ctx = make_context(EDGE, h, ordering=(1, 2))
    assert ctx.beta == 2
    assert bar((0, 2), 1, ctx) == (ZERO_BAR, 2)
    assert brute_hom(EDGE, h) is None


def test_bar_rejects_symbol_before_h1():
    ctx = make_context(EDGE, Graph(2), ordering=(1, 2))
    with pytest.raises(AssertionError):
        bar((2, 0), 0, ctx)


def test_oplus_sets_examples():
    a = encode_barred([(ZERO_BAR, 2)], 2)
    b = VectorSet.from_words([(0, 0), (1, 0)], 2, 2)
    assert set(oplus_sets(a, b, 2)) == {(0, 1)}
    zero = VectorSet.from_words([(0, 0, 0)], 3, 2)
    assert set(oplus_sets(encode_barred([(0, 0, 0)], 1), zero, 1)) == {(0, 0, 0)}
    assert not oplus_sets(VectorSet(3, 3), zero, 1)
    with pytest.raises(ValueError):
        oplus_sets(encode_barred([(0, 0)], 1), zero, 1)


def test_oplus_sets_matches_pairwise_definition():
    rng = random.Random(17)
    for _ in range(200):
        beta = rng.randint(1, 4)
        n = rng.randint(0, 4)
        syms = list(range(beta + 1)) + [ZERO_BAR]
        aw = [tuple(rng.choice(syms) for _ in range(n)) for _ in range(rng.randint(0, 6))]
        bw = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(rng.randint(0, 6))]
        expected = set()
        for a in aw:
            for b in bw:
                w = tuple(oplus_symbol(x, y, beta) for x, y in zip(a, b))
                if None not in w:
                    expected.add(w)
        a_set = encode_barred(aw, beta) if aw else VectorSet(n, beta + 2)
        got = oplus_sets(a_set, VectorSet.from_words(bw, n, 2), beta)
        assert set(got) == expected


@pytest.mark.parametrize("g, h, mode, expected", [
    (make_cycle(3), make_cycle(5), HOM, False),
    (make_cycle(5), make_complete(3), HOM, True),
    (Graph(4), Graph(1), HOM, True),
    (Graph(4, [(1, 2), (1, 3), (1, 4)]), make_cycle(3), LIHOM, False),
    (Graph(0), Graph(0), HOM, True),
    (Graph(2), Graph(0), HOM, False),
    (EDGE, Graph(3), HOM, False),
])
def test_solve_examples(g, h, mode, expected):
    assert solve(make_context(g, h, mode)).answer is expected


def test_witness_examples():
    r = solve_hom(Graph(1), Graph(1), SolveOptions(witness=True))
    assert r.witness == (1,)
    c5 = make_cycle(5)
    r = solve_hom(c5, c5, SolveOptions(witness=True))
    assert check_hom(c5, c5, r.witness)
    c4 = make_cycle(4)
    r = solve_lihom(c4, c4, SolveOptions(witness=True))
    assert check_lihom(c4, c4, r.witness)


def test_reconstruct_needs_all_stages():
    ctx = make_context(make_cycle(5), make_complete(3))
    r = solve(ctx, keep_stages=True)
    assert check_hom(ctx.g, ctx.h, reconstruct_witness(ctx, r.stages))
    with pytest.raises(ValueError):
        reconstruct_witness(ctx, r.stages[:-1])


def test_stage_invariants_random():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        h = random_graph(rng.randint(1, 6), rng.random(), rng)
        for mode in (HOM, LIHOM):
            ctx = make_context(g, h, mode)
            assert ctx.beta == stretch(complement(h), ctx.ordering) + 1
            r = solve(ctx, keep_stages=True)
            assert r.bar_sizes == r.stage_sizes[:len(r.bar_sizes)]
            assert all(s <= (ctx.beta + 1) ** g.n for s in r.stage_sizes)
            last = r.stages[-1]
            assert r.answer == any(0 not in w for w in last)


def test_stage_sets_are_partial_hom_encodings():
    rng = random.Random(29)
    for _ in range(15):
        g = random_graph(rng.randint(1, 4), rng.random(), rng)
        h = random_graph(rng.randint(1, 5), rng.random(), rng)
        for mode in (HOM, LIHOM):
            ctx = make_context(g, h, mode)
            r = solve(ctx, keep_stages=True)
            for k, t in enumerate(r.stages):
                assert set(t) == partial_hom_words(g, h, ctx.ordering, ctx.beta, k, mode == LIHOM)


def test_agrees_with_oracle_small_random():
    rng = random.Random(31)
    for _ in range(150):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        h = random_graph(rng.randint(1, 6), rng.random(), rng)
        for solver, oracle, check in ((solve_hom, brute_hom, check_hom),
                                      (solve_lihom, brute_lihom, check_lihom)):
            r = solver(g, h, SolveOptions(witness=True))
            assert r.answer == (oracle(g, h) is not None)
            if r.answer:
                assert check(g, h, r.witness)


def test_ordering_override_keeps_answer():
    rng = random.Random(37)
    for _ in range(40):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        h = random_graph(rng.randint(1, 6), rng.random(), rng)
        perm = list(h.vertices())
        rng.shuffle(perm)
        base = solve_hom(g, h)
        other = solve_hom(g, h, SolveOptions(ordering=perm))
        assert other.ordering_source == "user"
        assert other.beta == stretch(complement(h), perm) + 1
        assert base.answer == other.answer
        heur = solve_lihom(g, h, SolveOptions(heuristic=True))
        assert heur.ordering_source == "heuristic"
        assert heur.answer == solve_lihom(g, h).answer


def test_complete_target_uses_unit_window():
    ctx = make_context(make_cycle(5), make_complete(3))
    assert ctx.beta == 1


def test_bar_set_preserves_size():
    ctx = make_context(make_cycle(5), make_cycle(5))
    r = solve(ctx, keep_stages=True)
    for k in range(ctx.m):
        assert len(bar_set(r.stages[k], k, ctx)) == len(r.stages[k])


def test_bad_mode():
    with pytest.raises(ValueError):
        make_context(EDGE, EDGE, mode="surjective")
