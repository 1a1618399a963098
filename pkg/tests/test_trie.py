from hypothesis import given, strategies as st

from bandhom.trie import VectorSet

words3 = st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=30)


@given(words3)
def test_membership_agrees_with_enumeration(ws):
    vs = VectorSet.from_words(ws, 3, 4)
    assert set(vs) == set(ws)
    assert len(vs) == len(set(ws))
    assert list(vs) == sorted(set(ws))
    for w in {(a, b, c) for a in range(4) for b in range(4) for c in range(4)}:
        assert (w in vs) == (w in set(ws))


@given(words3, st.integers(0, 3))
def test_branch_is_suffix_set(ws, x):
    vs = VectorSet.from_words(ws, 3, 4)
    assert set(vs.branch(x)) == {w[1:] for w in ws if w[0] == x}


@given(words3, words3)
def test_union(a, b):
    u = VectorSet.from_words(a, 3, 4).union(VectorSet.from_words(b, 3, 4))
    assert set(u) == set(a) | set(b)
    assert len(u) == len(set(a) | set(b))


def test_empty_and_zero_length():
    assert not VectorSet(3, 2)
    assert len(VectorSet(3, 2)) == 0
    eps = VectorSet.from_words([()], 0, 2)
    assert list(eps) == [()] and len(eps) == 1 and () in eps
    assert not VectorSet.from_words([], 0, 2)


def test_node_count_shares_subtries():
    a = VectorSet.from_words([(0, 0), (0, 1)], 2, 2)
    b = VectorSet.from_words([(1, 0)], 2, 2)
    u = a.union(b)
    assert u.node_count() == 3  # root plus the two second-level nodes
