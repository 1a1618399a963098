"""Sets of equal-length words stored as fixed-depth tries.

A node at depth ``d < length`` is a list of ``alphabet`` children indexed by
symbol; an absent child is ``None``.  Every node at depth ``length`` is the
shared ``LEAF`` marker.  The empty set is the ``None`` root, and subtries with
no words are always pruned to ``None`` so that emptiness is a root check.

Nodes are never mutated after a set is built, which lets unions share
untouched subtries between operands and results.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

LEAF = True


def union_nodes(x, y, rem: int):
    """Union of two subtries with ``rem`` symbols left to read."""
    if x is None:
        return y
    if y is None or x is y:
        return x
    if rem == 0:
        return LEAF
    r = rem - 1
    return [union_nodes(a, b, r) for a, b in zip(x, y)]


def count_words(node, rem: int) -> int:
    if node is None:
        return 0
    if rem == 0:
        return 1
    r = rem - 1
    return sum(count_words(c, r) for c in node if c is not None)


def count_nodes(node) -> int:
    """Number of distinct internal nodes (shared subtries counted once)."""
    seen: set[int] = set()
    stack = [node]
    while stack:
        x = stack.pop()
        if x is None or x is LEAF or id(x) in seen:
            continue
        seen.add(id(x))
        stack.extend(x)
    return len(seen)


def iter_words(node, length: int) -> Iterator[tuple[int, ...]]:
    """Words of a subtrie in lexicographic order."""
    if node is None:
        return
    if length == 0:
        yield ()
        return
    prefix: list[int] = []
    stack = [iter(enumerate(node))]
    while stack:
        for sym, child in stack[-1]:
            if child is None:
                continue
            if len(prefix) + 1 == length:
                yield (*prefix, sym)
                continue
            prefix.append(sym)
            stack.append(iter(enumerate(child)))
            break
        else:
            stack.pop()
            if prefix:
                prefix.pop()


def build_trie(words: Iterable[Sequence[int]], length: int, alphabet: int):
    """Trie root holding ``words`` (duplicates collapse)."""
    if length == 0:
        return LEAF if any(True for _ in words) else None
    root = None
    last = length - 1
    for w in words:
        if root is None:
            root = [None] * alphabet
        node = root
        for i in range(last):
            child = node[w[i]]
            if child is None:
                child = node[w[i]] = [None] * alphabet
            node = child
        node[w[last]] = LEAF
    return root


class VectorSet:
    """An immutable set of words of a fixed length over ``range(alphabet)``."""

    __slots__ = ("length", "alphabet", "root")

    def __init__(self, length: int, alphabet: int, root=None):
        self.length = length
        self.alphabet = alphabet
        self.root = root

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], length: int, alphabet: int) -> VectorSet:
        words = list(words)
        for w in words:
            if len(w) != length:
                raise ValueError(f"word {tuple(w)} does not have length {length}")
            if any(not 0 <= s < alphabet for s in w):
                raise ValueError(f"word {tuple(w)} uses a symbol outside 0..{alphabet - 1}")
        return cls(length, alphabet, build_trie(words, length, alphabet))

    def branch(self, symbol: int) -> VectorSet:
        """Suffixes of the members starting with ``symbol``."""
        if self.length == 0:
            raise ValueError("cannot branch on the empty word")
        child = None if self.root is None else self.root[symbol]
        return VectorSet(self.length - 1, self.alphabet, child)

    def union(self, other: VectorSet) -> VectorSet:
        if (self.length, self.alphabet) != (other.length, other.alphabet):
            raise ValueError("union of sets with different word length or alphabet")
        return VectorSet(self.length, self.alphabet, union_nodes(self.root, other.root, self.length))

    def __contains__(self, word) -> bool:
        if len(word) != self.length:
            return False
        node = self.root
        for s in word:
            if node is None:
                return False
            if not 0 <= s < self.alphabet:
                return False
            node = node[s]
        return node is not None

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter_words(self.root, self.length)

    def __len__(self) -> int:
        return count_words(self.root, self.length)

    def __bool__(self) -> bool:
        return self.root is not None

    def node_count(self) -> int:
        return count_nodes(self.root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorSet):
            return NotImplemented
        return self.length == other.length and set(self) == set(other)

    def __repr__(self) -> str:
        return f"VectorSet(length={self.length}, alphabet={self.alphabet}, size={len(self)})"
