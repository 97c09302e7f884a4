"""Finite posets given by cover relations.

Elements keep the order in which their labels were supplied; every
deterministic output (basis order, chains, extremes) follows it.
"""

from __future__ import annotations

import itertools
import warnings
from functools import cached_property

from .errors import (
    CycleDetected,
    DuplicateLabel,
    NotComparable,
    SizeTooLarge,
    UnknownLabel,
)

MAX_ENUMERATION_SIZE = 6


class Poset:
    """Immutable finite poset on ``labels``.

    ``leq[i][j]`` is true iff ``labels[i] <= labels[j]``.  Most queries have a
    label-based form (``is_leq``, ``interval_length``) and work on indices
    internally.
    """

    __slots__ = ("labels", "index", "leq", "__dict__")

    def __init__(self, labels, leq):
        labels = tuple(labels)
        index = {}
        for i, a in enumerate(labels):
            if a in index:
                raise DuplicateLabel(a)
            index[a] = i
        n = len(labels)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("leq must be an n x n table")
        for i in range(n):
            if not leq[i][i]:
                raise ValueError(f"leq is not reflexive at {labels[i]!r}")
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise CycleDetected(f"{labels[i]!r} and {labels[j]!r} lie on a cycle")
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            raise ValueError("leq is not transitive")
        self.labels = labels
        self.index = index
        self.leq = leq

    @classmethod
    def from_cover_relations(cls, labels, covers) -> Poset:
        """Build the poset whose order is the reflexive-transitive closure of ``covers``."""
        labels = list(labels)
        index = {}
        for i, a in enumerate(labels):
            if a in index:
                raise DuplicateLabel(a)
            index[a] = i
        n = len(labels)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for x, y in covers:
            for a in (x, y):
                if a not in index:
                    raise UnknownLabel(a)
            if x == y:
                raise CycleDetected(f"{x!r} < {x!r}")
            leq[index[x]][index[y]] = True
        return cls(labels, transitive_closure(leq))

    @classmethod
    def chain(cls, n: int, start: int = 1) -> Poset:
        labels = list(range(start, start + n))
        return cls.from_cover_relations(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, n: int, start: int = 1) -> Poset:
        return cls.from_cover_relations(range(start, start + n), [])

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.labels == other.labels and self.leq == other.leq

    def __hash__(self):
        return hash((self.labels, self.leq))

    def __repr__(self):
        covers = ", ".join(f"{x!r}<{y!r}" for x, y in self.covers)
        return f"Poset({list(self.labels)!r}; {covers})"

    def __reduce__(self):
        return (Poset, (self.labels, self.leq))

    def is_leq(self, x, y) -> bool:
        return self.leq[self._idx(x)][self._idx(y)]

    def is_less(self, x, y) -> bool:
        return x != y and self.is_leq(x, y)

    def _idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownLabel(x) from None

    # cached structure (index based)

    @cached_property
    def cover_indices(self) -> tuple:
        n = len(self)
        leq = self.leq
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and leq[i][j] and not any(
                    k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)
                ):
                    out.append((i, j))
        return tuple(out)

    @property
    def covers(self) -> list:
        return [(self.labels[i], self.labels[j]) for i, j in self.cover_indices]

    @cached_property
    def min_indices(self) -> tuple:
        n = len(self)
        return tuple(j for j in range(n) if not any(i != j and self.leq[i][j] for i in range(n)))

    @cached_property
    def max_indices(self) -> tuple:
        n = len(self)
        return tuple(i for i in range(n) if not any(i != j and self.leq[i][j] for j in range(n)))

    @cached_property
    def length_table(self) -> dict:
        """``{(i, j): l(i, j)}`` for every ``i <= j``."""
        n = len(self)
        leq = self.leq
        # a linear extension: sort by number of elements below
        order = sorted(range(n), key=lambda k: sum(leq[m][k] for m in range(n)))
        table = {}
        for i in range(n):
            longest = {i: 0}
            for k in order:
                if k == i or not leq[i][k]:
                    continue
                longest[k] = 1 + max(longest[j] for j in longest if leq[j][k] and j != k)
            for k, v in longest.items():
                table[(i, k)] = v
        return table

    @cached_property
    def length(self) -> int:
        """l(X): length of the longest chain."""
        return max(self.length_table.values(), default=0)

    def interval_length(self, x, y) -> int:
        i, j = self._idx(x), self._idx(y)
        if not self.leq[i][j]:
            raise NotComparable(f"{x!r} is not <= {y!r}")
        return self.length_table[(i, j)]

    def extremes(self) -> tuple[list, list]:
        """(minimal elements, maximal elements), in label order."""
        return [self.labels[i] for i in self.min_indices], [self.labels[i] for i in self.max_indices]

    def is_connected(self) -> bool:
        n = len(self)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and (self.leq[i][j] or self.leq[j][i]):
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def maximal_chains(self) -> list[list]:
        """All maximal chains, sorted lexicographically by element position."""
        ups = {i: [] for i in range(len(self))}
        for i, j in self.cover_indices:
            ups[i].append(j)
        chains = []

        def walk(path):
            nxt = ups[path[-1]]
            if not nxt:
                chains.append(list(path))
                return
            for j in nxt:
                walk(path + [j])

        for m in self.min_indices:
            walk([m])
        chains.sort()
        return [[self.labels[i] for i in c] for c in chains]

    @cached_property
    def anti_automorphisms(self) -> tuple:
        """Order-reversing bijections as index tuples ``t`` (i <= j iff t[j] <= t[i])."""
        n = len(self)
        leq = self.leq
        out = []
        for t in itertools.permutations(range(n)):
            if all(leq[i][j] == leq[t[j]][t[i]] for i in range(n) for j in range(n)):
                out.append(t)
        return tuple(out)

    def relabel(self, labels) -> Poset:
        """Same order, new labels (position-wise)."""
        return Poset(labels, self.leq)


def transitive_closure(leq):
    """Warshall closure of a square boolean table (returned as lists)."""
    n = len(leq)
    out = [list(row) for row in leq]
    for k in range(n):
        rk = out[k]
        for i in range(n):
            if out[i][k]:
                ri = out[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return out


# isomorphism classes of small connected posets


def _encoding(n, rel, perm):
    # rel: set of strict pairs; perm maps old index -> new index
    bits = 0
    for i, j in rel:
        a, b = perm[i], perm[j]
        if a > b:
            return None  # not a natural labelling
        bits |= 1 << (a * n + b)
    return bits


def canonical_encoding(p: Poset) -> int:
    """Minimal strict-relation bit encoding over all natural relabellings."""
    n = len(p)
    rel = [(i, j) for i in range(n) for j in range(n) if i != j and p.leq[i][j]]
    best = None
    for perm in itertools.permutations(range(n)):
        code = _encoding(n, rel, perm)
        if code is not None and (best is None or code < best):
            best = code
    return best


def poset_from_encoding(n: int, code: int, start: int = 1) -> Poset:
    leq = [[i == j or bool(code >> (i * n + j) & 1) for j in range(n)] for i in range(n)]
    return Poset(range(start, start + n), leq)


def poset_id(p: Poset) -> str:
    """Stable identifier of the isomorphism class."""
    return f"P{len(p)}-{canonical_encoding(p):x}"


def are_isomorphic(p: Poset, q: Poset) -> bool:
    return len(p) == len(q) and canonical_encoding(p) == canonical_encoding(q)


def enumerate_connected_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class of connected posets on n points.

    Representatives carry labels ``1..n`` and are naturally labelled
    (``i < j`` implies label ``i`` precedes label ``j``); the list is sorted
    by canonical encoding.
    """
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise SizeTooLarge(f"n={n} outside 1..{MAX_ENUMERATION_SIZE}")
    if n == MAX_ENUMERATION_SIZE:
        warnings.warn("enumerating posets of size 6 takes a while", RuntimeWarning, stacklevel=2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    codes = set()
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        # transitively closed?
        if any((i, k) not in rel for (i, j) in rel for (jj, k) in rel if j == jj):
            continue
        leq = [[i == j or (i, j) in rel for j in range(n)] for i in range(n)]
        p = Poset(range(n), leq)
        if not p.is_connected():
            continue
        codes.add(canonical_encoding(p))
    return [poset_from_encoding(n, c) for c in sorted(codes)]
