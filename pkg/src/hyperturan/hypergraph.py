"""3-uniform hypergraphs, simple graphs and their elementary invariants.

Vertices are the integers ``0..n-1``.  Edges are stored canonically (sorted
tuples, sorted edge list), so two objects with the same ``n`` and edge set
compare equal.  Both classes are immutable; derived indexes are computed
lazily and cached on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search runs out of its node budget."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph2:
    """Simple graph on ``range(n)``."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for e in edges:
            u, v = sorted(e)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u < 0 or v >= n:
                raise InputError(f"pair {(u, v)} out of range for n={n}")
            canon.add((u, v))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self.edge_set = frozenset(canon)

    def __eq__(self, other):
        if not isinstance(other, Graph2):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph2(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitsets."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))


class Hypergraph3:
    """3-uniform hypergraph on ``range(n)`` with canonically sorted triples."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
                raise InputError(f"edge {tuple(e)} is not a triple of distinct vertices")
            if t[0] < 0 or t[2] >= n:
                raise InputError(f"edge {t} out of range for n={n}")
            canon.add(t)
        self.n = n
        self.edges: tuple[tuple[int, int, int], ...] = tuple(sorted(canon))
        self.edge_set = frozenset(canon)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edge_set

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple((1 << a) | (1 << b) | (1 << c) for a, b, c in self.edges)

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """Per-vertex bitset over edge indices."""
        inc = [0] * self.n
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v] |= 1 << i
        return tuple(inc)

    @cached_property
    def pair_masks(self) -> tuple[tuple[int, ...], ...]:
        """``pair_masks[u][v]`` is the bitset of ``w`` with ``uvw`` an edge."""
        rows = [[0] * self.n for _ in range(self.n)]
        for a, b, c in self.edges:
            rows[a][b] |= 1 << c
            rows[b][a] |= 1 << c
            rows[a][c] |= 1 << b
            rows[c][a] |= 1 << b
            rows[b][c] |= 1 << a
            rows[c][b] |= 1 << a
        return tuple(tuple(r) for r in rows)

    @cached_property
    def shadow_adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for a, b, c in self.edges:
            adj[a] |= (1 << b) | (1 << c)
            adj[b] |= (1 << a) | (1 << c)
            adj[c] |= (1 << a) | (1 << b)
        return tuple(adj)

    def codegree(self, u: int, v: int) -> int:
        return self.pair_masks[u][v].bit_count()


def _check_vertex(H, v: int) -> None:
    if not 0 <= v < H.n:
        raise InputError(f"vertex {v} out of range for n={H.n}")


def _vertex_set(H, S) -> frozenset[int]:
    if S is None:
        return frozenset(range(H.n))
    S = frozenset(S)
    for v in S:
        _check_vertex(H, v)
    return S


def link_graph(H: Hypergraph3, v: int, S: Iterable[int] | None = None) -> Graph2:
    """Link of ``v`` restricted to pairs inside ``S`` (default: all vertices).

    The result lives on the same ``n`` vertices as ``H``; ``v`` is isolated.
    """
    _check_vertex(H, v)
    S = _vertex_set(H, S)
    pairs = []
    for e in H.edges:
        if v in e:
            x, y = (w for w in e if w != v)
            if x in S and y in S:
                pairs.append((x, y))
    return Graph2(H.n, pairs)


def pair_neighborhood(H: Hypergraph3, u: int, v: int) -> frozenset[int]:
    _check_vertex(H, u)
    _check_vertex(H, v)
    if u == v:
        raise InputError("pair neighbourhood needs two distinct vertices")
    return frozenset(iter_bits(H.pair_masks[u][v]))


def max_codegree(H: Hypergraph3) -> int:
    """Largest pair neighbourhood over all unordered pairs."""
    if H.n < 2:
        raise InputError("max codegree needs at least two vertices")
    best = 0
    for u in range(H.n):
        row = H.pair_masks[u]
        for v in range(u + 1, H.n):
            c = row[v].bit_count()
            if c > best:
                best = c
    return best


def _greedy_matching(edges: list[tuple[int, int]], k: int) -> list[int]:
    used = 0
    picked = []
    for i, m in edges:
        if not m & used:
            picked.append(i)
            used |= m
            if len(picked) == k:
                break
    return picked


def _greedy_cover_below(edges: list[tuple[int, int]], k: int) -> bool:
    """True if a vertex cover with fewer than ``k`` vertices is found greedily."""
    remaining = [m for _, m in edges]
    size = 0
    while remaining:
        if size + 1 >= k:
            return False
        counts: dict[int, int] = {}
        for m in remaining:
            for v in iter_bits(m):
                counts[v] = counts.get(v, 0) + 1
        best = max(counts, key=lambda v: (counts[v], -v))
        bit = 1 << best
        remaining = [m for m in remaining if not m & bit]
        size += 1
    return size < k


def _search_matching(edges: list[tuple[int, int]], k: int) -> list[int] | None:
    # edges: (index, vertex mask), in the order branching should follow
    if k == 0:
        return []
    while len(edges) >= k:
        union = 0
        for _, m in edges:
            union |= m
        if union.bit_count() < 3 * k:
            return None
        greedy = _greedy_matching(edges, k)
        if len(greedy) == k:
            return greedy
        if _greedy_cover_below(edges, k):
            return None
        i, m = edges[0]
        rest = [(j, mj) for j, mj in edges[1:] if not mj & m]
        sub = _search_matching(rest, k - 1)
        if sub is not None:
            return [i] + sub
        edges = edges[1:]
    return None


def find_matching(H: Hypergraph3, k: int) -> list[tuple[int, int, int]] | None:
    """Return ``k`` pairwise disjoint edges of ``H`` or ``None`` if none exist.

    Exact: include/exclude branching on the lowest-indexed remaining edge,
    pruned by vertex count, a greedy lower bound and a greedy vertex-cover
    upper bound.
    """
    if k < 0:
        raise InputError(f"matching size must be nonnegative, got {k}")
    found = _search_matching(list(enumerate(H.edge_masks)), k)
    if found is None:
        return None
    return [H.edges[i] for i in sorted(found)]


def has_matching_of_size(H: Hypergraph3, k: int) -> bool:
    return find_matching(H, k) is not None


def matching_number(H: Hypergraph3) -> int:
    edges = list(enumerate(H.edge_masks))
    nu = len(_greedy_matching(edges, len(edges) + 1))
    while _search_matching(edges, nu + 1) is not None:
        nu += 1
    return nu


def is_weakly_independent(H: Hypergraph3, S: Iterable[int]) -> bool:
    mask = mask_of(_vertex_set(H, S))
    return not any(m & mask == m for m in H.edge_masks)


@dataclass(frozen=True)
class DegreePartition:
    A: frozenset[int]
    B: frozenset[int]
    threshold: int


def degree_partition(H: Hypergraph3, s: int) -> DegreePartition:
    """Split vertices by degree at ``3*s*n + 1``.

    No assumption on the matching number of ``H`` is made here.
    """
    if s < 0:
        raise InputError(f"s must be nonnegative, got {s}")
    threshold = 3 * s * H.n + 1
    A = frozenset(v for v in range(H.n) if H.degrees[v] >= threshold)
    return DegreePartition(A, frozenset(range(H.n)) - A, threshold)


def induced(H: Hypergraph3, S: Iterable[int]) -> Hypergraph3:
    """Edges inside ``S``, keeping the original labels."""
    mask = mask_of(_vertex_set(H, S))
    return Hypergraph3(H.n, [e for e, m in zip(H.edges, H.edge_masks) if m & mask == m])


def cross_subgraph(H: Hypergraph3, S: Iterable[int], T: Iterable[int]) -> Hypergraph3:
    """Edges meeting both of the disjoint sets ``S`` and ``T``."""
    S, T = _vertex_set(H, S), _vertex_set(H, T)
    if S & T:
        raise InputError("cross subgraph needs disjoint vertex sets")
    ms, mt = mask_of(S), mask_of(T)
    return Hypergraph3(H.n, [e for e, m in zip(H.edges, H.edge_masks) if m & ms and m & mt])


def shadow(H: Hypergraph3) -> Graph2:
    pairs = set()
    for a, b, c in H.edges:
        pairs.update(((a, b), (a, c), (b, c)))
    return Graph2(H.n, pairs)


def compact(H: Hypergraph3, S: Iterable[int]) -> tuple[Hypergraph3, dict[int, int]]:
    """Induced subhypergraph on ``S`` relabelled to ``0..|S|-1`` (in label order)."""
    order = sorted(_vertex_set(H, S))
    relabel = {v: i for i, v in enumerate(order)}
    sub = induced(H, order)
    return Hypergraph3(len(order), [[relabel[v] for v in e] for e in sub.edges]), relabel


def complete(n: int) -> Hypergraph3:
    return Hypergraph3(n, combinations(range(n), 3))


def max_edges(n: int) -> int:
    return comb(n, 3)
