"""Chromatic invariants: graph and weak hypergraph chromatic numbers, p(F), q(F).

All searches here are exponential by design; they target pattern
hypergraphs with a dozen or so vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .hypergraph import Graph2, Hypergraph3, iter_bits, link_graph, mask_of

INF = math.inf


def _max_clique_size(adj: tuple[int, ...]) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, mask_of(range(len(adj))))
    return best


def graph_coloring(G: Graph2, k: int) -> list[int] | None:
    """A proper ``k``-colouring of ``G`` as a colour list, or ``None``."""
    n = G.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = G.adj
    colors = [-1] * n

    def pick() -> int:
        # most saturated uncoloured vertex, then highest degree
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in iter_bits(adj[v]) if colors[u] >= 0})
            cand = (sat, adj[v].bit_count(), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(placed: int, used: int) -> bool:
        if placed == n:
            return True
        v = pick()
        blocked = {colors[u] for u in iter_bits(adj[v])}
        for c in range(min(used + 1, k)):
            if c in blocked:
                continue
            colors[v] = c
            if rec(placed + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def graph_chromatic_number(G: Graph2) -> int:
    if G.n == 0:
        return 0
    if G.m == 0:
        return 1
    k = max(2, _max_clique_size(G.adj))
    while graph_coloring(G, k) is None:
        k += 1
    return k


def hypergraph_coloring(F: Hypergraph3, k: int) -> list[int] | None:
    """A weak ``k``-colouring (no monochromatic edge) of ``F``, or ``None``."""
    n = F.n
    if n == 0:
        return []
    if k <= 0:
        return None
    # edges checked once their largest vertex is coloured
    closing: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, c in F.edges:
        closing[c].append((a, b))
    colors = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            if any(colors[a] == c and colors[b] == c for a, b in closing[v]):
                continue
            colors[v] = c
            if rec(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def hypergraph_chromatic_number(F: Hypergraph3) -> int:
    if F.n == 0:
        return 0
    k = 1
    while hypergraph_coloring(F, k) is None:
        k += 1
    return k


@dataclass(frozen=True)
class RedBlueColoring:
    red: frozenset[int]
    blue: frozenset[int]

    @classmethod
    def from_red(cls, n: int, red) -> "RedBlueColoring":
        red = frozenset(red)
        return cls(red, frozenset(range(n)) - red)


def is_proper_red_set(F: Hypergraph3, red) -> bool:
    r = mask_of(red)
    return all(0 < (m & r).bit_count() < 3 for m in F.edge_masks)


def is_strong_red_set(F: Hypergraph3, red) -> bool:
    r = mask_of(red)
    return all((m & r).bit_count() == 1 for m in F.edge_masks)


def min_proper_coloring(F: Hypergraph3) -> RedBlueColoring | None:
    """Proper red-blue colouring with the fewest red vertices.

    Candidate red sets are tried by increasing size, so the first hit is
    minimum.  ``None`` when ``F`` is not 2-colourable.
    """
    masks = F.edge_masks
    for size in range(F.n + 1):
        for red in combinations(range(F.n), size):
            r = mask_of(red)
            if all(0 < (m & r).bit_count() < 3 for m in masks):
                return RedBlueColoring.from_red(F.n, red)
    return None


def p_value(F: Hypergraph3) -> int | float:
    col = min_proper_coloring(F)
    return INF if col is None else len(col.red)


def min_strong_coloring(F: Hypergraph3) -> RedBlueColoring | None:
    """Strong red-blue colouring (exactly one red vertex per edge) with fewest reds."""
    n = F.n
    incident = [[] for _ in range(n)]
    for i, e in enumerate(F.edges):
        for v in e:
            incident[v].append(i)
    edges = F.edges
    # vertices in descending degree order branch first
    order = sorted(range(n), key=lambda v: (-len(incident[v]), v))
    best: list[frozenset[int] | None] = [None]
    best_size = [n + 1]

    def propagate(state: list[int], v: int) -> bool:
        # state: -1 unknown, 0 blue, 1 red; unit-propagate from vertex v
        stack = [v]
        while stack:
            x = stack.pop()
            for i in incident[x]:
                e = edges[i]
                reds = sum(1 for w in e if state[w] == 1)
                unknown = [w for w in e if state[w] == -1]
                if reds > 1:
                    return False
                if reds == 1:
                    for w in unknown:
                        state[w] = 0
                        stack.append(w)
                elif not unknown:
                    return False
                elif len(unknown) == 1:
                    state[unknown[0]] = 1
                    stack.append(unknown[0])
        return True

    def rec(state: list[int], pos: int) -> None:
        reds = state.count(1)
        if reds >= best_size[0]:
            return
        while pos < n and state[order[pos]] != -1:
            pos += 1
        if pos == n:
            best_size[0] = reds
            best[0] = frozenset(v for v in range(n) if state[v] == 1)
            return
        v = order[pos]
        for colour in (0, 1):
            nxt = list(state)
            nxt[v] = colour
            if propagate(nxt, v):
                rec(nxt, pos + 1)

    rec([-1] * n, 0)
    if best[0] is None:
        return None
    return RedBlueColoring.from_red(n, best[0])


def q_value(F: Hypergraph3) -> int | float:
    col = min_strong_coloring(F)
    return INF if col is None else len(col.red)


@dataclass(frozen=True)
class LinkChromaticProfile:
    ordering: tuple[int, ...]
    values: tuple[int, ...]

    def ell(self, i: int) -> int:
        """Link chromatic number of the ``i``-th vertex in the ordering (1-based)."""
        return self.values[i - 1]


def link_chromatic_profile(F: Hypergraph3) -> LinkChromaticProfile:
    # the link of v is taken on V(F) minus v, so at least one vertex remains
    chis = []
    for v in range(F.n):
        L = link_graph(F, v)
        chis.append(graph_chromatic_number(L) if F.n > 1 else 1)
    ordering = tuple(sorted(range(F.n), key=lambda v: (-chis[v], v)))
    return LinkChromaticProfile(ordering, tuple(chis[v] for v in ordering))
