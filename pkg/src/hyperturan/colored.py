"""Edge-coloured multigraphs ``G_1 + ... + G_s`` and star-coloured cliques.

Colours are the layer indices ``0..s-1``.  A ``k``-star edge-coloured
``K_t`` is a ``t``-set whose pairs each receive one of their available
colours so that ``k`` colours appear and every colour class is a star.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .constructions import turan_count, turan_graph
from .hypergraph import BudgetExceeded, Graph2, InputError, iter_bits, mask_of

DEFAULT_BUDGET = 50_000_000


class ColoredMultigraph:
    def __init__(self, n: int, layers: Iterable[Graph2]):
        layers = tuple(layers)
        for G in layers:
            if G.n != n:
                raise InputError(f"layer on {G.n} vertices, expected {n}")
        self.n = n
        self.layers = layers
        colors: dict[tuple[int, int], int] = {}
        for i, G in enumerate(layers):
            for e in G.edges:
                colors[e] = colors.get(e, 0) | (1 << i)
        self.pair_colors = colors
        support = [0] * n
        for u, v in colors:
            support[u] |= 1 << v
            support[v] |= 1 << u
        self.support_adj = tuple(support)

    @property
    def s(self) -> int:
        return len(self.layers)

    def colors(self, u: int, v: int) -> int:
        """Bitset of colours present on pair ``uv``."""
        return self.pair_colors.get((min(u, v), max(u, v)), 0)

    def __repr__(self):
        return f"ColoredMultigraph(n={self.n}, s={self.s}, e={self.total_edges})"

    @property
    def total_edges(self) -> int:
        return sum(G.m for G in self.layers)


def _check_vertex(M: ColoredMultigraph, v: int) -> None:
    if not 0 <= v < M.n:
        raise InputError(f"vertex {v} out of range for n={M.n}")


def multiplicity(M: ColoredMultigraph, e: tuple[int, int]) -> int:
    u, v = e
    _check_vertex(M, u)
    _check_vertex(M, v)
    if u == v:
        raise InputError("multiplicity is defined for pairs of distinct vertices")
    return M.colors(u, v).bit_count()


def weighted_degree(M: ColoredMultigraph, v: int) -> int:
    _check_vertex(M, v)
    return sum(G.degree(v) for G in M.layers)


def cut(M: ColoredMultigraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Edges with multiplicity from ``S`` to ``T``: sum of ``w(uv)`` over ``u in S``, ``v in T``, ``u != v``."""
    S, T = list(S), list(T)
    for v in S + T:
        _check_vertex(M, v)
    return sum(M.colors(u, v).bit_count() for u in S for v in T if u != v)


def min_degree(M: ColoredMultigraph) -> int:
    if M.n == 0:
        return 0
    return min(weighted_degree(M, v) for v in range(M.n))


# -- star / bipartite coloured cliques ------------------------------------------

def _is_bipartite(pairs: list[tuple[int, int]]) -> bool:
    side: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for start in adj:
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def clique_coloring(
    t: int, masks: Sequence[int], k: int, exact_k: bool = False, kind: str = "star"
) -> tuple[int, ...] | None:
    """Colour the pairs of ``K_t`` (in ``combinations(range(t), 2)`` order).

    ``masks[j]`` is the bitset of colours allowed on pair ``j``.  Returns a
    colour per pair such that at most ``k`` (exactly ``k`` with
    ``exact_k``) colours are used and every class is a star (or bipartite
    for ``kind="bipartite"``), or ``None``.
    """
    pairs = list(combinations(range(t), 2))
    n_pairs = len(pairs)
    if kind not in ("star", "bipartite"):
        raise InputError(f"unknown class shape {kind!r}")
    # branch on the most constrained pairs first
    order = sorted(range(n_pairs), key=lambda j: (masks[j].bit_count(), j))
    chosen = [-1] * n_pairs
    centres: dict[int, int] = {}  # colour -> bitset of vertices common to its pairs
    classes: dict[int, list[tuple[int, int]]] = {}

    def rec(pos: int) -> bool:
        used = len(centres) if kind == "star" else len(classes)
        if exact_k and used + (n_pairs - pos) < k:
            return False
        if pos == n_pairs:
            return used == k if exact_k else used <= k
        j = order[pos]
        u, v = pairs[j]
        pm = (1 << u) | (1 << v)
        for c in iter_bits(masks[j]):
            if kind == "star":
                prev = centres.get(c)
                if prev is None:
                    if used >= k:
                        continue
                    centres[c] = pm
                elif prev & pm:
                    centres[c] = prev & pm
                else:
                    continue
                chosen[j] = c
                if rec(pos + 1):
                    return True
                if prev is None:
                    del centres[c]
                else:
                    centres[c] = prev
            else:
                cls = classes.get(c)
                if cls is None:
                    if used >= k:
                        continue
                    classes[c] = [(u, v)]
                elif _is_bipartite(cls + [(u, v)]):
                    cls.append((u, v))
                else:
                    continue
                chosen[j] = c
                if rec(pos + 1):
                    return True
                if cls is None:
                    del classes[c]
                else:
                    cls.pop()
        chosen[j] = -1
        return False

    return tuple(chosen) if rec(0) else None


@dataclass(frozen=True)
class StarColoredCliqueWitness:
    vertices: tuple[int, ...]
    assignment: dict[tuple[int, int], int]

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def is_valid(self, M: ColoredMultigraph, kind: str = "star") -> bool:
        if set(self.assignment) != set(combinations(self.vertices, 2)):
            return False
        for (u, v), c in self.assignment.items():
            if not M.colors(u, v) >> c & 1:
                return False
        for c in self.colors_used():
            cls = [e for e, col in self.assignment.items() if col == c]
            if kind == "star":
                common = set(cls[0])
                for e in cls[1:]:
                    common &= set(e)
                if not common:
                    return False
            elif not _is_bipartite(cls):
                return False
        return True


def _cliques(adj: Sequence[int], t: int, n: int):
    def rec(clique: list[int], cand: int):
        if len(clique) == t:
            yield tuple(clique)
            return
        while cand:
            if len(clique) + cand.bit_count() < t:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            clique.append(v)
            yield from rec(clique, cand & adj[v])
            clique.pop()

    yield from rec([], mask_of(range(n)))


def find_star_colored_clique(
    M: ColoredMultigraph, k: int, t: int, exact_k: bool = False, kind: str = "star"
) -> StarColoredCliqueWitness | None:
    """Search for a ``k``-star (or ``k``-bipartite) edge-coloured ``K_t`` in ``M``."""
    if not 2 <= t <= M.n:
        raise InputError(f"need 2 <= t <= n, got t={t}, n={M.n}")
    if not 1 <= k <= M.s:
        raise InputError(f"need 1 <= k <= s, got k={k}, s={M.s}")
    for S in _cliques(M.support_adj, t, M.n):
        pairs = list(combinations(S, 2))
        got = clique_coloring(t, [M.colors(u, v) for u, v in pairs], k, exact_k, kind)
        if got is not None:
            return StarColoredCliqueWitness(S, dict(zip(pairs, got)))
    return None


def is_star_colored_free(layers: Sequence[Graph2], r: int, exact_k: bool = False) -> bool:
    """True if the layers contain no ``(r-1)``-star edge-coloured ``K_r``."""
    if r < 3:
        raise InputError(f"need r >= 3, got {r}")
    layers = list(layers)
    if not layers:
        return True
    M = ColoredMultigraph(layers[0].n, layers)
    if M.n < r or M.s < r - 1:
        # K_r needs at least r-1 star classes, hence r-1 distinct colours
        return True
    return find_star_colored_clique(M, r - 1, r, exact_k) is None


def brute_force_star_clique(
    M: ColoredMultigraph, k: int, t: int, exact_k: bool = False
) -> bool:
    """Reference check trying every colour assignment on every ``t``-set."""
    for S in combinations(range(M.n), t):
        pairs = list(combinations(S, 2))
        options = [list(iter_bits(M.colors(u, v))) for u, v in pairs]
        if any(not o for o in options):
            continue
        for assign in product(*options):
            used = set(assign)
            if (len(used) != k) if exact_k else (len(used) > k):
                continue
            ok = True
            for c in used:
                common = set(S)
                for p, col in zip(pairs, assign):
                    if col == c:
                        common &= set(p)
                if not common:
                    ok = False
                    break
            if ok:
                return True
    return False


# -- bounds ------------------------------------------------------------------------

def bound_thm16(n: int, s: int, r: int) -> int:
    """``s*C(n,2)`` for ``s <= r-2``, else ``s*t(n,r-1) + s*n``."""
    if s <= r - 2:
        return s * comb(n, 2)
    return s * turan_count(n, r - 1) + s * n


def thm16_applies(n: int, s: int, r: int) -> bool:
    return s >= 1 and r >= 3 and n > r**3


def bound_thm31(n: int, s: int) -> int:
    return s * (n * n // 4)


def bound_conj71(n: int, s: int, r: int) -> int:
    return s * turan_count(n, r - 1)


def cut_threshold_check(M: ColoredMultigraph, T: Iterable[int], r: int) -> int | None:
    """Smallest ``u`` outside ``T`` with ``e(u, T) >= |T|(r-2) + 1``, if any."""
    T = sorted(set(T))
    if len(T) > r - 1:
        raise InputError(f"|T| must be at most r-1={r - 1}, got {len(T)}")
    for v in T:
        _check_vertex(M, v)
    need = len(T) * (r - 2) + 1
    members = set(T)
    for u in range(M.n):
        if u not in members and sum(M.colors(u, w).bit_count() for w in T) >= need:
            return u
    return None


# -- exhaustive maximisation -----------------------------------------------------------

@dataclass(frozen=True)
class ColoredMaxResult:
    value: int
    layers: tuple[Graph2, ...]
    nodes: int


def budget_from_env(default: int) -> int:
    raw = os.environ.get("TURAN_BUDGET")
    return int(raw) if raw else default


def max_colored_sum(
    n: int, s: int, r: int, exact_k: bool = False, budget: int | None = None
) -> ColoredMaxResult:
    """Exact maximum of ``sum e(G_i)`` over ``(r-1)``-star coloured ``K_r``-free layers.

    Depth-first over pairs in colex order, each pair taking a subset of the
    ``s`` colours.  Every ``r``-set is checked exactly once, when its last
    pair is decided.  The search is seeded with ``s`` copies of
    ``T(n, r-1)`` and only looks for strictly larger totals.
    """
    if r < 3 or s < 1 or n < 0:
        raise InputError(f"need n >= 0, s >= 1, r >= 3; got n={n}, s={s}, r={r}")
    if budget is None:
        if s * comb(n, 2) > 36:
            raise InputError("instance too large for the default budget; pass budget explicitly")
        budget = budget_from_env(DEFAULT_BUDGET)

    pairs = sorted(combinations(range(n), 2), key=lambda p: (p[1], p[0]))
    index = {p: i for i, p in enumerate(pairs)}
    # r-sets closed by each pair, as pair-index tuples in combinations order
    closing: list[list[tuple[int, ...]]] = []
    for u, v in pairs:
        sets = []
        for rest in combinations(range(u), r - 2):
            S = rest + (u, v)
            sets.append(tuple(index[p] for p in combinations(S, 2)))
        closing.append(sets)

    full = (1 << s) - 1
    options = sorted(range(full + 1), key=lambda m: (-m.bit_count(), m))
    root_options = [(1 << j) - 1 for j in range(s, -1, -1)]
    feasible_cache: dict[tuple[int, ...], bool] = {}

    def contains_colored_clique(key: tuple[int, ...]) -> bool:
        got = feasible_cache.get(key)
        if got is None:
            got = clique_coloring(r, key, r - 1, exact_k) is not None
            feasible_cache[key] = got
        return got

    seed = [turan_graph(n, r - 1)] * s
    best_value = bound_conj71(n, s, r)
    best_masks: list[int] | None = None
    masks = [0] * len(pairs)
    nodes = 0

    def rec(pos: int, total: int) -> None:
        nonlocal nodes, best_value, best_masks
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"colored search exceeded {budget} nodes", nodes)
        if total + s * (len(pairs) - pos) <= best_value:
            return
        if pos == len(pairs):
            best_value, best_masks = total, list(masks)
            return
        for m in (root_options if pos == 0 else options):
            masks[pos] = m
            if m and any(
                all(masks[j] for j in S) and contains_colored_clique(tuple(masks[j] for j in S))
                for S in closing[pos]
            ):
                continue
            rec(pos + 1, total + m.bit_count())
        masks[pos] = 0

    if n >= 2:
        rec(0, 0)
    if best_masks is None:
        layers = tuple(seed) if s else ()
    else:
        layers = tuple(
            Graph2(n, [p for p, m in zip(pairs, best_masks) if m >> i & 1]) for i in range(s)
        )
    return ColoredMaxResult(best_value, layers, nodes)
