"""Generators for the named graphs and 3-graphs, each with its claimed size.

Vertex layouts are fixed: distinguished parts (A, U, ...) take the lowest
labels, the rest follow.  Turán graphs assign vertex ``j`` of their ground
set to part ``j mod t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

from .coloring import hypergraph_chromatic_number, link_chromatic_profile, q_value
from .hypergraph import Graph2, Hypergraph3, InputError


# -- Turán graphs -----------------------------------------------------------

def turan_parts(vertices: list[int] | range, t: int) -> list[list[int]]:
    """Round-robin split of ``vertices`` into ``t`` parts."""
    if t <= 0:
        if len(vertices):
            raise InputError("Turán graph needs t >= 1 parts")
        return []
    return [list(vertices[i::t]) for i in range(t)]


def turan_count(n: int, t: int) -> int:
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if t <= 0:
        if n > 0:
            raise InputError("Turán graph needs t >= 1 parts")
        return 0
    q, r = divmod(n, t)
    return comb(n, 2) - r * comb(q + 1, 2) - (t - r) * comb(q, 2)


def turan_pairs(vertices: list[int] | range, t: int) -> list[tuple[int, int]]:
    parts = turan_parts(vertices, t)
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    return [(u, v) for u, v in combinations(vertices, 2) if part_of[u] != part_of[v]]


def turan_graph(n: int, t: int) -> Graph2:
    return Graph2(n, turan_pairs(range(n), t))


# -- patterns -----------------------------------------------------------------

def matching(k: int) -> Hypergraph3:
    """``k`` disjoint triples ``{3i, 3i+1, 3i+2}``."""
    if k < 0:
        raise InputError(f"matching size must be nonnegative, got {k}")
    return Hypergraph3(3 * k, [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(k)])


def f_star_partition(t: int) -> Hypergraph3:
    """Star-partition pattern: ``a_i`` (label ``i-1``) joined to each pair ``ij``, ``i<j``.

    Clique vertex ``j`` of ``1..t`` gets label ``t-2+j``.
    """
    if t < 3:
        raise InputError(f"star partition pattern needs t >= 3, got {t}")
    a = lambda i: i - 1
    k = lambda j: t - 2 + j
    edges = [(a(i), k(i), k(j)) for i in range(1, t) for j in range(i + 1, t + 1)]
    return Hypergraph3(2 * t - 1, edges)


def one_factorization(m: int) -> list[list[tuple[int, int]]]:
    """Circle-method 1-factorisation of ``K_m`` on ``0..m-1`` (``m`` even)."""
    if m < 2 or m % 2:
        raise InputError(f"1-factorisation needs an even order >= 2, got {m}")
    r = m - 1
    rounds = []
    for i in range(r):
        pairs = [tuple(sorted((i, m - 1)))]
        for d in range(1, m // 2):
            pairs.append(tuple(sorted(((i + d) % r, (i - d) % r))))
        rounds.append(sorted(pairs))
    return rounds


def f_matching_partition(t: int) -> Hypergraph3:
    """Matching-partition pattern over ``K_{2t}``.

    ``a_i`` (label ``i``, ``0 <= i < 2t-1``) is joined to each pair of the
    ``i``-th perfect matching; clique vertices are labels ``2t-1 .. 4t-2``.
    """
    if t < 2:
        raise InputError(f"matching partition pattern needs t >= 2, got {t}")
    base = 2 * t - 1
    edges = [
        (i, base + u, base + v)
        for i, rnd in enumerate(one_factorization(2 * t))
        for u, v in rnd
    ]
    return Hypergraph3(4 * t - 1, edges)


def full_star(t: int) -> Hypergraph3:
    """``J_t``: centre 0, leaves ``1..t``, every triple through the centre."""
    if t < 2:
        raise InputError(f"full star needs t >= 2, got {t}")
    return Hypergraph3(t + 1, [(0, i, j) for i, j in combinations(range(1, t + 1), 2)])


def j_plus(t: int) -> Hypergraph3:
    if t < 3:
        raise InputError(f"J_t plus needs t >= 3, got {t}")
    return Hypergraph3(t + 1, full_star(t).edges + ((1, 2, 3),))


def k4_minus() -> Hypergraph3:
    return full_star(3)


def f32() -> Hypergraph3:
    """Edges 123, 145, 245, 345 shifted to 0-based labels."""
    return Hypergraph3(5, [(0, 1, 2), (0, 3, 4), (1, 3, 4), (2, 3, 4)])


# -- constructions with claimed sizes -----------------------------------------

@dataclass(frozen=True)
class BuiltConstruction:
    name: str
    params: dict
    hypergraph: Hypergraph3
    part_labels: dict[int, str]
    claimed_edges: int

    @property
    def size_matches(self) -> bool:
        return self.hypergraph.m == self.claimed_edges

    def part(self, label: str) -> list[int]:
        return sorted(v for v, p in self.part_labels.items() if p == label)

    def parts_with_prefix(self, prefix: str) -> list[int]:
        return sorted(v for v, p in self.part_labels.items() if p.startswith(prefix))


def _label_turan(labels: dict[int, str], vertices, t: int, prefix: str) -> list[list[int]]:
    parts = turan_parts(vertices, t)
    for i, p in enumerate(parts, 1):
        for v in p:
            labels[v] = f"{prefix}{i}"
    return parts


def h_conjecture_size(F: Hypergraph3, i: int, n: int, s: int) -> int:
    """Closed-form size of ``H_i`` built from the link profile of ``F``."""
    ell = link_chromatic_profile(F).ell(i)
    return (i - 1) * comb(n - s, 2) + (s - i + 1) * turan_count(n - s, ell - 1)


def _check_conjecture_params(F: Hypergraph3, i: int, n: int, s: int) -> int:
    if hypergraph_chromatic_number(F) != 2:
        raise InputError("H_i needs a pattern with weak chromatic number 2")
    q = q_value(F)
    if q > s:
        raise InputError(f"H_i needs q(F) <= s, got q(F)={q}, s={s}")
    if not 1 <= i <= q:
        raise InputError(f"H_i needs 1 <= i <= q(F)={q}, got {i}")
    if n < s:
        raise InputError(f"H_i needs n >= s, got n={n}, s={s}")
    ell = link_chromatic_profile(F).ell(i)
    if ell < 2:
        raise InputError(f"link chromatic number {ell} leaves no Turán graph in B")
    return ell


def h_conjecture(F: Hypergraph3, i: int, n: int, s: int) -> BuiltConstruction:
    """``H_i``: A1 (``i-1`` vertices) sees all pairs of B, A2 sees a Turán graph in B."""
    ell = _check_conjecture_params(F, i, n, s)
    A1 = range(0, i - 1)
    A2 = range(i - 1, s)
    B = range(s, n)
    labels = {v: "A1" for v in A1} | {v: "A2" for v in A2}
    _label_turan(labels, B, ell - 1, "B")
    all_pairs = list(combinations(B, 2))
    turan = turan_pairs(B, ell - 1)
    edges = [(a, x, y) for a in A1 for x, y in all_pairs]
    edges += [(a, x, y) for a in A2 for x, y in turan]
    claimed = (i - 1) * comb(n - s, 2) + (s - i + 1) * turan_count(n - s, ell - 1)
    return BuiltConstruction(
        "h_conjecture", {"i": i, "n": n, "s": s}, Hypergraph3(n, edges), labels, claimed
    )


def h_ns(n: int, s: int) -> BuiltConstruction:
    """``H(n,s)``: one vertex of the ``s``-set A with any two vertices of B."""
    if not n > s >= 0:
        raise InputError(f"H(n,s) needs n > s >= 0, got n={n}, s={s}")
    A, B = range(s), range(s, n)
    edges = [(a, x, y) for a in A for x, y in combinations(B, 2)]
    labels = {v: "A" for v in A} | {v: "B" for v in B}
    return BuiltConstruction(
        "h_ns", {"n": n, "s": s}, Hypergraph3(n, edges), labels, s * comb(n - s, 2)
    )


def h_b(n: int, s: int, t: int) -> BuiltConstruction:
    """Every vertex of U with every edge of ``T(n-s, t-1)`` on V."""
    if not (n > s >= t - 1 >= 2):
        raise InputError(f"H_B needs n > s >= t-1 >= 2, got n={n}, s={s}, t={t}")
    U, V = range(s), range(s, n)
    labels = {v: "U" for v in U}
    _label_turan(labels, V, t - 1, "V")
    edges = [(u, x, y) for u in U for x, y in turan_pairs(V, t - 1)]
    return BuiltConstruction(
        "h_b", {"n": n, "s": s, "t": t}, Hypergraph3(n, edges), labels,
        s * turan_count(n - s, t - 1),
    )


def k4minus_extremal_size(n: int, s: int) -> int:
    if s == 2 and n % 2:
        return 2 * ((n - 2) ** 2 // 4) + 1
    return s * ((n - s) ** 2 // 4)


def k4minus_extremal(n: int, s: int) -> BuiltConstruction:
    """Extremal ``{K4^-, M_{s+1}}``-free constructions for ``s`` in {1, 2}.

    For ``s = 2`` and odd ``n``: ``x1 = 0, x2 = 1``, apex ``z = 2``, the
    remaining vertices split round-robin into V1, V2.  Otherwise the
    complete 3-partite 3-graph with parts of sizes ``s``, and a balanced
    split of the rest.
    """
    if s not in (1, 2) or n < 5:
        raise InputError(f"K4^- construction needs s in {{1,2}} and n >= 5, got n={n}, s={s}")
    labels: dict[int, str] = {}
    if s == 2 and n % 2:
        x1, x2, z = 0, 1, 2
        labels.update({x1: "X", x2: "X", z: "Z"})
        V1, V2 = _label_turan(labels, range(3, n), 2, "V")
        edges = [(x, u, w) for x in (x1, x2) for u in V1 for w in V2]
        edges.append((x1, x2, z))
        edges += [(x1, u, z) for u in V1] + [(x2, u, z) for u in V2]
    else:
        A = range(s)
        labels.update({v: "A" for v in A})
        V1, V2 = _label_turan(labels, range(s, n), 2, "V")
        edges = [(a, u, w) for a in A for u in V1 for w in V2]
    return BuiltConstruction(
        "k4minus_extremal", {"n": n, "s": s}, Hypergraph3(n, edges), labels,
        k4minus_extremal_size(n, s),
    )


def concluding_size(n: int, s: int, t: int) -> int:
    return s * turan_count(n - s, t - 1) + (n - s - (n - s) // (t - 1)) * turan_count(s, t - 2)


def concluding_construction(n: int, s: int, t: int) -> BuiltConstruction:
    """``T(s, t-2)`` on A and ``T(n-s, t-1)`` on B.

    Type 1: a vertex of A with an edge of the Turán graph on B.  Type 2: an
    edge of the Turán graph on A with a vertex of B outside ``V1``, the first
    Turán part of B of size ``floor((n-s)/(t-1))``.
    """
    if t < 3:
        raise InputError(f"concluding construction needs t >= 3, got {t}")
    if not n > s >= 1:
        raise InputError(f"concluding construction needs n > s >= 1, got n={n}, s={s}")
    A, B = range(s), range(s, n)
    labels: dict[int, str] = {}
    _label_turan(labels, A, t - 2, "A")
    parts = _label_turan(labels, B, t - 1, "V")
    small = (n - s) // (t - 1)
    V1 = next(p for p in parts if len(p) == small)
    outside = [b for b in B if b not in set(V1)]
    edges = [(a, x, y) for a in A for x, y in turan_pairs(B, t - 1)]
    edges += [(a1, a2, b) for a1, a2 in turan_pairs(A, t - 2) for b in outside]
    return BuiltConstruction(
        "concluding", {"n": n, "s": s, "t": t}, Hypergraph3(n, edges), labels,
        concluding_size(n, s, t),
    )


# -- catalog --------------------------------------------------------------------

def _plain(name: str, H: Hypergraph3, claimed: int, params: dict) -> BuiltConstruction:
    return BuiltConstruction(name, params, H, {v: "V" for v in range(H.n)}, claimed)


CATALOG: dict[str, Callable[..., BuiltConstruction]] = {
    "matching": lambda k: _plain("matching", matching(k), k, {"k": k}),
    "f_star_partition": lambda t: _plain("f_star_partition", f_star_partition(t), comb(t, 2), {"t": t}),
    "f_matching_partition": lambda t: _plain(
        "f_matching_partition", f_matching_partition(t), t * (2 * t - 1), {"t": t}
    ),
    "full_star": lambda t: _plain("full_star", full_star(t), comb(t, 2), {"t": t}),
    "j_plus": lambda t: _plain("j_plus", j_plus(t), comb(t, 2) + 1, {"t": t}),
    "k4_minus": lambda: _plain("k4_minus", k4_minus(), 3, {}),
    "f32": lambda: _plain("f32", f32(), 4, {}),
    "h_conjecture": h_conjecture,
    "h_ns": h_ns,
    "h_b": h_b,
    "k4minus_extremal": k4minus_extremal,
    "concluding": concluding_construction,
}


@dataclass(frozen=True)
class ConstructionSpec:
    """A named recipe; ``build()`` is deterministic in ``(name, params)``."""

    name: str
    params: dict = field(default_factory=dict)

    def build(self) -> BuiltConstruction:
        try:
            builder = CATALOG[self.name]
        except KeyError:
            raise InputError(f"unknown construction {self.name!r}") from None
        return builder(**self.params)
