"""Seeded random instances for property checks and oracle batteries."""

from __future__ import annotations

import random
from itertools import combinations

from .colored import ColoredMultigraph
from .hypergraph import Graph2, Hypergraph3, matching_number


def random_hypergraph(rng: random.Random, n: int, p: float) -> Hypergraph3:
    return Hypergraph3(n, [t for t in combinations(range(n), 3) if rng.random() < p])


def random_graph(rng: random.Random, n: int, p: float) -> Graph2:
    return Graph2(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_pattern(rng: random.Random, max_vertices: int = 5, max_edges: int = 4) -> Hypergraph3:
    """Small pattern with at least one edge and no isolated vertices."""
    while True:
        k = rng.randint(3, max_vertices)
        triples = list(combinations(range(k), 3))
        m = rng.randint(1, min(max_edges, len(triples)))
        edges = rng.sample(triples, m)
        used = {v for e in edges for v in e}
        if len(used) == k:
            return Hypergraph3(k, edges)


def random_bounded_matching(rng: random.Random, n: int, s: int) -> Hypergraph3:
    """Random 3-graph on ``n`` vertices conditioned on matching number at most ``s``."""
    while True:
        kind = rng.random()
        if kind < 0.4:
            # edges forced through a random cover of size s, plus noise
            cover = rng.sample(range(n), min(s, n))
            edges = [t for t in combinations(range(n), 3)
                     if set(t) & set(cover) and rng.random() < rng.uniform(0.3, 1.0)]
            H = Hypergraph3(n, edges)
        else:
            H = random_hypergraph(rng, n, rng.uniform(0.02, 0.5))
        if matching_number(H) <= s:
            return H


def random_colored(rng: random.Random, n: int, s: int, p: float) -> ColoredMultigraph:
    return ColoredMultigraph(n, [random_graph(rng, n, p) for _ in range(s)])
