from __future__ import annotations

import math
import random
from itertools import combinations, product

import pytest

from hyperturan import constructions as C
from hyperturan.coloring import (
    graph_chromatic_number,
    graph_coloring,
    hypergraph_chromatic_number,
    hypergraph_coloring,
    is_proper_red_set,
    is_strong_red_set,
    link_chromatic_profile,
    min_proper_coloring,
    min_strong_coloring,
    p_value,
    q_value,
)
from hyperturan.hypergraph import Graph2, Hypergraph3, complete, link_graph
from hyperturan.samples import random_graph, random_hypergraph, random_pattern


def brute_graph_chi(G: Graph2) -> int:
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        for cols in product(range(k), repeat=G.n):
            if all(cols[u] != cols[v] for u, v in G.edges):
                return k
    return G.n


def brute_red_min(F: Hypergraph3, ok) -> float:
    best = math.inf
    for bits in range(1 << F.n):
        red = [v for v in range(F.n) if bits >> v & 1]
        if ok(F, red):
            best = min(best, len(red))
    return best


def cycle(n: int) -> Graph2:
    return Graph2(n, [(i, (i + 1) % n) for i in range(n)])


class TestGraphChromatic:
    def test_examples(self):
        assert graph_chromatic_number(Graph2(4, combinations(range(4), 2))) == 4
        assert graph_chromatic_number(C.turan_graph(7, 3)) == 3
        assert graph_chromatic_number(cycle(5)) == 3
        assert graph_chromatic_number(cycle(6)) == 2

    def test_degenerate(self):
        assert graph_chromatic_number(Graph2(0, [])) == 0
        assert graph_chromatic_number(Graph2(3, [])) == 1

    def test_colouring_witness(self):
        G = cycle(7)
        assert graph_coloring(G, 2) is None
        cols = graph_coloring(G, 3)
        assert all(cols[u] != cols[v] for u, v in G.edges)

    def test_oracle(self):
        rng = random.Random(9)
        for _ in range(60):
            G = random_graph(rng, rng.randint(1, 7), rng.random())
            assert graph_chromatic_number(G) == brute_graph_chi(G)


class TestHypergraphChromatic:
    def test_examples(self):
        assert hypergraph_chromatic_number(C.f32()) == 2
        assert hypergraph_chromatic_number(complete(4)) == 2
        assert hypergraph_chromatic_number(Hypergraph3(3, [])) == 1

    def test_fano_needs_three(self):
        fano = Hypergraph3(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])
        assert hypergraph_chromatic_number(fano) == 3
        assert p_value(fano) == math.inf

    def test_colouring_is_weak(self):
        F = complete(4)
        cols = hypergraph_coloring(F, 2)
        assert hypergraph_coloring(complete(5), 2) is None
        assert hypergraph_chromatic_number(complete(5)) == 3
        assert all(len({cols[v] for v in e}) > 1 for e in F.edges)

    @pytest.mark.parametrize("t", [3, 4, 5])
    def test_patterns_are_two_chromatic(self, t):
        for F in (C.f_star_partition(t), C.full_star(t), C.f_matching_partition(2)):
            assert hypergraph_chromatic_number(F) == 2


class TestRedBlue:
    def test_p_examples(self):
        assert p_value(C.f32()) == 2
        assert p_value(C.matching(2)) == 2
        assert p_value(Hypergraph3(4, [])) == 0

    def test_q_examples(self):
        for t in (3, 4, 5):
            assert q_value(C.f_star_partition(t)) == t - 1
            assert q_value(C.full_star(t)) == 1
        assert q_value(C.f32()) == math.inf
        assert q_value(Hypergraph3(3, [])) == 0

    def test_q_matching_partition(self):
        assert q_value(C.f_matching_partition(2)) == 3

    def test_witnesses(self):
        col = min_strong_coloring(C.f_star_partition(4))
        assert is_strong_red_set(C.f_star_partition(4), col.red)
        assert col.red | col.blue == frozenset(range(C.f_star_partition(4).n))
        assert min_strong_coloring(C.f32()) is None
        prop = min_proper_coloring(C.f32())
        assert is_proper_red_set(C.f32(), prop.red)

    def test_p_at_most_q(self):
        rng = random.Random(4)
        for _ in range(50):
            F = random_pattern(rng, 6, 5)
            assert p_value(F) <= q_value(F)

    def test_q_oracle(self):
        rng = random.Random(8)
        for _ in range(100):
            F = random_hypergraph(rng, rng.randint(3, 8), rng.uniform(0.05, 0.4))
            assert q_value(F) == brute_red_min(F, is_strong_red_set)
            assert p_value(F) == brute_red_min(F, is_proper_red_set)


class TestLinkProfile:
    @pytest.mark.parametrize("t", [3, 4, 5])
    def test_star_partition_all_two(self, t):
        F = C.f_star_partition(t)
        prof = link_chromatic_profile(F)
        assert all(v <= 2 for v in prof.values)
        for v, c in zip(prof.ordering, prof.values):
            if F.degrees[v]:
                assert c == 2

    @pytest.mark.parametrize("t", [3, 4, 5])
    def test_full_star(self, t):
        prof = link_chromatic_profile(C.full_star(t))
        assert prof.ordering[0] == 0 and prof.ell(1) == t
        assert set(prof.values[1:]) == {2}

    def test_edgeless(self):
        assert link_chromatic_profile(Hypergraph3(4, [])).values == (1, 1, 1, 1)

    def test_ordering_is_descending_and_stable(self):
        F = C.f32()
        prof = link_chromatic_profile(F)
        assert list(prof.values) == sorted(prof.values, reverse=True)
        for i in range(len(prof.values) - 1):
            if prof.values[i] == prof.values[i + 1]:
                assert prof.ordering[i] < prof.ordering[i + 1]
        for v, c in zip(prof.ordering, prof.values):
            assert graph_chromatic_number(link_graph(F, v)) == c
