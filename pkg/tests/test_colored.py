from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from hyperturan import constructions as C
from hyperturan.colored import (
    ColoredMultigraph,
    StarColoredCliqueWitness,
    bound_conj71,
    bound_thm16,
    bound_thm31,
    brute_force_star_clique,
    clique_coloring,
    cut,
    cut_threshold_check,
    find_star_colored_clique,
    is_star_colored_free,
    max_colored_sum,
    min_degree,
    multiplicity,
    thm16_applies,
    weighted_degree,
)
from hyperturan.hypergraph import BudgetExceeded, Graph2, InputError, link_graph
from hyperturan.samples import random_colored


def complete_graph(n: int) -> Graph2:
    return Graph2(n, combinations(range(n), 2))


def brute_max_sum(n: int, s: int, r: int) -> int:
    """Every s-tuple of layers, checked with the brute-force clique oracle."""
    pairs = list(combinations(range(n), 2))
    best = 0
    for choice in product(range(1 << len(pairs)), repeat=s):
        layers = [Graph2(n, [p for j, p in enumerate(pairs) if bits >> j & 1]) for bits in choice]
        total = sum(G.m for G in layers)
        if total <= best:
            continue
        if not brute_force_star_clique(ColoredMultigraph(n, layers), r - 1, r):
            best = total
    return best


class TestMultigraph:
    def test_doubled_turan(self):
        T = C.turan_graph(4, 2)
        M = ColoredMultigraph(4, [T, T])
        assert all(multiplicity(M, e) == 2 for e in T.edges)
        assert multiplicity(M, (0, 2)) == 0
        assert min_degree(M) == 4

    def test_cut_is_degree(self, rng):
        M = random_colored(rng, 6, 3, 0.5)
        for v in range(6):
            rest = [u for u in range(6) if u != v]
            assert cut(M, [v], rest) == weighted_degree(M, v)

    def test_empty(self):
        M = ColoredMultigraph(5, [Graph2(5, []), Graph2(5, [])])
        assert min_degree(M) == 0 and cut(M, [0, 1], [2, 3, 4]) == 0 and M.total_edges == 0

    def test_errors(self):
        M = ColoredMultigraph(3, [Graph2(3, [(0, 1)])])
        with pytest.raises(InputError):
            multiplicity(M, (0, 3))
        with pytest.raises(InputError):
            ColoredMultigraph(3, [Graph2(4, [])])


class TestStarCliques:
    def test_defining_picture(self):
        M = ColoredMultigraph(3, [Graph2(3, [(0, 1), (0, 2)]), Graph2(3, [(1, 2)])])
        w = find_star_colored_clique(M, 2, 3)
        assert w is not None and w.is_valid(M)
        assert w.assignment == {(0, 1): 0, (0, 2): 0, (1, 2): 1}

    @pytest.mark.parametrize("n,r,s", [(8, 3, 2), (9, 4, 3), (10, 5, 4)])
    def test_turan_layers_are_free(self, n, r, s):
        M = ColoredMultigraph(n, [C.turan_graph(n, r - 1)] * s)
        assert find_star_colored_clique(M, r - 1, r) is None
        assert is_star_colored_free(M.layers, r)

    def test_triangle_is_not_a_star(self):
        M = ColoredMultigraph(3, [complete_graph(3)])
        assert find_star_colored_clique(M, 1, 3) is None

    def test_hb_links_are_free(self):
        built = C.h_b(20, 3, 4)
        layers = [link_graph(built.hypergraph, u) for u in built.part("U")]
        assert is_star_colored_free(layers, 4)

    def test_errors(self):
        M = ColoredMultigraph(3, [complete_graph(3)])
        with pytest.raises(InputError):
            find_star_colored_clique(M, 1, 4)
        with pytest.raises(InputError):
            find_star_colored_clique(M, 2, 3)
        with pytest.raises(InputError):
            is_star_colored_free(M.layers, 2)

    def test_witness_validation(self):
        M = ColoredMultigraph(3, [complete_graph(3)])
        bad = StarColoredCliqueWitness((0, 1, 2), {(0, 1): 0, (0, 2): 0, (1, 2): 0})
        assert not bad.is_valid(M, "star")
        assert bad.is_valid(M, "bipartite") is False

    def test_bipartite_classes(self):
        # a single class would be all of K4, which is neither a star nor bipartite
        masks = [1] * 6
        assert clique_coloring(4, masks, 1, kind="star") is None
        assert clique_coloring(4, masks, 1, kind="bipartite") is None
        two = [3] * 6
        got = clique_coloring(4, two, 2, kind="bipartite")
        assert got is not None
        pairs = list(combinations(range(4), 2))
        M = ColoredMultigraph(4, [complete_graph(4), complete_graph(4)])
        assert StarColoredCliqueWitness((0, 1, 2, 3), dict(zip(pairs, got))).is_valid(M, "bipartite")

    def test_exact_k(self):
        M = ColoredMultigraph(3, [complete_graph(3), complete_graph(3), complete_graph(3)])
        assert find_star_colored_clique(M, 3, 3, exact_k=True) is not None
        single = ColoredMultigraph(3, [Graph2(3, [(0, 1), (0, 2)]), Graph2(3, [(1, 2)]), Graph2(3, [])])
        assert find_star_colored_clique(single, 3, 3, exact_k=True) is None
        assert find_star_colored_clique(single, 3, 3) is not None

    def test_oracle(self):
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randint(3, 6)
            s = rng.randint(1, 3)
            M = random_colored(rng, n, s, rng.uniform(0.3, 0.9))
            t = rng.randint(2, min(4, n))
            k = rng.randint(1, s)
            for exact in (False, True):
                w = find_star_colored_clique(M, k, t, exact)
                assert (w is not None) == brute_force_star_clique(M, k, t, exact)
                if w is not None:
                    assert w.is_valid(M)
                    used = len(w.colors_used())
                    assert used == k if exact else used <= k

    def test_flags_agree_at_t_minus_one(self):
        rng = random.Random(32)
        for _ in range(80):
            n = rng.randint(3, 6)
            t = rng.randint(3, min(4, n))
            M = random_colored(rng, n, 3, rng.uniform(0.4, 0.95))
            if t - 1 > M.s:
                continue
            a = find_star_colored_clique(M, t - 1, t, False) is not None
            b = find_star_colored_clique(M, t - 1, t, True) is not None
            assert a == b


class TestBounds:
    def test_examples(self):
        assert bound_thm16(64, 3, 4) == 3 * C.turan_count(64, 3) + 192
        assert bound_thm31(4, 2) == 8
        assert bound_conj71(4, 3, 4) == 15
        assert bound_thm16(4, 3, 4) == 27

    def test_small_s_branch(self):
        assert bound_thm16(6, 1, 4) == 15

    def test_applicability(self):
        assert not thm16_applies(64, 3, 4)
        assert thm16_applies(65, 3, 4)


class TestCutThreshold:
    def test_complete_layers(self):
        r = 4
        M = ColoredMultigraph(6, [complete_graph(6)] * (r - 1))
        assert cut_threshold_check(M, [0, 1], r) == 2

    def test_empty(self):
        M = ColoredMultigraph(6, [Graph2(6, [])] * 3)
        assert cut_threshold_check(M, [0], 4) is None

    def test_turan_layers(self):
        n, r = 12, 4
        M = ColoredMultigraph(n, [C.turan_graph(n, r - 1)] * (r - 1))
        u = cut_threshold_check(M, [0, 3], r)
        assert u is not None and u % 3 != 0

    def test_size_limit(self):
        M = ColoredMultigraph(6, [complete_graph(6)])
        with pytest.raises(InputError):
            cut_threshold_check(M, [0, 1, 2, 3], 4)


class TestMaxColoredSum:
    @pytest.mark.parametrize("n,s,expected", [(4, 2, 8), (5, 2, 12), (4, 3, 12), (3, 2, 4)])
    def test_r3_values(self, n, s, expected):
        res = max_colored_sum(n, s, 3)
        assert res.value == expected == bound_thm31(n, s)
        assert sum(G.m for G in res.layers) == res.value
        assert is_star_colored_free(res.layers, 3)

    def test_single_colour_is_unconstrained(self):
        # a 2-star coloured triangle needs two colours
        assert max_colored_sum(4, 1, 3).value == 6

    @pytest.mark.parametrize("n,s,r", [(3, 2, 3), (4, 2, 3), (4, 1, 3)])
    def test_against_exhaustive_oracle(self, n, s, r):
        assert max_colored_sum(n, s, r).value == brute_max_sum(n, s, r)

    def test_r4_probe(self):
        res = max_colored_sum(4, 3, 4)
        assert bound_conj71(4, 3, 4) <= res.value <= bound_thm16(4, 3, 4)
        assert res.value == 15
        assert max_colored_sum(4, 3, 4, exact_k=True).value == 15

    def test_lower_bound_always_met(self):
        for n, s, r in [(4, 2, 3), (5, 1, 3), (5, 2, 4), (4, 2, 4)]:
            assert max_colored_sum(n, s, r).value >= bound_conj71(n, s, r)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            max_colored_sum(5, 2, 3, budget=10)

    def test_large_without_budget(self):
        with pytest.raises(InputError):
            max_colored_sum(7, 2, 3)

    def test_env_budget(self, monkeypatch):
        monkeypatch.setenv("TURAN_BUDGET", "5")
        with pytest.raises(BudgetExceeded):
            max_colored_sum(5, 2, 3)

    def test_trivial_sizes(self):
        assert max_colored_sum(1, 2, 3).value == 0
        assert max_colored_sum(2, 2, 3).value == 2
