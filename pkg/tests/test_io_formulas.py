from __future__ import annotations

import json
import random

import pytest

from hyperturan import constructions as C
from hyperturan.colored import ColoredMultigraph
from hyperturan.formulas import (
    emc_in_range,
    f32_in_range,
    formula_conjecture15,
    formula_emc,
    formula_gerbner_linear,
    formula_gerbner_small_s,
    gerbner_in_range,
)
from hyperturan.hypergraph import Graph2, InputError
from hyperturan.io import (
    FormatError,
    format_cmg,
    format_h3,
    parse_cmg,
    parse_h3,
    read_h3,
    write_construction,
)
from hyperturan.samples import random_colored

CATALOG_PARAMS = [
    ("matching", {"k": 2}), ("f_star_partition", {"t": 5}), ("f_matching_partition", {"t": 2}),
    ("full_star", {"t": 3}), ("j_plus", {"t": 4}), ("k4_minus", {}), ("f32", {}),
    ("h_ns", {"n": 10, "s": 2}), ("h_b", {"n": 11, "s": 3, "t": 4}),
    ("k4minus_extremal", {"n": 9, "s": 2}), ("concluding", {"n": 10, "s": 3, "t": 4}),
]


class TestH3:
    def test_round_trip_matching(self):
        text = "6 2\n0 1 2\n3 4 5\n"
        H = parse_h3(text)
        assert H == C.matching(2)
        assert format_h3(H) == text

    @pytest.mark.parametrize("name,params", CATALOG_PARAMS)
    def test_round_trip_catalog(self, name, params):
        H = C.ConstructionSpec(name, params).build().hypergraph
        assert parse_h3(format_h3(H)) == H
        assert format_h3(parse_h3(format_h3(H))) == format_h3(H)

    @pytest.mark.parametrize("text", [
        "4 1\n0 2 1\n",          # unsorted triple
        "6 2\n3 4 5\n0 1 2\n",   # out of order
        "6 2\n0 1 2\n0 1 2\n",   # duplicate
        "4 2\n0 1 2\n",          # count mismatch
        "4 1\n0 1 4\n",          # out of range
        "4 1\n0 1 x\n",          # not an integer
        "",
    ])
    def test_rejects(self, text):
        with pytest.raises(FormatError):
            parse_h3(text)

    def test_format_error_is_input_error(self):
        assert issubclass(FormatError, InputError)


class TestCmg:
    def test_round_trip(self, rng):
        for _ in range(20):
            M = random_colored(rng, rng.randint(2, 7), rng.randint(1, 3), rng.random())
            text = format_cmg(M)
            back = parse_cmg(text)
            assert [G.edges for G in back.layers] == [G.edges for G in M.layers]
            assert format_cmg(back) == text

    def test_example(self):
        M = parse_cmg("3 2\n2\n0 1\n0 2\n1\n1 2\n")
        assert M.colors(0, 1) == 1 and M.colors(1, 2) == 2

    @pytest.mark.parametrize("text", [
        "3 2\n1\n0 1\n",               # missing layer
        "3 1\n2\n0 2\n0 1\n",          # out of order
        "3 1\n1\n1 0\n",               # unsorted pair
        "3 1\n1\n0 1\n0 2\n",          # trailing
    ])
    def test_rejects(self, text):
        with pytest.raises(FormatError):
            parse_cmg(text)

    def test_empty_layers(self):
        M = ColoredMultigraph(3, [Graph2(3, []), Graph2(3, [])])
        assert parse_cmg(format_cmg(M)).total_edges == 0


class TestConstructionFiles:
    def test_sidecar(self, tmp_path):
        built = C.h_b(12, 3, 4)
        sidecar = write_construction(built, tmp_path / "hb.h3")
        assert read_h3(tmp_path / "hb.h3") == built.hypergraph
        data = json.loads(sidecar.read_text())
        assert data["claimed_edges"] == built.claimed_edges == data["edges"]
        assert data["part_labels"]["0"] == "U"
        assert data["params"] == {"n": 12, "s": 3, "t": 4}


class TestFormulas:
    def test_emc(self):
        assert formula_emc(6, 1, 3) == 10
        assert formula_emc(9, 1, 3) == 28
        assert formula_emc(9, 0, 3) == 0

    def test_emc_range(self):
        assert emc_in_range(5, 1, 3)
        assert not emc_in_range(4, 1, 3)
        # out-of-range arguments still evaluate
        assert formula_emc(4, 1, 3) == 10

    def test_gerbner(self):
        assert formula_gerbner_small_s(10, 1, 3) == 36
        assert formula_gerbner_small_s(10, 2, 3) == 64
        assert formula_gerbner_small_s(10, 0, 3) == 0
        assert formula_gerbner_linear(10, 2, 3) == 2 * 28
        with pytest.raises(InputError):
            formula_gerbner_small_s(10, 1, 1)

    def test_gerbner_range(self):
        assert gerbner_in_range(8, 1, 3)
        assert not gerbner_in_range(7, 1, 3)

    def test_conjecture_value(self):
        for n, s in ((20, 3), (60, 5)):
            assert formula_conjecture15(C.f_star_partition(4), n, s) == 2 * ((n - s) * (n - s - 1) // 2)
        for t in (3, 4):
            assert formula_conjecture15(C.full_star(t), 30, 4) == 4 * C.turan_count(26, t - 1)

    def test_conjecture_preconditions(self):
        with pytest.raises(InputError):
            formula_conjecture15(C.f32(), 20, 3)
        with pytest.raises(InputError):
            formula_conjecture15(C.f_star_partition(5), 20, 3)

    def test_f32_range(self):
        assert f32_in_range(12, 1) and not f32_in_range(47, 2)


def test_random_colored_is_seeded():
    a = format_cmg(random_colored(random.Random(1), 5, 2, 0.5))
    b = format_cmg(random_colored(random.Random(1), 5, 2, 0.5))
    assert a == b
