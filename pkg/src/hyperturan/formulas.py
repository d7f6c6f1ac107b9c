"""Closed-form bound evaluators.

Each evaluator computes its formula for any arguments; where a statement
carries a range condition, a companion ``*_in_range`` predicate reports
whether the arguments satisfy it.
"""

from __future__ import annotations

from math import comb

from .coloring import q_value
from .constructions import h_conjecture_size
from .hypergraph import Hypergraph3, InputError


def formula_emc(n: int, s: int, r: int) -> int:
    """``max{C(r(s+1)-1, r), C(n,r) - C(n-s, r)}``."""
    return max(comb(r * (s + 1) - 1, r), comb(n, r) - comb(n - s, r))


def emc_in_range(n: int, s: int, r: int) -> bool:
    return r >= 3 and s >= 1 and n >= r * (s + 1) - 1


def formula_gerbner_small_s(n: int, s: int, r: int) -> int:
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    return sum(comb(s, i) * comb(n - s, r - i) for i in range(1, s + 1))


def formula_gerbner_linear(n: int, s: int, r: int) -> int:
    """Leading term ``s*C(n-s, r-1)``; the lower-order error is not modelled."""
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    return s * comb(n - s, r - 1)


def gerbner_in_range(n: int, s: int, r: int) -> bool:
    return n >= (2 * s + 1) * r - s


def formula_conjecture15(F: Hypergraph3, n: int, s: int) -> int:
    """Largest ``|E(H_i)|`` over ``i = 1..q(F)``."""
    q = q_value(F)
    if q == 0 or q > s:
        raise InputError(f"need 1 <= q(F) <= s, got q(F)={q}, s={s}")
    return max(h_conjecture_size(F, i, n, s) for i in range(1, int(q) + 1))


def f32_in_range(n: int, s: int) -> bool:
    return n >= 12 * s * s
