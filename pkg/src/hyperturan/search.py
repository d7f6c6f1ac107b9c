"""Exact ex(n, F ∪ {M_{s+1}}) for tiny n by branch and bound over triples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .colored import budget_from_env
from .containment import contains
from .hypergraph import (
    BudgetExceeded,
    Hypergraph3,
    InputError,
    _search_matching,
    has_matching_of_size,
)

MAX_N = 7
MAX_PATTERN_VERTICES = 6
DEFAULT_BUDGET = 20_000_000


@dataclass(frozen=True)
class SearchInstance:
    n: int
    s: int | None = None
    family: tuple[Hypergraph3, ...] = ()
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(self.family))
        if not 0 <= self.n <= MAX_N:
            raise InputError(f"n must lie in [0, {MAX_N}], got {self.n}")
        if self.s is not None and self.s < 0:
            raise InputError(f"s must be nonnegative, got {self.s}")
        for F in self.family:
            if F.n > MAX_PATTERN_VERTICES:
                raise InputError(f"patterns may have at most {MAX_PATTERN_VERTICES} vertices")

    @property
    def node_budget(self) -> int:
        return self.budget if self.budget is not None else budget_from_env(DEFAULT_BUDGET)


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: Hypergraph3
    nodes: int
    exact: bool


def automorphisms(F: Hypergraph3) -> list[tuple[int, ...]]:
    return [
        perm for perm in permutations(range(F.n))
        if all(tuple(sorted(perm[v] for v in e)) in F.edge_set for e in F.edges)
    ]


class _Pattern:
    """Pattern prepared for embedding checks through a freshly added triple.

    An anchor sends pattern edge ``f`` onto the new triple in a fixed
    order; anchors equivalent under automorphisms of F are kept once.
    """

    def __init__(self, F: Hypergraph3):
        self.F = F
        auts = automorphisms(F)
        seen = set()
        self.anchors = []
        for f in F.edges:
            for order in permutations(f):
                key = min(tuple(a[v] for v in order) for a in auts)
                if key in seen:
                    continue
                seen.add(key)
                self.anchors.append(self._plan(order))

    def _plan(self, order: tuple[int, int, int]):
        placed = list(order)
        rest = [v for v in range(self.F.n) if v not in order]
        # rest ordered so that edges close as early as possible
        steps = []
        while rest:
            x = max(rest, key=lambda v: (sum(1 for e in self.F.edges if v in e and
                                             all(w in placed or w == v for w in e)), -v))
            rest.remove(x)
            placed.append(x)
            steps.append(x)
        closes = [[] for _ in range(len(steps) + 1)]
        position = {v: i for i, v in enumerate(placed)}
        for e in self.F.edges:
            last = max(position[v] for v in e)
            closes[max(0, last - 2)].append(e)
        return order, steps, closes

    def embeds_through(self, host: set, e: tuple[int, int, int], n: int) -> bool:
        img = [0] * self.F.n
        free_all = [v for v in range(n) if v not in e]

        def ok(edges) -> bool:
            return all(tuple(sorted((img[a], img[b], img[c]))) in host for a, b, c in edges)

        def extend(steps, closes, depth, free) -> bool:
            if depth == len(steps):
                return True
            x = steps[depth]
            for i, h in enumerate(free):
                img[x] = h
                if ok(closes[depth + 1]) and extend(steps, closes, depth + 1, free[:i] + free[i + 1:]):
                    return True
            return False

        for order, steps, closes in self.anchors:
            for x, h in zip(order, e):
                img[x] = h
            if ok(closes[0]) and extend(steps, closes, 0, free_all):
                return True
        return False


def _triples_colex(n: int) -> list[tuple[int, int, int]]:
    return sorted(combinations(range(n), 3), key=lambda t: (t[2], t[1], t[0]))


class _Searcher:
    def __init__(self, inst: SearchInstance, collect: bool = False, target: int | None = None):
        self.inst = inst
        self.n = inst.n
        self.s = inst.s
        self.patterns = [_Pattern(F) for F in inst.family if F.n <= inst.n]
        self.triples = _triples_colex(inst.n)
        self.masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in self.triples]
        self.budget = inst.node_budget
        self.collect = collect
        self.best = -1 if target is None else target
        self.best_edges: list[tuple[int, int, int]] = []
        self.found: list[tuple[tuple[int, int, int], ...]] = []
        self.nodes = 0
        self.chosen: list[int] = []
        self.host: set = set()

    def admissible(self, i: int) -> bool:
        e = self.triples[i]
        if self.s is not None:
            m = self.masks[i]
            disjoint = [(j, self.masks[j]) for j in self.chosen if not self.masks[j] & m]
            if _search_matching(disjoint, self.s) is not None:
                return False
        if self.patterns:
            self.host.add(e)
            hit = any(p.embeds_through(self.host, e, self.n) for p in self.patterns)
            self.host.discard(e)
            if hit:
                return False
        return True

    def record(self) -> None:
        edges = tuple(self.triples[j] for j in self.chosen)
        count = len(edges)
        if self.collect:
            if count > self.best:
                self.best, self.found = count, []
            if count == self.best:
                self.found.append(edges)
        elif count > self.best:
            self.best, self.best_edges = count, list(edges)

    def rec(self, pos: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"extremal search exceeded {self.budget} nodes", self.nodes)
        count = len(self.chosen)
        bound = count + len(self.triples) - pos
        if bound < self.best or (bound == self.best and not self.collect):
            return
        if pos == len(self.triples):
            self.record()
            return
        if self.admissible(pos):
            self.chosen.append(pos)
            self.host.add(self.triples[pos])
            self.rec(pos + 1)
            self.host.discard(self.triples[pos])
            self.chosen.pop()
        self.rec(pos + 1)

    def run(self) -> None:
        # the empty 3-graph is always admissible
        if self.collect:
            if self.best <= 0:
                self.best, self.found = 0, [()]
        elif self.best < 0:
            self.best, self.best_edges = 0, []
        if not self.triples or not self.admissible(0):
            return
        # any nonempty 3-graph has an isomorphic copy containing {0,1,2}
        self.chosen.append(0)
        self.host.add(self.triples[0])
        self.rec(1)
        self.host.clear()
        self.chosen.clear()


def solve(inst: SearchInstance) -> SearchResult:
    """Maximum number of triples on ``n`` vertices avoiding the family and ``M_{s+1}``."""
    searcher = _Searcher(inst)
    exact = True
    try:
        searcher.run()
    except BudgetExceeded:
        exact = False
    return SearchResult(
        max(searcher.best, 0),
        Hypergraph3(inst.n, searcher.best_edges),
        searcher.nodes,
        exact,
    )


def canonical_form(H: Hypergraph3) -> tuple[tuple[int, int, int], ...]:
    """Lexicographically least relabelled edge list over all vertex permutations."""
    best = None
    for perm in permutations(range(H.n)):
        form = tuple(sorted(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in H.edges))
        if best is None or form < best:
            best = form
    return best if best is not None else ()


def enumerate_extremal(inst: SearchInstance) -> list[Hypergraph3]:
    """All extremal 3-graphs for the instance, one per isomorphism class."""
    if inst.n > 6:
        raise InputError("full enumeration is limited to n <= 6")
    first = solve(inst)
    if not first.exact:
        raise BudgetExceeded("extremal value could not be established within budget", first.nodes)
    searcher = _Searcher(inst, collect=True, target=first.value)
    searcher.run()
    classes: dict[tuple, Hypergraph3] = {}
    for edges in searcher.found:
        H = Hypergraph3(inst.n, edges)
        key = canonical_form(H)
        if key not in classes:
            classes[key] = Hypergraph3(inst.n, key)
    return [classes[k] for k in sorted(classes)]


def is_admissible(inst: SearchInstance, H: Hypergraph3) -> bool:
    if inst.s is not None and has_matching_of_size(H, inst.s + 1):
        return False
    return not any(contains(F, H) for F in inst.family)


def direct_enumeration(inst: SearchInstance) -> int:
    """Reference value: scan edge subsets from largest to smallest.

    Covers all ``2^C(n,3)`` subsets in the worst case; only for ``n <= 5``.
    """
    if inst.n > 5:
        raise InputError("direct enumeration is limited to n <= 5")
    triples = list(combinations(range(inst.n), 3))
    for size in range(len(triples), -1, -1):
        for edges in combinations(triples, size):
            if is_admissible(inst, Hypergraph3(inst.n, edges)):
                return size
    return 0
