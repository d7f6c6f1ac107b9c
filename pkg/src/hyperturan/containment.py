"""Subhypergraph containment: does a small pattern F embed into a host H?

The generic engine is a backtracking matcher with bitset domains and
forward checking.  Patterns on four vertices go through an exhaustive
scan of all 4-subsets instead, and matching patterns are delegated to the
matching solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .hypergraph import Hypergraph3, InputError, find_matching, iter_bits

SCAN_LIMIT = 10**8


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map; ``mapping[x]`` is the host image of pattern vertex ``x``."""

    mapping: tuple[int, ...]

    def image(self, edge: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.mapping[v] for v in edge))

    def is_valid(self, F: Hypergraph3, H: Hypergraph3) -> bool:
        if len(self.mapping) != F.n or len(set(self.mapping)) != F.n:
            return False
        if any(not 0 <= h < H.n for h in self.mapping):
            return False
        return all(self.image(e) in H.edge_set for e in F.edges)


def is_matching_pattern(F: Hypergraph3) -> bool:
    """Pairwise disjoint edges and no isolated vertices."""
    used = 0
    for m in F.edge_masks:
        if m & used:
            return False
        used |= m
    return F.m > 0 and used.bit_count() == F.n


def _fill_isolated(F: Hypergraph3, H: Hypergraph3, partial: dict[int, int]) -> Embedding:
    used = set(partial.values())
    free = (h for h in range(H.n) if h not in used)
    mapping = [partial.get(x) for x in range(F.n)]
    for x in range(F.n):
        if mapping[x] is None:
            mapping[x] = next(free)
    return Embedding(tuple(mapping))


def _twin_classes(F: Hypergraph3) -> list[int]:
    """Class id per vertex; x ~ y when swapping x and y is an automorphism of F."""
    cls = list(range(F.n))
    for x, y in combinations(range(F.n), 2):
        if cls[y] != y:
            continue
        swap = {x: y, y: x}
        if all(tuple(sorted(swap.get(v, v) for v in e)) in F.edge_set for e in F.edges):
            cls[y] = cls[x]
    return cls


class _Matcher:
    def __init__(self, F: Hypergraph3, H: Hypergraph3, symmetry: bool):
        self.F, self.H = F, H
        n_f = F.n
        self.active = [x for x in range(n_f) if F.degrees[x] > 0]
        self.f_codeg = F.pair_masks
        self.edges_at = [[] for _ in range(n_f)]
        for a, b, c in F.edges:
            self.edges_at[a].append((b, c))
            self.edges_at[b].append((a, c))
            self.edges_at[c].append((a, b))
        self.twin = _twin_classes(F) if symmetry else list(range(n_f))
        self.full = (1 << H.n) - 1
        host_maxcod = [max((m.bit_count() for m in row), default=0) for row in H.pair_masks]
        f_maxcod = [max((m.bit_count() for m in row), default=0) for row in F.pair_masks]
        self.init_domain = {}
        for x in self.active:
            d = 0
            for h in range(H.n):
                if H.degrees[h] >= F.degrees[x] and host_maxcod[h] >= f_maxcod[x]:
                    d |= 1 << h
            self.init_domain[x] = d
        self._cod_cache: dict[tuple[int, int], int] = {}
        self.nodes = 0

    def codeg_at_least(self, h: int, c: int) -> int:
        key = (h, c)
        got = self._cod_cache.get(key)
        if got is None:
            row = self.H.pair_masks[h]
            got = 0
            for y in range(self.H.n):
                if row[y].bit_count() >= c:
                    got |= 1 << y
            self._cod_cache[key] = got
        return got

    def order(self, fixed: Iterable[int]) -> list[int]:
        F = self.F
        placed = list(fixed)
        rest = [x for x in self.active if x not in placed]
        while rest:
            def key(x):
                linked = sum(1 for y in placed if self.f_codeg[x][y])
                closing = sum(1 for b, c in self.edges_at[x] if b in placed and c in placed)
                return (linked > 0, F.degrees[x], closing, linked, -x)

            x = max(rest, key=key)
            placed.append(x)
            rest.remove(x)
        return placed

    def assign(self, x: int, h: int, phi: dict[int, int], dom: dict[int, int]) -> dict[int, int] | None:
        """Domains after placing ``x -> h``, or ``None`` if some domain empties."""
        H = self.H
        pm = H.pair_masks[h]
        new = dict(dom)
        clear = ~(1 << h)
        for y in new:
            new[y] &= clear
        for y in new:
            c = self.f_codeg[x][y].bit_count()
            if c:
                new[y] &= self.codeg_at_least(h, c)
            if self.twin[y] == self.twin[x] and y != x:
                new[y] &= ~((1 << (h + 1)) - 1)
        for b, c in self.edges_at[x]:
            b_in, c_in = b in phi, c in phi
            if b_in and c_in:
                if not pm[phi[b]] >> phi[c] & 1:
                    return None
            elif b_in:
                new[c] &= pm[phi[b]]
            elif c_in:
                new[b] &= pm[phi[c]]
            else:
                db, dc = new[b], new[c]
                keep_b = 0
                for y in iter_bits(db):
                    if pm[y] & dc:
                        keep_b |= 1 << y
                keep_c = 0
                for z in iter_bits(dc):
                    if pm[z] & keep_b:
                        keep_c |= 1 << z
                new[b], new[c] = keep_b, keep_c
        for y in new:
            if not new[y]:
                return None
        return new

    def run(self, fixed: Mapping[int, int] | None = None) -> dict[int, int] | None:
        fixed = dict(fixed or {})
        order = self.order(fixed)
        dom = {x: self.init_domain[x] for x in self.active}
        phi: dict[int, int] = {}
        for x, h in fixed.items():
            if x not in dom or not dom[x] >> h & 1:
                return None
            del dom[x]
            dom = self.assign(x, h, phi, dom)
            if dom is None:
                return None
            phi[x] = h
        start = len(fixed)

        def rec(pos: int, dom: dict[int, int]) -> bool:
            self.nodes += 1
            if pos == len(order):
                return True
            x = order[pos]
            cand = dom.pop(x)
            for h in iter_bits(cand):
                nxt = self.assign(x, h, phi, dom)
                if nxt is None:
                    continue
                phi[x] = h
                if rec(pos + 1, nxt):
                    return True
                del phi[x]
            dom[x] = cand
            return False

        return phi if rec(start, dom) else None


def find_embedding_backtrack(
    F: Hypergraph3, H: Hypergraph3, fixed: Mapping[int, int] | None = None
) -> Embedding | None:
    """Generic backtracking matcher; ``fixed`` pre-assigns some pattern vertices."""
    if F.n > H.n:
        return None
    if F.m == 0:
        return _fill_isolated(F, H, dict(fixed or {}))
    matcher = _Matcher(F, H, symmetry=not fixed)
    phi = matcher.run(fixed)
    if phi is None:
        return None
    return _fill_isolated(F, H, phi)


def _edge_tensor(H: Hypergraph3) -> np.ndarray:
    E = np.zeros((H.n, H.n, H.n), dtype=np.int8)
    if H.m:
        e = np.asarray(H.edges)
        for p in permutations(range(3)):
            E[e[:, p[0]], e[:, p[1]], e[:, p[2]]] = 1
    return E


def dense_four_sets(H: Hypergraph3, k: int) -> Iterable[tuple[int, int, int, int]]:
    """Yield every 4-set of ``H`` spanning at least ``k`` edges, in lex order."""
    n = H.n
    if n < 4:
        return
    if k <= 0:
        yield from combinations(range(n), 4)
        return
    E = _edge_tensor(H)
    for a in range(n - 3):
        Ea = E[a]
        for b in range(a + 1, n - 2):
            u = Ea[b, b + 1:]
            if k >= 3 and not u.any():
                # any 4-set with >= 3 edges puts its two smallest vertices in an edge
                continue
            cnt = u[:, None] + u[None, :] + Ea[b + 1:, b + 1:] + E[b, b + 1:, b + 1:]
            cnt = np.triu(cnt, 1)
            hits = np.argwhere(cnt >= k)
            for i, j in hits:
                yield (a, b, b + 1 + int(i), b + 1 + int(j))


def find_embedding_scan(F: Hypergraph3, H: Hypergraph3) -> Embedding | None:
    """Exhaustive 4-subset scan for patterns on exactly four vertices.

    All 3-graphs on four vertices with the same number of edges are
    isomorphic, so F embeds iff some 4-set spans at least ``e(F)`` edges.
    """
    if F.n != 4:
        raise InputError("scan applies to 4-vertex patterns only")
    for quad in dense_four_sets(H, F.m):
        for perm in permutations(quad):
            emb = Embedding(perm)
            if emb.is_valid(F, H):
                return emb
        raise AssertionError("4-set with enough edges must host the pattern")
    return None


def find_embedding(F: Hypergraph3, H: Hypergraph3) -> Embedding | None:
    if F.n > H.n:
        return None
    if is_matching_pattern(F):
        matching = find_matching(H, F.m)
        if matching is None:
            return None
        mapping: dict[int, int] = {}
        for f, e in zip(F.edges, matching):
            mapping.update(zip(f, e))
        return _fill_isolated(F, H, mapping)
    if F.n == 4 and comb(H.n, 4) <= SCAN_LIMIT:
        return find_embedding_scan(F, H)
    return find_embedding_backtrack(F, H)


def contains(F: Hypergraph3, H: Hypergraph3) -> bool:
    return find_embedding(F, H) is not None


def family_free(Fs: Iterable[Hypergraph3], H: Hypergraph3) -> list[bool]:
    """Containment verdict per family member; ``H`` avoids the family iff all are False."""
    return [contains(F, H) for F in Fs]


def brute_force_contains(F: Hypergraph3, H: Hypergraph3) -> bool:
    """Reference check over all injective maps; only for tiny inputs."""
    for image in permutations(range(H.n), F.n):
        if all(tuple(sorted(image[v] for v in e)) in H.edge_set for e in F.edges):
            return True
    return False
