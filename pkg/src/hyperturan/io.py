"""Text formats for hypergraphs (``.h3``) and coloured multigraphs (``.cmg``).

``.h3``: first line ``n m``, then ``m`` lines ``u v w`` with ``u < v < w``
in ascending lexicographic order.

``.cmg``: first line ``n s``; then per layer a line ``m_i`` followed by
``m_i`` lines ``u v`` with ``u < v``, ascending.
"""

from __future__ import annotations

import json
from pathlib import Path

from .colored import ColoredMultigraph
from .constructions import BuiltConstruction
from .hypergraph import Graph2, Hypergraph3, InputError


class FormatError(InputError):
    pass


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None


def _lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if ln.strip()]


def parse_h3(text: str) -> Hypergraph3:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty .h3 input")
    n, m = _ints(lines[0], 2, 1)
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    prev = None
    for i, line in enumerate(lines[1:], 2):
        e = tuple(_ints(line, 3, i))
        if not 0 <= e[0] < e[1] < e[2] < n:
            raise FormatError(f"line {i}: triple {e} not strictly increasing within [0,{n})")
        if prev is not None and e <= prev:
            kind = "duplicate" if e == prev else "out-of-order"
            raise FormatError(f"line {i}: {kind} triple {e}")
        edges.append(e)
        prev = e
    return Hypergraph3(n, edges)


def format_h3(H: Hypergraph3) -> str:
    out = [f"{H.n} {H.m}"]
    out += [f"{a} {b} {c}" for a, b, c in H.edges]
    return "\n".join(out) + "\n"


def read_h3(path) -> Hypergraph3:
    return parse_h3(Path(path).read_text())


def write_h3(H: Hypergraph3, path) -> None:
    Path(path).write_text(format_h3(H))


def parse_cmg(text: str) -> ColoredMultigraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty .cmg input")
    n, s = _ints(lines[0], 2, 1)
    pos = 1
    layers = []
    for _ in range(s):
        if pos >= len(lines):
            raise FormatError("missing layer header")
        (m,) = _ints(lines[pos], 1, pos + 1)
        pos += 1
        pairs = []
        prev = None
        for _ in range(m):
            if pos >= len(lines):
                raise FormatError("layer ended early")
            e = tuple(_ints(lines[pos], 2, pos + 1))
            if not 0 <= e[0] < e[1] < n:
                raise FormatError(f"line {pos + 1}: pair {e} not increasing within [0,{n})")
            if prev is not None and e <= prev:
                raise FormatError(f"line {pos + 1}: duplicate or out-of-order pair {e}")
            pairs.append(e)
            prev = e
            pos += 1
        layers.append(Graph2(n, pairs))
    if pos != len(lines):
        raise FormatError("trailing lines after the last layer")
    return ColoredMultigraph(n, layers)


def format_cmg(M: ColoredMultigraph) -> str:
    out = [f"{M.n} {M.s}"]
    for G in M.layers:
        out.append(str(G.m))
        out += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(out) + "\n"


def read_cmg(path) -> ColoredMultigraph:
    return parse_cmg(Path(path).read_text())


def write_cmg(M: ColoredMultigraph, path) -> None:
    Path(path).write_text(format_cmg(M))


def construction_sidecar(built: BuiltConstruction) -> dict:
    return {
        "name": built.name,
        "params": built.params,
        "n": built.hypergraph.n,
        "edges": built.hypergraph.m,
        "claimed_edges": built.claimed_edges,
        "part_labels": {str(v): p for v, p in sorted(built.part_labels.items())},
    }


def write_construction(built: BuiltConstruction, path) -> Path:
    """Write the ``.h3`` file and a ``.json`` sidecar next to it."""
    path = Path(path)
    write_h3(built.hypergraph, path)
    sidecar = path.with_suffix(".json")
    sidecar.write_text(json.dumps(construction_sidecar(built), indent=2) + "\n")
    return sidecar
