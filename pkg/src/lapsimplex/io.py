"""JSON reading and writing of digraphs and graphs, plus built-in inputs.

Digraph files look like ``{"n": 3, "edges": [[1, 2, 1], [2, 3], ...]}`` with
1-based ``[tail, head, multiplicity]`` triples (multiplicity defaults to 1).
Graph files use ``[i, j]`` pairs.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .digraph import Digraph, SimpleGraph
from .errors import InputError

NAMED_DIGRAPHS = {
    "example1": '{"n": 3, "edges": [[1, 2], [2, 3], [3, 1], [3, 2]]}',
    "D1prime": (
        '{"n": 5, "edges": [[1, 2], [1, 3], [1, 4], [2, 5], [3, 1], '
        '[4, 5], [5, 2], [5, 3], [5, 4]]}'
    ),
    "D2prime-printed": (
        '{"n": 6, "edges": [[1, 3], [2, 4], '
        '[3, 4, 3], [3, 5, 3], [3, 6, 3], [4, 3, 3], [4, 5, 3], [4, 6, 3], '
        '[5, 3, 3], [5, 4, 3], [5, 6, 3], [6, 3, 3], [6, 4, 3], [6, 5, 3]]}'
    ),
    "D2prime-bidirected": (
        '{"n": 6, "edges": [[1, 3], [3, 1], [2, 4], [4, 2], '
        '[3, 4, 3], [3, 5, 3], [3, 6, 3], [4, 3, 3], [4, 5, 3], [4, 6, 3], '
        '[5, 3, 3], [5, 4, 3], [5, 6, 3], [6, 3, 3], [6, 4, 3], [6, 5, 3]]}'
    ),
}

NAMED_GRAPHS = {
    "G1": '{"n": 5, "edges": [[1, 2], [1, 3], [1, 4], [2, 5], [3, 5], [4, 5]]}',
    "G2": (
        '{"n": 6, "edges": [[1, 3], [2, 4], [3, 4], [3, 5], [3, 6], '
        '[4, 5], [4, 6], [5, 6]]}'
    ),
}

# Diagnostic notes attached to named inputs when analyzed.
NAMED_NOTES = {
    "D2prime-printed": (
        "As drawn, vertices 1 and 2 have indegree 0, so the digraph is not strongly "
        "connected and its Laplacian simplex cannot be reflexive, although it is "
        "offered as a reflexive example over G2. See D2prime-bidirected for the "
        "variant with the bridges 1<->3 and 2<->4 bidirected."
    ),
    "D2prime-bidirected": (
        "Hypothetical repair of D2prime-printed (bridges 1<->3, 2<->4 bidirected); "
        "not asserted to be the intended digraph."
    ),
}


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def _vertex_count(obj: Any) -> int:
    if not isinstance(obj, dict):
        raise InputError("top level must be a JSON object with fields 'n' and 'edges'")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"field 'n': expected a positive integer, got {n!r}")
    if not isinstance(obj.get("edges"), list):
        raise InputError("field 'edges': expected a list")
    return n


def _label(v: Any, n: int, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"{where}: vertex {v!r} is not an integer")
    if not 1 <= v <= n:
        raise InputError(f"{where}: vertex {v} out of range 1..{n}")
    return v - 1


def parse_digraph(text: str) -> Digraph:
    obj = _load(text)
    n = _vertex_count(obj)
    m = [[0] * n for _ in range(n)]
    for k, e in enumerate(obj["edges"]):
        where = f"edges[{k}]"
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise InputError(f"{where}: expected [tail, head] or [tail, head, multiplicity]")
        i = _label(e[0], n, where)
        j = _label(e[1], n, where)
        mult = e[2] if len(e) == 3 else 1
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise InputError(f"{where}: multiplicity must be a positive integer, got {mult!r}")
        if i == j:
            raise InputError(f"{where}: loop at vertex {i + 1}")
        m[i][j] += mult
    return Digraph(n, tuple(map(tuple, m)))


def serialize_digraph(D: Digraph) -> str:
    edges = [[i + 1, j + 1, k] for i, j, k in D.edges()]
    return json.dumps({"n": D.n, "edges": edges})


def parse_graph(text: str) -> SimpleGraph:
    obj = _load(text)
    n = _vertex_count(obj)
    edges = set()
    for k, e in enumerate(obj["edges"]):
        where = f"edges[{k}]"
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"{where}: expected [i, j]")
        i = _label(e[0], n, where)
        j = _label(e[1], n, where)
        if i == j:
            raise InputError(f"{where}: loop at vertex {i + 1}")
        edges.add((min(i, j), max(i, j)))
    return SimpleGraph(n, frozenset(edges))


def serialize_graph(G: SimpleGraph) -> str:
    return json.dumps({"n": G.n, "edges": [[i + 1, j + 1] for i, j in G.sorted_edges()]})


def _named(source: str, table: dict[str, str]) -> str | None:
    if not source.startswith("paper:"):
        return None
    name = source.split(":", 1)[1]
    if name not in table:
        raise InputError(f"unknown built-in input {source!r}; choose from {sorted(table)}")
    return table[name]


def read_source(source: str, table: dict[str, str]) -> str:
    text = _named(source, table)
    if text is not None:
        return text
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {source}: {e.strerror}") from None


def load_digraph(source: str) -> Digraph:
    """Digraph from a file path or a ``paper:NAME`` built-in."""
    return parse_digraph(read_source(source, NAMED_DIGRAPHS))


def load_graph(source: str) -> SimpleGraph:
    return parse_graph(read_source(source, NAMED_GRAPHS))


def named_note(source: str) -> str | None:
    if source.startswith("paper:"):
        return NAMED_NOTES.get(source.split(":", 1)[1])
    return None
