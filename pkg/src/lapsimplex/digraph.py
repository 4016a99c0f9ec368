"""Finite loop-free multidigraphs and the families built from them.

Vertices are 0-based inside a :class:`Digraph`; the 1-based labels used in
JSON files and on the command line are converted in :mod:`lapsimplex.io`.
:class:`CycleSpec` is the exception: its tail set ``S`` keeps the 1-based
labels of the cycle construction, since that is how cycles are named
(``C_5^{1,3}``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Digraph:
    """Loop-free multidigraph on ``n`` vertices.

    ``mult[i][j]`` is the number of edges with tail ``i`` and head ``j``.
    """

    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a digraph needs at least one vertex")
        rows = tuple(tuple(int(x) for x in row) for row in self.mult)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"multiplicity matrix must be {self.n}x{self.n}")
        for i, row in enumerate(rows):
            if row[i] != 0:
                raise ValueError(f"loop at vertex {i}")
            if any(x < 0 for x in row):
                raise ValueError(f"negative multiplicity in row {i}")
        object.__setattr__(self, "mult", rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Digraph":
        """Build from 0-based ``(tail, head)`` or ``(tail, head, multiplicity)``."""
        m = [[0] * n for _ in range(n)]
        for e in edges:
            tail, head = e[0], e[1]
            k = e[2] if len(e) > 2 else 1
            if tail == head:
                raise ValueError(f"loop at vertex {tail}")
            m[tail][head] += k
        return cls(n, tuple(map(tuple, m)))

    def edges(self) -> list[tuple[int, int, int]]:
        """``(tail, head, multiplicity)`` triples in row-major order."""
        return [
            (i, j, k)
            for i, row in enumerate(self.mult)
            for j, k in enumerate(row)
            if k
        ]

    @property
    def edge_count(self) -> int:
        return sum(map(sum, self.mult))

    def outdeg(self, i: int) -> int:
        return sum(self.mult[i])

    def indeg(self, i: int) -> int:
        return sum(row[i] for row in self.mult)

    @property
    def is_simple(self) -> bool:
        return all(x <= 1 for row in self.mult for x in row)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; ``edges`` holds 0-based pairs ``(i, j)``, ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CycleSpec:
    """The cycle digraph ``C_n^S``: a forward n-cycle plus backward edges.

    ``S`` holds 1-based tails of the backward edges.
    """

    n: int
    S: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("cycle digraphs need n >= 3")
        S = frozenset(int(s) for s in self.S)
        if not S <= set(range(1, self.n + 1)):
            raise ValueError(f"S must be a subset of 1..{self.n}, got {sorted(S)}")
        object.__setattr__(self, "S", S)

    def rotated(self, r: int) -> "CycleSpec":
        """Relabel vertex ``i`` as ``i - r`` (mod n)."""
        return CycleSpec(self.n, frozenset((s - 1 - r) % self.n + 1 for s in self.S))

    def canonical(self) -> tuple[int, tuple[int, ...]]:
        """Key identifying the spec up to rotation of labels."""
        return (self.n, min(tuple(sorted(self.rotated(r).S)) for r in range(self.n)))

    def __str__(self) -> str:
        inner = ",".join(map(str, sorted(self.S)))
        return f"C_{self.n}^{{{inner}}}"


@dataclass(frozen=True)
class StarSpec:
    """Nondecreasing positive weights ``q`` of a star-shaped digraph."""

    q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(int(x) for x in self.q)
        if not q:
            raise ValueError("q must be nonempty")
        if any(x < 1 for x in q):
            raise ValueError("q entries must be positive")
        if list(q) != sorted(q):
            raise ValueError("q must be nondecreasing")
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class NonUnimodalSpec:
    """Parameters of the symmetric non-unimodal cycle family."""

    alpha: int
    beta: int
    k: int
    strict: bool = True

    def __post_init__(self):
        if min(self.alpha, self.beta, self.k) < 1:
            raise ValueError("alpha, beta, k must be positive")
        if self.strict and not (
            self.alpha <= self.beta <= self.k - 1 and self.alpha + self.beta <= self.k + 1
        ):
            raise ValueError(
                f"need alpha <= beta <= k-1 and alpha + beta <= k+1, got "
                f"({self.alpha}, {self.beta}, {self.k})"
            )

    @property
    def n(self) -> int:
        return 6 * (self.k + 1) - 2 * self.alpha - self.beta

    def tails(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        a, b = self.alpha, self.beta
        s1 = frozenset(1 + 3 * h for h in range(a))
        s2 = frozenset(2 + 3 * h for h in range(a))
        s3 = frozenset(3 * a + 1 + 2 * h for h in range(b - a))
        return s1, s2, s3


def underlying_graph(D: Digraph) -> SimpleGraph:
    edges = {
        (i, j)
        for i in range(D.n)
        for j in range(i + 1, D.n)
        if D.mult[i][j] + D.mult[j][i] > 0
    }
    return SimpleGraph(D.n, frozenset(edges))


def _reachable(D: Digraph, start: int, reverse: bool = False) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in range(D.n):
            k = D.mult[v][u] if reverse else D.mult[u][v]
            if k and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_strongly_connected(D: Digraph) -> bool:
    return len(_reachable(D, 0)) == D.n and len(_reachable(D, 0, reverse=True)) == D.n


def validate_assumptions(D: Digraph) -> list[str]:
    """Standing assumptions that ``D`` violates, as human-readable notes."""
    notes = []
    for i in range(D.n):
        if D.outdeg(i) == 0 and D.indeg(i) == 0 and D.n > 1:
            notes.append(f"vertex {i + 1} is isolated")
    if not is_strongly_connected(D):
        notes.append("not strongly connected")
    return notes


def cycle_digraph(spec: CycleSpec) -> Digraph:
    n = spec.n
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][(i + 1) % n] = 1
    for s in spec.S:
        # tail s points back to s-1; tail 1 points to n
        m[s - 1][(s - 2) % n] = 1
    return Digraph(n, tuple(map(tuple, m)))


def star_digraph(spec: StarSpec) -> Digraph:
    """Center 0 sends ``q_i`` edges to leaf ``i``; every leaf sends one back."""
    n = len(spec.q) + 1
    m = [[0] * n for _ in range(n)]
    for i, qi in enumerate(spec.q, start=1):
        m[0][i] = qi
        m[i][0] = 1
    return Digraph(n, tuple(map(tuple, m)))


def non_unimodal_cycle_spec(spec: NonUnimodalSpec) -> CycleSpec:
    s1, s2, s3 = spec.tails()
    return CycleSpec(spec.n, s1 | s2 | s3)


def non_unimodal_digraph(spec: NonUnimodalSpec) -> Digraph:
    return cycle_digraph(non_unimodal_cycle_spec(spec))


def complete_digraph(n: int) -> Digraph:
    if n < 2:
        raise ValueError("complete digraph needs n >= 2")
    return Digraph(n, tuple(tuple(int(i != j) for j in range(n)) for i in range(n)))


def enumerate_orientations(G: SimpleGraph) -> Iterator[Digraph]:
    """All ``2^|E|`` oriented graphs with underlying graph ``G``.

    For each edge ``i < j`` the choices are tried in the order ``i->j``,
    ``j->i``; earlier edges vary slowest.
    """
    edges = G.sorted_edges()
    for choice in itertools.product((0, 1), repeat=len(edges)):
        m = [[0] * G.n for _ in range(G.n)]
        for (i, j), c in zip(edges, choice):
            if c == 0:
                m[i][j] = 1
            else:
                m[j][i] = 1
        yield Digraph(G.n, tuple(map(tuple, m)))


def enumerate_simple_digraphs_over(G: SimpleGraph) -> Iterator[Digraph]:
    """All ``3^|E|`` simple digraphs with underlying graph ``G``.

    Per edge ``i < j`` the choices run ``i->j``, ``j->i``, both.
    """
    edges = G.sorted_edges()
    for choice in itertools.product((0, 1, 2), repeat=len(edges)):
        m = [[0] * G.n for _ in range(G.n)]
        for (i, j), c in zip(edges, choice):
            if c != 1:
                m[i][j] = 1
            if c != 0:
                m[j][i] = 1
        yield Digraph(G.n, tuple(map(tuple, m)))


def all_cycle_specs(n_min: int, n_max: int) -> list[CycleSpec]:
    """Every ``C_n^S`` for ``n_min <= n <= n_max``, S in lexicographic order."""
    specs = []
    for n in range(n_min, n_max + 1):
        for r in range(n + 1):
            for S in itertools.combinations(range(1, n + 1), r):
                specs.append(CycleSpec(n, frozenset(S)))
    return specs
