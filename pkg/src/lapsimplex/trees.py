"""Counting spanning converging trees (arborescences pointing at a root).

Three routes: cofactors of the Laplacian (Matrix-Tree theorem), brute-force
enumeration of out-edge choices, and a closed form for cycle digraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .digraph import CycleSpec, Digraph
from .errors import BudgetExceededError
from .exact_linalg import IntMatrix, minor_determinant

DEFAULT_TREE_BUDGET = 10**7


@dataclass(frozen=True)
class TreeCounts:
    """``c[i]`` is the number of spanning trees converging to vertex ``i``."""

    c: tuple[int, ...]

    @property
    def total(self) -> int:
        """The complexity c(D)."""
        return sum(self.c)

    @property
    def strongly_connected(self) -> bool:
        return all(x > 0 for x in self.c)


def laplacian_matrix(D: Digraph) -> IntMatrix:
    """Outdegree matrix minus adjacency matrix; rows sum to zero."""
    L = [[-x for x in row] for row in D.mult]
    for i in range(D.n):
        L[i][i] = D.outdeg(i)
    return L


def tree_counts(D: Digraph) -> TreeCounts:
    L = laplacian_matrix(D)
    if D.n == 1:
        return TreeCounts((1,))
    return TreeCounts(tuple(minor_determinant(L, i, i) for i in range(D.n)))


def tree_counts_bruteforce(
    D: Digraph,
    budget: int = DEFAULT_TREE_BUDGET,
    simple_support: bool = False,
) -> TreeCounts:
    """Count converging trees by trying every choice of one out-edge per vertex.

    Each non-root vertex picks a head among its out-neighbours; the choice
    is weighted by the edge multiplicity unless ``simple_support`` is set.
    A choice is a tree iff following heads from every vertex reaches the root.
    Refuses with :class:`BudgetExceededError` rather than returning a partial
    count.
    """
    n = D.n
    heads = [[(j, k) for j, k in enumerate(D.mult[i]) if k] for i in range(n)]
    counts = []
    for root in range(n):
        others = [v for v in range(n) if v != root]
        size = prod(len(heads[v]) for v in others)
        if size > budget:
            raise BudgetExceededError(f"brute-force trees to root {root + 1}", size, budget)
        if any(not heads[v] for v in others):
            counts.append(0)
            continue
        total = 0
        succ = [-1] * n
        weight_of = [1] * n
        # odometer over head choices
        idx = [0] * len(others)
        while True:
            for pos, v in enumerate(others):
                j, k = heads[v][idx[pos]]
                succ[v] = j
                weight_of[v] = 1 if simple_support else k
            if _reaches_root(succ, root, n):
                total += prod(weight_of[v] for v in others)
            pos = len(others) - 1
            while pos >= 0:
                idx[pos] += 1
                if idx[pos] < len(heads[others[pos]]):
                    break
                idx[pos] = 0
                pos -= 1
            if pos < 0:
                break
        counts.append(total)
    return TreeCounts(tuple(counts))


def _reaches_root(succ: list[int], root: int, n: int) -> bool:
    state = [0] * n  # 0 unknown, 1 on current path, 2 reaches root
    state[root] = 2
    for start in range(n):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = succ[v]
        if state[v] == 1:
            return False
        for u in path:
            state[u] = 2
    return True


def cycle_tree_counts(spec: CycleSpec) -> TreeCounts:
    """Closed form for ``C_n^S``: ``c_i = K_i + 1``.

    ``K_i`` is the length of the run ``i+1, i+2, ...`` (cyclically) contained
    in ``S``, capped at ``n - 1``.
    """
    n, S = spec.n, spec.S
    c = []
    for i in range(1, n + 1):
        K = 0
        while K < n - 1 and (i + K) % n + 1 in S:
            K += 1
        c.append(K + 1)
    return TreeCounts(tuple(c))
