"""The Laplacian simplex P_D and exact lattice-point machinery.

A :class:`LatticeSimplex` keeps the ambient vertices (rows of L(D), lying in
the hyperplane ``sum(x) == 0``) together with a full-dimensional copy made by
deleting one coordinate.  Membership, duals and counting all work on the
full-dimensional copy with exact rationals.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

from .digraph import CycleSpec, Digraph, is_strongly_connected
from .errors import BudgetExceededError, DegenerateSimplexError, OriginNotInteriorError
from .exact_linalg import (
    RationalVector,
    determinant,
    rank,
    scaled_inverse,
    smith_normal_form,
    solve_rational,
    transpose,
)
from .trees import cycle_tree_counts, laplacian_matrix, tree_counts

DEFAULT_SCAN_BUDGET = 10**8

Point = tuple[int, ...]


def scan_budget() -> int:
    """Point-scan budget, overridable through ``LAPSIMPLEX_BUDGET``."""
    raw = os.environ.get("LAPSIMPLEX_BUDGET")
    return int(raw) if raw else DEFAULT_SCAN_BUDGET


@dataclass(frozen=True)
class LatticeSimplex:
    """A lattice (n-1)-simplex with vertices in ``{x in Z^n : sum(x) == 0}``.

    ``drop_col`` (0-based) is the coordinate deleted to get the
    full-dimensional, unimodularly equivalent copy ``full_vertices``.
    """

    vertices: tuple[Point, ...]
    drop_col: int = -1

    def __post_init__(self):
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        n = len(verts)
        if n < 1 or any(len(v) != n for v in verts):
            raise ValueError("need n vertices in Z^n")
        if any(sum(v) != 0 for v in verts):
            raise ValueError("vertices must lie in the hyperplane sum(x) == 0")
        dc = self.drop_col if self.drop_col >= 0 else n - 1
        if not 0 <= dc < n:
            raise ValueError(f"drop_col {self.drop_col} out of range")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "drop_col", dc)
        if n > 1 and determinant(self.lifted) == 0:
            raise DegenerateSimplexError(rank(verts), n)

    @classmethod
    def from_full_dimensional(cls, vertices: Sequence[Sequence[int]]) -> "LatticeSimplex":
        """Embed a full-dimensional simplex in Z^d into the sum-zero hyperplane of Z^{d+1}."""
        return cls(tuple(tuple(v) + (-sum(v),) for v in vertices))

    def with_drop_col(self, col: int) -> "LatticeSimplex":
        return LatticeSimplex(self.vertices, col)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def full_vertices(self) -> tuple[Point, ...]:
        dc = self.drop_col
        return tuple(v[:dc] + v[dc + 1:] for v in self.vertices)

    @cached_property
    def lifted(self) -> list[list[int]]:
        """Rows ``(full_vertex_i, 1)``."""
        return [list(v) + [1] for v in self.full_vertices]

    @cached_property
    def _inverse(self) -> tuple[list[list[int]], int]:
        # (N, det) with barycentric coordinates lambda = N @ (x, t) / det
        return scaled_inverse(transpose(self.lifted))

    def to_full(self, x: Sequence[int]) -> Point:
        dc = self.drop_col
        return tuple(x[:dc]) + tuple(x[dc + 1:])

    def to_ambient(self, y: Sequence[int]) -> Point:
        dc = self.drop_col
        return tuple(y[:dc]) + (-sum(y),) + tuple(y[dc:])


def laplacian_simplex(D: Digraph) -> LatticeSimplex:
    """P_D: the convex hull of the rows of L(D)."""
    L = laplacian_matrix(D)
    if tree_counts(D).total == 0:
        raise DegenerateSimplexError(rank(L), D.n)
    return LatticeSimplex(tuple(tuple(row) for row in L))


def _bary_numerators(P: LatticeSimplex, y: Sequence[int], t: int) -> list[int]:
    N, _ = P._inverse
    rhs = list(y) + [t]
    return [sum(a * b for a, b in zip(row, rhs)) for row in N]


def barycentric(P: LatticeSimplex, x: Sequence[int], t: int = 1) -> RationalVector | None:
    """Barycentric coordinates of ambient point ``x`` in ``t*P``.

    Returns the rationals ``lambda`` with ``sum(lambda_i v_i) == x`` and
    ``sum(lambda) == t``, or ``None`` if ``x`` lies outside ``t*P``.
    """
    if len(x) != P.ambient_dim:
        raise ValueError(f"point has dimension {len(x)}, expected {P.ambient_dim}")
    if sum(x) != 0:
        return None
    mu = _bary_numerators(P, P.to_full(x), t)
    if any(m < 0 for m in mu):
        return None
    det = P._inverse[1]
    return tuple(Fraction(m, det) for m in mu)


def origin_coordinates(P: LatticeSimplex) -> RationalVector | None:
    return barycentric(P, (0,) * P.ambient_dim, 1)


def origin_is_interior(P: LatticeSimplex) -> bool:
    lam = origin_coordinates(P)
    return lam is not None and all(x > 0 for x in lam)


def normalized_volume(P: LatticeSimplex) -> int:
    """d! times the Euclidean volume, from the edge-vector determinant.

    When the origin lies in P the cone triangulation ``sum_i Vol(conv(0, F_i))``
    is evaluated as well and must agree.
    """
    fv = P.full_vertices
    base = fv[0]
    vol = abs(determinant([[a - b for a, b in zip(v, base)] for v in fv[1:]]))
    if origin_coordinates(P) is not None:
        tri = triangulated_volume(P)
        if tri != vol:
            raise ArithmeticError(f"volume mismatch: determinant {vol} vs triangulation {tri}")
    return vol


def triangulated_volume(P: LatticeSimplex) -> int:
    """Sum of normalized volumes of the cones ``conv(0, F_i)`` over all facets."""
    fv = P.full_vertices
    return sum(abs(determinant([v for j, v in enumerate(fv) if j != i])) for i in range(len(fv)))


# -- lattice points -------------------------------------------------------------


def _scan(P: LatticeSimplex, t: int, count_only: bool, budget: int):
    """Pruned bounding-box scan of ``t*P`` in full-dimensional coordinates.

    Coordinates are fixed one at a time; for each barycentric inequality the
    remaining coordinates are relaxed to their box, which gives an interval
    for the current coordinate.  At the last coordinate the interval is exact.
    """
    N, _ = P._inverse
    d = P.dim
    fv = P.full_vertices
    lo = [t * min(v[k] for v in fv) for k in range(d)]
    hi = [t * max(v[k] for v in fv) for k in range(d)]
    rows = len(N)
    # best case contribution of coordinates k.. to inequality i
    rest = [[0] * (d + 1) for _ in range(rows)]
    for i in range(rows):
        for k in range(d - 1, -1, -1):
            a = N[i][k]
            rest[i][k] = rest[i][k + 1] + max(a * lo[k], a * hi[k])
    start = [N[i][d] * t for i in range(rows)]
    points: list[tuple[int, ...]] = []
    total = 0
    visited = 0
    prefix = [0] * d

    def interval(k: int, s: list[int]) -> tuple[int, int]:
        a_lo, a_hi = lo[k], hi[k]
        for i in range(rows):
            a = N[i][k]
            slack = s[i] + rest[i][k + 1]
            if a > 0:
                a_lo = max(a_lo, -(slack // a))
            elif a < 0:
                a_hi = min(a_hi, slack // -a)
            elif slack < 0:
                return 1, 0
        return a_lo, a_hi

    def walk(k: int, s: list[int]) -> None:
        nonlocal total, visited
        a_lo, a_hi = interval(k, s)
        if a_lo > a_hi:
            return
        if k == d - 1:
            total += a_hi - a_lo + 1
            if not count_only:
                for x in range(a_lo, a_hi + 1):
                    prefix[k] = x
                    points.append(tuple(prefix))
            return
        visited += a_hi - a_lo + 1
        if visited > budget:
            raise BudgetExceededError(f"lattice-point scan of {t}P", visited, budget)
        col = [N[i][k] for i in range(rows)]
        for x in range(a_lo, a_hi + 1):
            prefix[k] = x
            walk(k + 1, [si + ci * x for si, ci in zip(s, col)])

    if d == 0:
        return 1 if count_only else [()]
    walk(0, start)
    return total if count_only else points


def parallelepiped_points(P: LatticeSimplex) -> list[tuple[Point, int]]:
    """Lattice points of the half-open parallelepiped spanned by the lifted vertices.

    Returns ``(full_point, height)`` pairs, exactly ``Vol(P)`` of them.  The
    points are produced from representatives of ``Z^{d+1} / W Z^{d+1}`` (``W``
    has the lifted vertices as columns) read off the Smith form of ``W``.
    """
    W = transpose(P.lifted)
    N, det = P._inverse
    snf = smith_normal_form(W)
    dim = len(W)
    gens = []
    for k, dk in enumerate(snf.diag):
        if dk > 1:
            col = [snf.U_inv[r][k] for r in range(dim)]
            g = [sum(a * b for a, b in zip(row, col)) % det for row in N]
            gens.append((dk, g))
    out = []
    for ys in itertools.product(*(range(dk) for dk, _ in gens)):
        num = [0] * dim
        for y, (_, g) in zip(ys, gens):
            if y:
                num = [a + y * b for a, b in zip(num, g)]
        num = [a % det for a in num]
        coords = []
        for r in range(dim):
            s = sum(W[r][i] * num[i] for i in range(dim))
            assert s % det == 0
            coords.append(s // det)
        out.append((tuple(coords[:-1]), coords[-1]))
    out.sort(key=lambda ph: (ph[1], ph[0]))
    return out


def _cone_points(P: LatticeSimplex, t: int) -> list[Point]:
    # every point of the cone at height t is p + sum m_i w_i, uniquely
    fv = P.full_vertices
    d = P.dim
    pts = []
    for p, h in parallelepiped_points(P):
        if h > t:
            continue
        for combo in itertools.combinations_with_replacement(range(len(fv)), t - h):
            y = list(p)
            for i in combo:
                v = fv[i]
                for k in range(d):
                    y[k] += v[k]
            pts.append(tuple(y))
    return pts


def lattice_points(
    P: LatticeSimplex,
    t: int = 1,
    method: str = "scan",
    budget: int | None = None,
) -> list[Point]:
    """All lattice points of ``t*P`` in ambient coordinates, sorted.

    ``method="scan"`` walks the (pruned) bounding box of the full-dimensional
    copy; ``method="cone"`` translates fundamental-parallelepiped points by
    nonnegative vertex combinations, which costs time proportional to the
    output.
    """
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    if t == 0:
        return [(0,) * P.ambient_dim]
    if method == "scan":
        full = _scan(P, t, False, scan_budget() if budget is None else budget)
    elif method == "cone":
        full = _cone_points(P, t)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(P.to_ambient(y) for y in full)


def count_lattice_points(P: LatticeSimplex, t: int, budget: int | None = None) -> int:
    """``|tP ∩ Z^d|`` by the scan, without materializing the points."""
    if t == 0:
        return 1
    return _scan(P, t, True, scan_budget() if budget is None else budget)


def interior_lattice_points(P: LatticeSimplex) -> list[Point]:
    out = []
    for x in lattice_points(P, 1):
        lam = barycentric(P, x, 1)
        if lam is not None and all(l > 0 for l in lam):
            out.append(x)
    return out


def is_terminal_fano(P: LatticeSimplex) -> bool:
    """True iff the only lattice points of P are its vertices and the origin."""
    if not origin_is_interior(P):
        raise OriginNotInteriorError("origin is not interior to P; terminal Fano is undefined")
    origin = (0,) * P.ambient_dim
    return set(lattice_points(P, 1)) == set(P.vertices) | {origin}


# -- duality and reflexivity ----------------------------------------------------


def dual_vertices(P: LatticeSimplex) -> list[RationalVector]:
    """Vertices of the polar dual of the full-dimensional copy.

    Entry ``i`` solves ``a . v_j == 1`` for every vertex ``j != i`` (the facet
    opposite vertex ``i``).
    """
    lam = origin_coordinates(P)
    if lam is None:
        raise OriginNotInteriorError("origin lies outside P")
    for i, l in enumerate(lam):
        if l <= 0:
            raise OriginNotInteriorError(
                f"origin is not interior: barycentric coordinate {i + 1} is {l}"
            )
    fv = P.full_vertices
    ones = [1] * P.dim
    return [
        solve_rational([v for j, v in enumerate(fv) if j != i], ones)
        for i in range(len(fv))
    ]


def is_reflexive(P: LatticeSimplex) -> bool:
    try:
        duals = dual_vertices(P)
    except OriginNotInteriorError:
        return False
    return all(x.denominator == 1 for a in duals for x in a)


def is_reflexive_divisibility(D: Digraph) -> bool | None:
    """Reflexivity from tree counts: every ``c_i`` divides ``c(D)``.

    Returns ``None`` when the criterion does not apply (``D`` not strongly
    connected, or the ``c_i`` share a common factor).
    """
    tc = tree_counts(D)
    if not is_strongly_connected(D) or tc.total == 0:
        return None
    g = 0
    for x in tc.c:
        g = gcd(g, x)
    if g != 1:
        return None
    return all(tc.total % x == 0 for x in tc.c)


@dataclass(frozen=True)
class CycleReflexivity:
    """Verdict for ``C_n^S`` read off the combinatorial characterization.

    ``condition`` is 1 (S empty), 3 (S = [n], n odd) or 4 (proper S passing
    the divisibility test); ``None`` when not reflexive.  ``rotation`` is the
    shift applied so that vertex 1 is not a tail, and ``K`` the longest run of
    consecutive tails (condition 4 only).
    """

    reflexive: bool
    condition: int | None
    rotation: int = 0
    K: int | None = None


def cycle_reflexivity(spec: CycleSpec) -> CycleReflexivity:
    n, S = spec.n, spec.S
    if not S:
        return CycleReflexivity(True, 1)
    if len(S) == n:
        return CycleReflexivity(n % 2 == 1, 3 if n % 2 == 1 else None)
    r = next(r for r in range(n) if 1 + r not in S)
    rotated = spec.rotated(r)
    K = 0
    run = 0
    for v in range(1, n + 1):
        run = run + 1 if v in rotated.S else 0
        K = max(K, run)
    total = cycle_tree_counts(rotated).total
    ok = all(total % k == 0 for k in range(1, K + 2))
    return CycleReflexivity(ok, 4 if ok else None, r, K)
