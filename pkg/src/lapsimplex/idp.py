"""Integer decomposition property for lattice simplices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .digraph import CycleSpec, StarSpec, all_cycle_specs, cycle_digraph
from .errors import BudgetExceededError
from .parallel import parallel_map
from .simplex import (
    LatticeSimplex,
    Point,
    barycentric,
    cycle_reflexivity,
    laplacian_simplex,
    lattice_points,
)


@dataclass(frozen=True)
class IdpReport:
    """Outcome of :func:`is_idp`.

    ``witness`` is ``(k, x)`` with ``x`` a lattice point of ``kP`` that is not
    a sum of a point of ``P`` and a point of ``(k-1)P``.
    """

    verdict: bool
    witness: tuple[int, Point] | None = None
    checked_levels: tuple[int, ...] = field(default=())


def default_levels(P: LatticeSimplex) -> range:
    return range(2, max(2, P.dim - 1) + 1)


def _decomposes(P: LatticeSimplex, x: Point, k: int, base: list[Point]) -> bool:
    for p in base:
        y = tuple(a - b for a, b in zip(x, p))
        if barycentric(P, y, k - 1) is not None:
            return True
    return False


def is_idp(P: LatticeSimplex, max_level: int | None = None) -> IdpReport:
    """Check decomposability of every point of ``kP`` for ``k = 2..max(2, d-1)``.

    ``max_level`` raises (or lowers) the top level.  Levels are checked in
    increasing order, so passing level ``k-1`` means every point of
    ``(k-1)P`` is already a sum of ``k-1`` points of ``P``.
    """
    top = max(2, P.dim - 1) if max_level is None else max_level
    base = lattice_points(P, 1)
    checked = []
    for k in range(2, top + 1):
        checked.append(k)
        for x in lattice_points(P, k, method="cone"):
            if not _decomposes(P, x, k, base):
                return IdpReport(False, (k, x), tuple(checked))
    return IdpReport(True, None, tuple(checked))


def witness_is_valid(P: LatticeSimplex, k: int, x: Point) -> bool:
    """Exhaustive pair search: True iff ``x`` in ``kP`` has no split ``p + q``."""
    if barycentric(P, x, k) is None:
        return False
    lower = set(lattice_points(P, k - 1, method="scan"))
    return not any(
        tuple(a - b for a, b in zip(x, p)) in lower for p in lattice_points(P, 1)
    )


def bds_filter(spec: StarSpec | Sequence[int]) -> bool:
    """Necessary condition for ``Delta_(1,q)`` to be IDP.

    ``1/q_j + sum_{i != j} frac(q_i / q_j) == 1`` must hold for every ``j``;
    ``False`` means the simplex is certainly not IDP.  Only meaningful for
    reflexive weights: ``q = (2,)`` fails the identity yet gives a segment.
    """
    q = spec.q if isinstance(spec, StarSpec) else tuple(spec)
    for j, qj in enumerate(q):
        s = Fraction(1, qj)
        for i, qi in enumerate(q):
            if i != j:
                s += Fraction(qi % qj, qj)
        if s != 1:
            return False
    return True


# Reflexive cycle digraphs with S nonempty that are IDP, up to rotation.
IDP_EXCEPTIONS = (
    CycleSpec(3, frozenset({1})),
    CycleSpec(3, frozenset({1, 2})),
    CycleSpec(3, frozenset({1, 2, 3})),
    CycleSpec(4, frozenset({1, 3})),
)


def expected_cycle_idp(spec: CycleSpec) -> bool:
    if not spec.S:
        return True
    return spec.canonical() in {e.canonical() for e in IDP_EXCEPTIONS}


def _idp_for_spec(spec: CycleSpec) -> IdpReport:
    return is_idp(laplacian_simplex(cycle_digraph(spec)))


def classify_idp_cycles(
    n_max: int, n_min: int = 3, jobs: int | None = 1, size_limit: int = 8
) -> list[tuple[CycleSpec, IdpReport]]:
    """Run :func:`is_idp` on every reflexive ``C_n^S`` with ``n_min <= n <= n_max``."""
    if n_max > size_limit:
        raise BudgetExceededError("IDP cycle classification", n_max, size_limit)
    specs = [s for s in all_cycle_specs(n_min, n_max) if cycle_reflexivity(s).reflexive]
    return list(zip(specs, parallel_map(_idp_for_spec, specs, jobs)))
