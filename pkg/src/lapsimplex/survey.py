"""Batch runs over cycle digraphs and over digraphs with a fixed underlying graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import (
    CycleSpec,
    Digraph,
    SimpleGraph,
    all_cycle_specs,
    cycle_digraph,
    enumerate_orientations,
    enumerate_simple_digraphs_over,
    is_strongly_connected,
)
from .ehrhart import hstar_parallelepiped, is_symmetric
from .errors import BudgetExceededError
from .idp import IDP_EXCEPTIONS, is_idp
from .parallel import parallel_map
from .simplex import cycle_reflexivity, is_reflexive, is_terminal_fano, laplacian_simplex
from .trees import tree_counts

SURVEY_SIZE_LIMIT = 8
SEARCH_EDGE_LIMIT = 16

# Cycle digraphs whose simplex has lattice points besides vertices and origin.
TERMINAL_EXCEPTIONS = (
    CycleSpec(3, frozenset({1})),
    CycleSpec(3, frozenset({1, 2})),
    CycleSpec(3, frozenset({1, 2, 3})),
    CycleSpec(4, frozenset({1, 3})),
    CycleSpec(4, frozenset({1, 2, 3})),
    CycleSpec(4, frozenset({1, 2, 3, 4})),
)


@dataclass(frozen=True)
class CycleRow:
    spec: CycleSpec
    terminal_fano: bool
    reflexive_theorem: bool
    condition: int | None
    reflexive_facets: bool
    symmetric_hstar: bool
    idp: bool | None

    @property
    def mismatch(self) -> bool:
        return not (self.reflexive_theorem == self.reflexive_facets == self.symmetric_hstar)


def survey_cycle(spec: CycleSpec) -> CycleRow:
    P = laplacian_simplex(cycle_digraph(spec))
    verdict = cycle_reflexivity(spec)
    facets = is_reflexive(P)
    return CycleRow(
        spec=spec,
        terminal_fano=is_terminal_fano(P),
        reflexive_theorem=verdict.reflexive,
        condition=verdict.condition,
        reflexive_facets=facets,
        symmetric_hstar=is_symmetric(hstar_parallelepiped(P)),
        idp=is_idp(P).verdict if facets else None,
    )


@dataclass
class CycleSurvey:
    rows: list[CycleRow]

    @property
    def mismatches(self) -> list[CycleRow]:
        return [r for r in self.rows if r.mismatch]

    def non_terminal_classes(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted({r.spec.canonical() for r in self.rows if not r.terminal_fano})

    def reflexive_idp_classes(self) -> list[tuple[int, tuple[int, ...]]]:
        """Rotation classes of reflexive IDP cycles with S nonempty."""
        return sorted({r.spec.canonical() for r in self.rows if r.idp and r.spec.S})


def survey_cycles(
    n_min: int, n_max: int, jobs: int | None = 1, size_limit: int = SURVEY_SIZE_LIMIT
) -> CycleSurvey:
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    if n_max > size_limit:
        raise BudgetExceededError("cycle survey", n_max, size_limit)
    specs = all_cycle_specs(n_min, n_max)
    return CycleSurvey(parallel_map(survey_cycle, specs, jobs))


def format_survey(s: CycleSurvey) -> str:
    def yn(v):
        return "-" if v is None else ("yes" if v else "no")

    lines = [f"{'digraph':<22}{'terminal':>9}{'refl(thm)':>10}{'cond':>5}"
             f"{'refl(fac)':>10}{'sym h*':>7}{'IDP':>5}"]
    for r in s.rows:
        lines.append(
            f"{str(r.spec):<22}{yn(r.terminal_fano):>9}{yn(r.reflexive_theorem):>10}"
            f"{r.condition or '-':>5}{yn(r.reflexive_facets):>10}"
            f"{yn(r.symmetric_hstar):>7}{yn(r.idp):>5}"
        )
    fmt = lambda cls: ", ".join(str(CycleSpec(n, frozenset(S))) for n, S in cls) or "none"
    lines += [
        "",
        f"route mismatches: {len(s.mismatches)}",
        f"not terminal Fano (up to rotation): {fmt(s.non_terminal_classes())}",
        f"reflexive IDP with S nonempty (up to rotation): {fmt(s.reflexive_idp_classes())}",
    ]
    return "\n".join(lines)


def survey_summary(s: CycleSurvey) -> dict:
    cls = lambda items: [{"n": n, "S": list(S)} for n, S in items]
    return {
        "cases": len(s.rows),
        "route_mismatches": len(s.mismatches),
        "non_terminal_fano": cls(s.non_terminal_classes()),
        "reflexive_idp_nonempty": cls(s.reflexive_idp_classes()),
        "expected_non_terminal_fano": cls(sorted({e.canonical() for e in TERMINAL_EXCEPTIONS})),
        "expected_reflexive_idp_nonempty": cls(sorted({e.canonical() for e in IDP_EXCEPTIONS})),
        "rows": [
            {
                "n": r.spec.n,
                "S": sorted(r.spec.S),
                "terminal_fano": r.terminal_fano,
                "reflexive_theorem": r.reflexive_theorem,
                "condition": r.condition,
                "reflexive_facets": r.reflexive_facets,
                "symmetric_hstar": r.symmetric_hstar,
                "idp": r.idp,
            }
            for r in s.rows
        ],
    }


# -- underlying-graph searches --------------------------------------------------


def reflexive_simplex(D: Digraph) -> bool:
    """True iff ``P_D`` is a reflexive (n-1)-simplex."""
    if tree_counts(D).total == 0:
        return False
    return is_reflexive(laplacian_simplex(D))


@dataclass
class SearchResult:
    mode: str
    examined: int
    strongly_connected: int
    hits: list[Digraph] = field(default_factory=list)


def search_underlying(
    G: SimpleGraph, mode: str = "orientations", jobs: int | None = 1
) -> SearchResult:
    """Find every digraph of the chosen family over ``G`` with reflexive ``P_D``.

    ``mode`` is ``"orientations"`` (one direction per edge) or ``"simple"``
    (one direction or both per edge).
    """
    e = len(G.edges)
    if e > SEARCH_EDGE_LIMIT:
        raise BudgetExceededError("underlying-graph search", e, SEARCH_EDGE_LIMIT)
    if mode == "orientations":
        family = list(enumerate_orientations(G))
    elif mode == "simple":
        family = list(enumerate_simple_digraphs_over(G))
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    flags = parallel_map(reflexive_simplex, family, jobs)
    return SearchResult(
        mode=mode,
        examined=len(family),
        strongly_connected=sum(map(is_strongly_connected, family)),
        hits=[D for D, ok in zip(family, flags) if ok],
    )
