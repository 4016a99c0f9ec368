"""One-stop analysis of a single digraph."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from .digraph import Digraph, is_strongly_connected, validate_assumptions
from .ehrhart import hstar_parallelepiped, is_symmetric, is_unimodal
from .errors import BudgetExceededError, DegenerateSimplexError
from .exact_linalg import rank
from .idp import is_idp
from .simplex import (
    is_reflexive,
    is_reflexive_divisibility,
    is_terminal_fano,
    laplacian_simplex,
    normalized_volume,
    origin_is_interior,
)
from .trees import laplacian_matrix, tree_counts


@dataclass
class AnalysisReport:
    n: int
    edge_count: int
    tree_counts: list[int]
    complexity: int
    strongly_connected: bool
    is_simplex: bool
    dimension: int
    normalized_volume: int | None = None
    reflexive: bool | None = None
    reflexive_divisibility: bool | None = None
    hstar: list[int] | None = None
    symmetric: bool | None = None
    unimodal: bool | None = None
    terminal_fano: bool | None = None
    idp: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def consistent(self) -> bool:
        """Volume equals complexity and sum(h*); with the origin interior,
        reflexive iff h* symmetric."""
        if not self.is_simplex:
            return True
        if not self.normalized_volume == self.complexity == sum(self.hstar):
            return False
        return not self.strongly_connected or self.reflexive == self.symmetric


def analyze(
    D: Digraph,
    *,
    idp: bool = False,
    idp_max_level: int | None = None,
    drop_col: int | None = None,
    notes: list[str] | None = None,
) -> AnalysisReport:
    """Compute every invariant of ``P_D``.

    A digraph without spanning converging trees yields a report with
    ``is_simplex=False`` and the Laplacian rank as ``dimension`` instead of
    raising.  IDP is computed only when asked for.
    """
    tc = tree_counts(D)
    report = AnalysisReport(
        n=D.n,
        edge_count=D.edge_count,
        tree_counts=list(tc.c),
        complexity=tc.total,
        strongly_connected=is_strongly_connected(D),
        is_simplex=False,
        dimension=rank(laplacian_matrix(D)),
        notes=list(notes or []),
    )
    report.notes.extend(
        f"assumption: {msg}" for msg in validate_assumptions(D)
    )
    try:
        P = laplacian_simplex(D)
    except DegenerateSimplexError as e:
        report.notes.append(f"not a simplex: {e}")
        return report
    if drop_col is not None:
        P = P.with_drop_col(drop_col)
    report.is_simplex = True
    report.dimension = P.dim
    report.normalized_volume = normalized_volume(P)
    report.reflexive = is_reflexive(P)
    report.reflexive_divisibility = is_reflexive_divisibility(D)
    h = hstar_parallelepiped(P)
    report.hstar = list(h.coeffs)
    report.symmetric = is_symmetric(h)
    report.unimodal = is_unimodal(h)
    if origin_is_interior(P):
        report.terminal_fano = is_terminal_fano(P)
    if idp:
        try:
            r = is_idp(P, max_level=idp_max_level)
            report.idp = {
                "verdict": r.verdict,
                "checked_levels": list(r.checked_levels),
                "witness": None if r.witness is None else {
                    "level": r.witness[0],
                    "point": list(r.witness[1]),
                },
            }
        except BudgetExceededError as e:
            report.idp = {"verdict": None, "refused": str(e)}
    return report


def format_report(r: AnalysisReport) -> str:
    def fmt(v: Any) -> str:
        if v is None:
            return "n/a"
        if isinstance(v, bool):
            return "yes" if v else "no"
        if isinstance(v, list):
            return "(" + ", ".join(map(str, v)) + ")"
        return str(v)

    lines = [
        f"vertices            {r.n}",
        f"edges               {r.edge_count}",
        f"tree counts c_i     {fmt(r.tree_counts)}",
        f"complexity c(D)     {r.complexity}",
        f"strongly connected  {fmt(r.strongly_connected)}",
        f"simplex             {fmt(r.is_simplex)}",
        f"dimension           {r.dimension}",
    ]
    if r.is_simplex:
        lines += [
            f"normalized volume   {r.normalized_volume}",
            f"reflexive (facets)  {fmt(r.reflexive)}",
            f"reflexive (c_i|c)   {fmt(r.reflexive_divisibility)}",
            f"h*-vector           {fmt(r.hstar)}",
            f"symmetric h*        {fmt(r.symmetric)}",
            f"unimodal h*         {fmt(r.unimodal)}",
            f"terminal Fano       {fmt(r.terminal_fano)}",
        ]
        if r.idp is not None:
            verdict = r.idp.get("verdict")
            extra = ""
            if r.idp.get("witness"):
                w = r.idp["witness"]
                extra = f"  witness at level {w['level']}: {fmt(w['point'])}"
            elif "refused" in r.idp:
                extra = f"  ({r.idp['refused']})"
            lines.append(f"IDP                 {fmt(verdict)}{extra}")
    for note in r.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
