"""Self-check of the reproduced results, one named criterion at a time.

Each criterion returns ``(passed, detail)``; :func:`verify_paper` times them
and collects :class:`CriterionResult` records.  Simplices touched by the
reflexivity-related criteria are logged so the symmetry check can reuse them.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .analysis import analyze
from .digraph import (
    CycleSpec,
    Digraph,
    NonUnimodalSpec,
    StarSpec,
    all_cycle_specs,
    cycle_digraph,
    enumerate_orientations,
    enumerate_simple_digraphs_over,
    is_strongly_connected,
    non_unimodal_digraph,
    star_digraph,
)
from .ehrhart import (
    HStarVector,
    hstar_delta1q,
    hstar_parallelepiped,
    is_reflexive_weights,
    is_symmetric,
    is_unimodal,
    predicted_nonunimodal_hstar,
)
from .idp import classify_idp_cycles, expected_cycle_idp
from .io import NAMED_DIGRAPHS, load_digraph, load_graph, named_note
from .simplex import (
    LatticeSimplex,
    cycle_reflexivity,
    is_reflexive,
    is_terminal_fano,
    laplacian_simplex,
    lattice_points,
    normalized_volume,
    origin_is_interior,
)
from .survey import TERMINAL_EXCEPTIONS, search_underlying
from .trees import TreeCounts, tree_counts, tree_counts_bruteforce

CORPUS_SEED = 20240601
CORPUS_SIZE = 200
DROP_COL_SAMPLE = 50
EXAMPLE1_MARKED = {
    0: {(-1, 0), (-1, 1), (-1, 2), (0, 0), (1, -1)},
    1: {(-1, 2), (0, -1), (1, 0), (0, 0), (0, 1)},
    2: {(-1, -1), (0, -1), (1, -1), (0, 0), (0, 1)},
}
EXAMPLE1_HSTAR_NONUNIMODAL = (1, 1, 1, 1, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1)


def random_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[Digraph]:
    """Seeded random digraphs with 2..6 vertices and multiplicities up to 3."""
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        n = rng.randint(2, 6)
        p = rng.choice((0.3, 0.5, 0.7))
        m = [
            [rng.randint(1, 3) if i != j and rng.random() < p else 0 for j in range(n)]
            for i in range(n)
        ]
        out.append(Digraph(n, tuple(map(tuple, m))))
    return out


@dataclass
class Hooks:
    """Replaceable internals, used for negative controls."""

    tree_counts: Callable[[Digraph], TreeCounts] = tree_counts


@dataclass
class Context:
    hooks: Hooks
    corpus: list[Digraph] = field(default_factory=random_corpus)
    # (label, reflexive by facets, h* symmetric)
    symmetry_log: list[tuple[str, bool, bool]] = field(default_factory=list)
    done: set[str] = field(default_factory=set)

    _hstar_cache: dict = field(default_factory=dict)

    def hstar(self, P: LatticeSimplex) -> HStarVector:
        if P not in self._hstar_cache:
            self._hstar_cache[P] = hstar_parallelepiped(P)
        return self._hstar_cache[P]

    def log(self, label: str, P: LatticeSimplex) -> bool:
        refl = is_reflexive(P)
        self.symmetry_log.append((label, refl, is_symmetric(self.hstar(P))))
        return refl

    def simplices(self) -> list[tuple[Digraph, LatticeSimplex]]:
        return [(D, laplacian_simplex(D)) for D in self.corpus if tree_counts(D).total > 0]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


def _matrix_tree(ctx: Context) -> tuple[bool, str]:
    bad = [
        D for D in ctx.corpus
        if ctx.hooks.tree_counts(D).c != tree_counts_bruteforce(D).c
    ]
    return not bad, f"{len(ctx.corpus) - len(bad)}/{len(ctx.corpus)} digraphs agree"


def _volume(ctx: Context) -> tuple[bool, str]:
    cases = [D for D, _ in ctx.simplices()]
    cases += [load_digraph(f"paper:{name}") for name in NAMED_DIGRAPHS]
    bad = [D for D in cases if normalized_volume(laplacian_simplex(D)) != tree_counts(D).total]
    return not bad, f"{len(cases) - len(bad)}/{len(cases)} simplices have volume c(D)"


def _interior_origin(ctx: Context) -> tuple[bool, str]:
    bad = 0
    cases = ctx.simplices()
    for D, P in cases:
        bad += origin_is_interior(P) != is_strongly_connected(D)
    return bad == 0, f"{len(cases)} simplices, {bad} disagreements"


def _example1(ctx: Context) -> tuple[bool, str]:
    D = load_digraph("paper:example1")
    P = laplacian_simplex(D)
    c = tree_counts(D).c
    vol = normalized_volume(P)
    pts = lattice_points(P, 1)
    marked_ok = all(
        {P.with_drop_col(col).to_full(x) for x in pts} == marked
        for col, marked in EXAMPLE1_MARKED.items()
    )
    ok = c == (1, 2, 1) and vol == 4 and len(pts) == 5 and marked_ok
    return ok, f"c={c}, volume {vol}, {len(pts)} points, marked points match {marked_ok}"


def _bidirected_cycles(ctx: Context) -> tuple[bool, str]:
    wrong = []
    for n in range(3, 10):
        spec = CycleSpec(n, frozenset(range(1, n + 1)))
        refl = ctx.log(str(spec), laplacian_simplex(cycle_digraph(spec)))
        if refl != (n % 2 == 1) or cycle_reflexivity(spec).reflexive != refl:
            wrong.append(n)
    h = hstar_parallelepiped(laplacian_simplex(cycle_digraph(CycleSpec(3, frozenset({1, 2, 3})))))
    ok = not wrong and h.coeffs == (1, 7, 1)
    return ok, f"wrong n: {wrong or 'none'}; h*(C_3^{{1,2,3}}) = {h.coeffs}"


def _terminal_fano(ctx: Context) -> tuple[bool, str]:
    found = set()
    large_bad = 0
    for spec in all_cycle_specs(3, 7):
        if not is_terminal_fano(laplacian_simplex(cycle_digraph(spec))):
            found.add(spec.canonical())
            large_bad += spec.n >= 5
    expected = {e.canonical() for e in TERMINAL_EXCEPTIONS}
    ok = found == expected and large_bad == 0
    names = ", ".join(str(CycleSpec(n, frozenset(S))) for n, S in sorted(found))
    return ok, f"{len(found)} non-terminal classes: {names}"


def _cycle_reflexivity(ctx: Context) -> tuple[bool, str]:
    specs = all_cycle_specs(3, 10)
    bad = []
    for spec in specs:
        facets = ctx.log(str(spec), laplacian_simplex(cycle_digraph(spec)))
        if facets != cycle_reflexivity(spec).reflexive:
            bad.append(str(spec))
    return not bad, f"{len(specs)} cycle digraphs, mismatches: {bad or 'none'}"


def _idp(ctx: Context) -> tuple[bool, str]:
    rows = classify_idp_cycles(8)
    bad = [str(s) for s, r in rows if r.verdict != expected_cycle_idp(s)]
    idp_count = sum(r.verdict for _, r in rows)
    return not bad, f"{len(rows)} reflexive cycles, {idp_count} IDP, mismatches: {bad or 'none'}"


def nondecreasing(total_max: int) -> list[tuple[int, ...]]:
    """Every nondecreasing positive tuple with sum at most ``total_max``."""
    out = []

    def grow(prefix: list[int], lo: int, remaining: int) -> None:
        if prefix:
            out.append(tuple(prefix))
        for x in range(lo, remaining + 1):
            grow(prefix + [x], x, remaining - x)

    grow([], 1, total_max)
    return out


def _delta1q(ctx: Context) -> tuple[bool, str]:
    qs = [q for q in nondecreasing(20) if is_reflexive_weights(q)]
    bad = []
    for q in qs:
        P = laplacian_simplex(star_digraph(StarSpec(q)))
        ctx.log(f"star{q}", P)
        h = hstar_delta1q(q)
        if h != ctx.hstar(P) or h.volume != 1 + sum(q):
            bad.append(q)
    return not bad, f"{len(qs)} reflexive weight vectors, mismatches: {bad or 'none'}"


def valid_nonunimodal_specs(n_max: int = 24) -> list[NonUnimodalSpec]:
    out = []
    for k in range(2, n_max):
        for a in range(1, k):
            for b in range(a, k):
                if a + b <= k + 1 and 6 * (k + 1) - 2 * a - b <= n_max:
                    out.append(NonUnimodalSpec(a, b, k))
    return out


def _nonunimodal(ctx: Context) -> tuple[bool, str]:
    notes = []
    ok = True
    for spec in valid_nonunimodal_specs():
        P = laplacian_simplex(non_unimodal_digraph(spec))
        ctx.log(f"nonunimodal{(spec.alpha, spec.beta, spec.k)}", P)
        h = ctx.hstar(P)
        tag = f"({spec.alpha},{spec.beta},{spec.k})"
        if h != predicted_nonunimodal_hstar(spec):
            ok = False
            notes.append(f"{tag} h* differs from prediction")
        if not is_symmetric(h):
            ok = False
            notes.append(f"{tag} not symmetric")
        if is_unimodal(h):
            ok = False
            notes.append(f"{tag} h*={h.coeffs} is unimodal")
        if (spec.alpha, spec.beta, spec.k) == (1, 1, 2) and h.coeffs != EXAMPLE1_HSTAR_NONUNIMODAL:
            ok = False
            notes.append(f"{tag} differs from the reference vector")
    return ok, "; ".join(notes) or "all specs match"


def _searches(ctx: Context) -> tuple[bool, str]:
    g1 = search_underlying(load_graph("paper:G1"), "orientations")
    g2 = search_underlying(load_graph("paper:G2"), "simple")
    d1 = load_digraph("paper:D1prime")
    P1 = laplacian_simplex(d1)
    refl = ctx.log("D1prime", P1)
    c = tree_counts(d1).total
    ok = (
        g1.examined == 64 and not g1.hits
        and g2.examined == 6561 and not g2.hits
        and refl and c == 12
    )
    return ok, (
        f"G1 orientations {len(g1.hits)}/{g1.examined} reflexive; "
        f"G2 simple {len(g2.hits)}/{g2.examined} reflexive; "
        f"D1' reflexive={refl}, c={c}"
    )


def _d2prime(ctx: Context) -> tuple[bool, str]:
    printed = analyze(
        load_digraph("paper:D2prime-printed"),
        notes=[named_note("paper:D2prime-printed")],
    )
    variant = analyze(load_digraph("paper:D2prime-bidirected"))
    ok = (
        not printed.strongly_connected
        and printed.reflexive is False
        and any("not strongly connected" in x for x in printed.notes)
        and named_note("paper:D2prime-printed") in printed.notes
        and variant.consistent()
    )
    return ok, (
        f"printed: strongly connected={printed.strongly_connected}, "
        f"reflexive={printed.reflexive}; bidirected variant: "
        f"strongly connected={variant.strongly_connected}, reflexive={variant.reflexive}, "
        f"h*={tuple(variant.hstar)}"
    )


def _symmetry(ctx: Context) -> tuple[bool, str]:
    for name in ("bidirected-cycles", "cycle-reflexivity", "delta1q", "nonunimodal", "searches"):
        if name not in ctx.done:
            CRITERIA[name][1](ctx)
            ctx.done.add(name)
    # whole search families, restricted to an interior origin
    for G, mode in (("paper:G1", "orientations"), ("paper:G2", "simple")):
        family = (
            enumerate_orientations if mode == "orientations" else enumerate_simple_digraphs_over
        )(load_graph(G))
        for D in family:
            if is_strongly_connected(D):
                ctx.log(f"{G}/{mode}", laplacian_simplex(D))
    bad = [label for label, refl, sym in ctx.symmetry_log if refl != sym]
    return not bad, f"{len(ctx.symmetry_log)} simplices, mismatches: {bad[:10] or 'none'}"


def _drop_col(ctx: Context) -> tuple[bool, str]:
    bad = 0
    sample = ctx.simplices()[:DROP_COL_SAMPLE]
    for _, P in sample:
        seen = set()
        for col in range(P.ambient_dim):
            Q = P.with_drop_col(col)
            inside = origin_is_interior(Q)
            seen.add((
                normalized_volume(Q),
                hstar_parallelepiped(Q).coeffs,
                is_reflexive(Q),
                is_terminal_fano(Q) if inside else None,
            ))
        bad += len(seen) != 1
    return bad == 0, f"{len(sample)} simplices, {bad} with drop-column dependence"


CRITERIA: dict[str, tuple[int, Callable[[Context], tuple[bool, str]]]] = {
    "matrix-tree": (1, _matrix_tree),
    "volume": (2, _volume),
    "interior-origin": (3, _interior_origin),
    "example1": (4, _example1),
    "bidirected-cycles": (5, _bidirected_cycles),
    "terminal-fano": (6, _terminal_fano),
    "cycle-reflexivity": (7, _cycle_reflexivity),
    "idp": (8, _idp),
    "delta1q": (9, _delta1q),
    "nonunimodal": (10, _nonunimodal),
    "searches": (11, _searches),
    "d2prime": (12, _d2prime),
    "symmetry": (13, _symmetry),
    "drop-col": (14, _drop_col),
}


def run_criterion(name: str, ctx: Context) -> CriterionResult:
    number, fn = CRITERIA[name]
    start = time.perf_counter()
    passed, detail = fn(ctx)
    ctx.done.add(name)
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - start)


def verify_paper(only: list[str] | None = None, hooks: Hooks | None = None) -> list[CriterionResult]:
    names = list(CRITERIA) if not only else only
    unknown = [n for n in names if n not in CRITERIA]
    if unknown:
        raise KeyError(f"unknown criteria {unknown}; choose from {list(CRITERIA)}")
    ctx = Context(hooks or Hooks())
    return [run_criterion(name, ctx) for name in names]


def format_results(results: list[CriterionResult]) -> str:
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.number:>2} {r.name:<18} {r.seconds:7.2f}s  {r.detail}"
        for r in results
    ]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)
