from fractions import Fraction

import pytest
from hypothesis import given, settings

from lapsimplex.digraph import (
    CycleSpec,
    Digraph,
    complete_digraph,
    cycle_digraph,
    is_strongly_connected,
)
from lapsimplex.errors import BudgetExceededError, DegenerateSimplexError, OriginNotInteriorError
from lapsimplex.io import load_digraph
from lapsimplex.simplex import (
    LatticeSimplex,
    barycentric,
    count_lattice_points,
    cycle_reflexivity,
    dual_vertices,
    interior_lattice_points,
    is_reflexive,
    is_reflexive_divisibility,
    is_terminal_fano,
    laplacian_simplex,
    lattice_points,
    normalized_volume,
    origin_coordinates,
    origin_is_interior,
    triangulated_volume,
)
from lapsimplex.trees import tree_counts

from .strategies import cycle_specs, digraphs

EXAMPLE1 = Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0), (2, 1)])


def simplices(**kw):
    return digraphs(**kw).filter(lambda D: tree_counts(D).total > 0)


def test_example1_lattice_points():
    P = laplacian_simplex(EXAMPLE1)
    assert P.dim == 2
    assert normalized_volume(P) == 4
    expected = [(-1, -1, 2), (0, -1, 1), (0, 0, 0), (0, 1, -1), (1, -1, 0)]
    assert lattice_points(P, 1) == expected
    assert lattice_points(P, 1, method="cone") == expected
    assert [count_lattice_points(P, t) for t in range(4)] == [1, 5, 13, 25]
    assert interior_lattice_points(P) == [(0, 0, 0)]


def test_degenerate_digraph_rejected():
    with pytest.raises(DegenerateSimplexError) as exc:
        laplacian_simplex(Digraph.from_edges(3, [(0, 1), (0, 2)]))
    assert exc.value.rank == 1


def test_rows_must_sum_to_zero():
    with pytest.raises(ValueError):
        LatticeSimplex(((1, 0), (0, 1)))


def test_barycentric():
    P = laplacian_simplex(EXAMPLE1)
    assert origin_coordinates(P) == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    assert barycentric(P, (5, -5, 0)) is None
    assert barycentric(P, (1, 0, 0)) is None
    with pytest.raises(ValueError):
        barycentric(P, (0, 0))


def test_scan_budget_refusal(monkeypatch):
    P = laplacian_simplex(complete_digraph(4))
    with pytest.raises(BudgetExceededError):
        count_lattice_points(P, 5, budget=10)
    monkeypatch.setenv("LAPSIMPLEX_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        lattice_points(P, 5)


@settings(max_examples=60, deadline=None)
@given(simplices())
def test_volume_equals_complexity(D):
    P = laplacian_simplex(D)
    assert normalized_volume(P) == tree_counts(D).total
    if origin_coordinates(P) is not None:
        assert triangulated_volume(P) == tree_counts(D).total


@settings(max_examples=60, deadline=None)
@given(simplices())
def test_interior_origin_iff_strongly_connected(D):
    assert origin_is_interior(laplacian_simplex(D)) == is_strongly_connected(D)


@settings(max_examples=40, deadline=None)
@given(simplices(n_max=4, max_mult=2))
def test_scan_and_cone_agree(D):
    P = laplacian_simplex(D)
    for t in (1, 2):
        pts = lattice_points(P, t)
        assert pts == lattice_points(P, t, method="cone")
        assert len(pts) == count_lattice_points(P, t)


@settings(max_examples=40, deadline=None)
@given(simplices(n_max=4))
def test_drop_col_invariance(D):
    P = laplacian_simplex(D)
    results = set()
    for col in range(D.n):
        Q = P.with_drop_col(col)
        results.add((normalized_volume(Q), tuple(lattice_points(Q, 1)), is_reflexive(Q)))
    assert len(results) == 1


@settings(max_examples=60, deadline=None)
@given(simplices())
def test_divisibility_criterion_agrees_with_facets(D):
    verdict = is_reflexive_divisibility(D)
    if verdict is not None:
        assert verdict == is_reflexive(laplacian_simplex(D))


def test_dual_vertices_of_example1():
    duals = dual_vertices(laplacian_simplex(EXAMPLE1))
    assert all(x.denominator == 1 for a in duals for x in a)
    assert is_reflexive(laplacian_simplex(EXAMPLE1))


def test_not_strongly_connected_is_not_reflexive():
    P = load_digraph("paper:D2prime-printed")
    assert not is_reflexive(laplacian_simplex(P))
    with pytest.raises(OriginNotInteriorError):
        dual_vertices(laplacian_simplex(P))
    with pytest.raises(OriginNotInteriorError):
        is_terminal_fano(laplacian_simplex(P))


def test_c3_family():
    for S in ([], [1], [1, 2], [1, 2, 3]):
        P = laplacian_simplex(cycle_digraph(CycleSpec(3, frozenset(S))))
        assert is_reflexive(P)
        assert is_terminal_fano(P) == (S == [])


def test_bidirected_cycle_parity():
    for n in range(3, 8):
        spec = CycleSpec(n, frozenset(range(1, n + 1)))
        assert is_reflexive(laplacian_simplex(cycle_digraph(spec))) == (n % 2 == 1)
        assert cycle_reflexivity(spec).condition == (3 if n % 2 else None)


@settings(max_examples=80, deadline=None)
@given(cycle_specs(n_max=9))
def test_cycle_theorem_matches_facets(spec):
    verdict = cycle_reflexivity(spec)
    assert verdict.reflexive == is_reflexive(laplacian_simplex(cycle_digraph(spec)))
    if verdict.condition == 4:
        assert 1 not in spec.rotated(verdict.rotation).S
