import pytest

from lapsimplex.digraph import (
    CycleSpec,
    Digraph,
    NonUnimodalSpec,
    SimpleGraph,
    StarSpec,
    all_cycle_specs,
    complete_digraph,
    cycle_digraph,
    enumerate_orientations,
    enumerate_simple_digraphs_over,
    is_strongly_connected,
    non_unimodal_cycle_spec,
    star_digraph,
    underlying_graph,
    validate_assumptions,
)


def test_digraph_validation():
    with pytest.raises(ValueError):
        Digraph(2, ((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        Digraph(2, ((0, -1), (0, 0)))
    with pytest.raises(ValueError):
        Digraph(2, ((0, 1),))
    with pytest.raises(ValueError):
        Digraph.from_edges(2, [(1, 1)])


def test_from_edges_accumulates_multiplicity():
    D = Digraph.from_edges(3, [(0, 1), (0, 1, 2), (2, 0)])
    assert D.mult[0][1] == 3
    assert D.edge_count == 4
    assert D.outdeg(0) == 3 and D.indeg(0) == 1
    assert not D.is_simple


def test_cycle_digraph_backward_edges():
    D = cycle_digraph(CycleSpec(5, frozenset({1, 3})))
    assert sorted((i + 1, j + 1) for i, j, _ in D.edges()) == [
        (1, 2), (1, 5), (2, 3), (3, 2), (3, 4), (4, 5), (5, 1)
    ]


def test_cycle_spec_bounds():
    with pytest.raises(ValueError):
        CycleSpec(2)
    with pytest.raises(ValueError):
        CycleSpec(4, frozenset({5}))


def test_rotation_canonical():
    a = CycleSpec(5, frozenset({2, 4}))
    assert a.rotated(1).S == frozenset({1, 3})
    assert a.canonical() == CycleSpec(5, frozenset({1, 3})).canonical()
    assert str(a) == "C_5^{2,4}"


def test_star_digraph():
    D = star_digraph(StarSpec((1, 2)))
    assert D.mult == ((0, 1, 2), (1, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        StarSpec((2, 1))


def test_nonunimodal_spec():
    spec = NonUnimodalSpec(1, 1, 2)
    assert spec.n == 15
    assert non_unimodal_cycle_spec(spec).S == frozenset({1, 2})
    with pytest.raises(ValueError):
        NonUnimodalSpec(1, 2, 2)
    loose = NonUnimodalSpec(1, 2, 2, strict=False)
    assert loose.n == 14
    assert non_unimodal_cycle_spec(loose).S == frozenset({1, 2, 4})


def test_strong_connectivity():
    assert is_strongly_connected(complete_digraph(4))
    path = Digraph.from_edges(3, [(0, 1), (1, 2)])
    assert not is_strongly_connected(path)
    assert "not strongly connected" in validate_assumptions(path)


def test_enumerations_over_triangle():
    G = SimpleGraph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
    orient = list(enumerate_orientations(G))
    simple = list(enumerate_simple_digraphs_over(G))
    assert len(orient) == 8 and len(simple) == 27
    assert len(set(orient)) == 8 and len(set(simple)) == 27
    assert all(underlying_graph(D) == G for D in orient + simple)
    assert sum(map(is_strongly_connected, orient)) == 2


def test_all_cycle_specs_count():
    assert len(all_cycle_specs(3, 10)) == sum(2**n for n in range(3, 11))
