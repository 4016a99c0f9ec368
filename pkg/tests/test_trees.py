import pytest
from hypothesis import given

from lapsimplex.digraph import CycleSpec, Digraph, complete_digraph, cycle_digraph
from lapsimplex.errors import BudgetExceededError
from lapsimplex.trees import (
    cycle_tree_counts,
    laplacian_matrix,
    tree_counts,
    tree_counts_bruteforce,
)

from .strategies import cycle_specs, digraphs

EXAMPLE1 = Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0), (2, 1)])


def test_laplacian_rows_sum_to_zero():
    L = laplacian_matrix(EXAMPLE1)
    assert L == [[1, -1, 0], [0, 1, -1], [-1, -1, 2]]


def test_example1_counts():
    tc = tree_counts(EXAMPLE1)
    assert tc.c == (1, 2, 1)
    assert tc.total == 4
    assert tc.strongly_connected


def test_complete_digraph_cayley():
    # each root of K_n has n^(n-2) converging trees
    for n in range(2, 6):
        assert tree_counts(complete_digraph(n)).c == (n ** (n - 2),) * n


def test_no_trees_when_two_sinks():
    D = Digraph.from_edges(3, [(0, 1), (0, 2)])
    assert tree_counts(D).total == 0


def test_single_vertex():
    assert tree_counts(Digraph(1, ((0,),))).c == (1,)


@given(digraphs())
def test_matrix_tree_matches_bruteforce(D):
    assert tree_counts(D) == tree_counts_bruteforce(D)


@given(digraphs(max_mult=1))
def test_simple_support_on_simple_digraphs(D):
    assert tree_counts_bruteforce(D, simple_support=True) == tree_counts(D)


def test_bruteforce_budget():
    with pytest.raises(BudgetExceededError):
        tree_counts_bruteforce(complete_digraph(7), budget=100)


@given(cycle_specs(n_max=10))
def test_cycle_closed_form(spec):
    assert cycle_tree_counts(spec) == tree_counts(cycle_digraph(spec))


def test_cycle_closed_form_example():
    assert cycle_tree_counts(CycleSpec(4, frozenset({2, 3}))).c == (3, 2, 1, 1)
