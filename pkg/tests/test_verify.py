import pytest

from lapsimplex.trees import TreeCounts, tree_counts
from lapsimplex.verify import (
    CRITERIA,
    Hooks,
    format_results,
    random_corpus,
    valid_nonunimodal_specs,
    verify_paper,
)


def test_corpus_is_seeded():
    a, b = random_corpus(), random_corpus()
    assert a == b and len(a) == 200
    assert {D.n for D in a} == {2, 3, 4, 5, 6}
    assert max(x for D in a for row in D.mult for x in row) == 3


def test_criteria_numbering():
    assert sorted(n for n, _ in CRITERIA.values()) == list(range(1, 15))


def test_only_runs_selected():
    results = verify_paper(["example1"])
    assert [r.name for r in results] == ["example1"]
    assert results[0].passed and results[0].seconds >= 0
    assert "1/1 criteria passed" in format_results(results)


def test_unknown_criterion():
    with pytest.raises(KeyError):
        verify_paper(["nope"])


def test_tampered_tree_counts_fail_matrix_tree():
    def off_by_one(D):
        return TreeCounts(tuple(c + 1 for c in tree_counts(D).c))

    (result,) = verify_paper(["matrix-tree"], Hooks(tree_counts=off_by_one))
    assert not result.passed


def test_valid_nonunimodal_specs():
    got = sorted((s.alpha, s.beta, s.k, s.n) for s in valid_nonunimodal_specs())
    assert got == [
        (1, 1, 2, 15), (1, 1, 3, 21), (1, 2, 3, 20),
        (2, 2, 3, 18), (2, 2, 4, 24), (2, 3, 4, 23),
    ]
