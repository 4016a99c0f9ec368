import pytest

from lapsimplex.digraph import SimpleGraph
from lapsimplex.errors import BudgetExceededError
from lapsimplex.idp import IDP_EXCEPTIONS
from lapsimplex.io import load_graph
from lapsimplex.survey import (
    TERMINAL_EXCEPTIONS,
    format_survey,
    search_underlying,
    survey_cycles,
    survey_summary,
)


def test_small_survey():
    s = survey_cycles(3, 4, jobs=1)
    assert len(s.rows) == 8 + 16
    assert not s.mismatches
    assert s.non_terminal_classes() == sorted({e.canonical() for e in TERMINAL_EXCEPTIONS})
    assert s.reflexive_idp_classes() == sorted({e.canonical() for e in IDP_EXCEPTIONS})
    summary = survey_summary(s)
    assert summary["non_terminal_fano"] == summary["expected_non_terminal_fano"]
    assert "route mismatches: 0" in format_survey(s)


def test_larger_cycles_are_terminal():
    s = survey_cycles(5, 6, jobs=1)
    assert s.non_terminal_classes() == []
    assert not s.mismatches


def test_parallel_survey_matches_sequential():
    assert survey_cycles(3, 5, jobs=2).rows == survey_cycles(3, 5, jobs=1).rows


def test_survey_guards():
    with pytest.raises(BudgetExceededError):
        survey_cycles(3, 9)
    with pytest.raises(ValueError):
        survey_cycles(2, 4)


def test_triangle_orientations():
    G = SimpleGraph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
    res = search_underlying(G, "orientations")
    assert res.examined == 8
    assert res.strongly_connected == 2
    assert len(res.hits) == 2


def test_g1_orientations():
    res = search_underlying(load_graph("paper:G1"), "orientations")
    assert (res.examined, len(res.hits)) == (64, 0)


def test_search_guards():
    big = SimpleGraph(7, frozenset((i, j) for i in range(7) for j in range(i + 1, 7)))
    with pytest.raises(BudgetExceededError):
        search_underlying(big)
    with pytest.raises(ValueError):
        search_underlying(load_graph("paper:G1"), "mixed")
