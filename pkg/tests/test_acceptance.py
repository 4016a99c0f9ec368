"""Acceptance gate: one PASS/FAIL line per criterion, all at exact tolerance.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines; they also
appear in the captured output of any failing criterion.
"""

import pytest

from lapsimplex.verify import CRITERIA, Context, Hooks, run_criterion


@pytest.fixture(scope="module")
def ctx():
    # shared so the symmetry criterion reuses simplices logged by earlier ones
    return Context(Hooks())


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name, ctx):
    r = run_criterion(name, ctx)
    line = f"{'PASS' if r.passed else 'FAIL'} criterion {r.number:>2} {r.name} ({r.seconds:.1f}s): {r.detail}"
    print(line)
    assert r.passed, line
