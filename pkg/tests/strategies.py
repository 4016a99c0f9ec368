"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from lapsimplex.digraph import CycleSpec, Digraph


@st.composite
def digraphs(draw, n_min=2, n_max=5, max_mult=3):
    n = draw(st.integers(n_min, n_max))
    m = [
        [0 if i == j else draw(st.integers(0, max_mult)) for j in range(n)]
        for i in range(n)
    ]
    return Digraph(n, tuple(map(tuple, m)))


@st.composite
def cycle_specs(draw, n_min=3, n_max=8):
    n = draw(st.integers(n_min, n_max))
    S = draw(st.sets(st.integers(1, n)))
    return CycleSpec(n, frozenset(S))
