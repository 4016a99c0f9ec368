"""Laplacian simplices of digraphs and their lattice-polytope invariants."""

from .analysis import AnalysisReport, analyze
from .digraph import CycleSpec, Digraph, NonUnimodalSpec, SimpleGraph, StarSpec
from .ehrhart import HStarVector, hstar_parallelepiped
from .simplex import LatticeSimplex, is_reflexive, laplacian_simplex
from .trees import tree_counts

__all__ = [
    "AnalysisReport",
    "CycleSpec",
    "Digraph",
    "HStarVector",
    "LatticeSimplex",
    "NonUnimodalSpec",
    "SimpleGraph",
    "StarSpec",
    "analyze",
    "hstar_parallelepiped",
    "is_reflexive",
    "laplacian_simplex",
    "tree_counts",
]
