"""h*-vectors of lattice simplices.

Three independent routes:

* :func:`hstar_parallelepiped` counts fundamental-parallelepiped points by
  height (the default, exact and cheap);
* :func:`hstar_dilation_oracle` counts lattice points of ``tP`` for
  ``t = 0..d`` by scanning and inverts the binomial transform;
* :func:`hstar_delta1q` evaluates the closed form for ``Delta_(1,q)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .digraph import NonUnimodalSpec, StarSpec
from .simplex import LatticeSimplex, count_lattice_points, parallelepiped_points


@dataclass(frozen=True)
class HStarVector:
    """Coefficients ``(h*_0, ..., h*_d)``; the length is always ``d + 1``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if not c or c[0] != 1:
            raise ValueError(f"h*_0 must be 1, got {c}")
        if any(x < 0 for x in c):
            raise ValueError(f"h* coefficients must be nonnegative, got {c}")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @property
    def volume(self) -> int:
        return sum(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]


class HypothesisWarning(UserWarning):
    """A closed form was evaluated outside the range where it is known to hold."""


def hstar_parallelepiped(P: LatticeSimplex) -> HStarVector:
    h = [0] * (P.dim + 1)
    for _, height in parallelepiped_points(P):
        h[height] += 1
    return HStarVector(tuple(h))


def hstar_from_counts(counts: Sequence[int], d: int) -> HStarVector:
    """Invert ``sum_t L(t) z^t = h*(z) / (1-z)^(d+1)`` given ``L(0..d)``."""
    h = [
        sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1))
        for i in range(d + 1)
    ]
    return HStarVector(tuple(h))


def hstar_dilation_oracle(P: LatticeSimplex, budget: int | None = None) -> HStarVector:
    d = P.dim
    counts = [count_lattice_points(P, t, budget) for t in range(d + 1)]
    return hstar_from_counts(counts, d)


def is_reflexive_weights(q: Sequence[int]) -> bool:
    """``q_j`` divides ``1 + sum_{i != j} q_i`` for every ``j``."""
    total = 1 + sum(q)
    return all((total - x) % x == 0 for x in q)


def delta1q_weight(b: int, q: Sequence[int]) -> int:
    N = 1 + sum(q)
    return b - sum(qi * b // N for qi in q)


def hstar_delta1q(spec: StarSpec | Sequence[int]) -> HStarVector:
    """Closed-form h* of ``Delta_(1,q)``: ``h*_j = #{b in 0..sum(q) : w(b) == j}``.

    Warns with :class:`HypothesisWarning` if ``q`` is not a reflexive weight
    vector, since the formula is only established in that case.
    """
    q = spec.q if isinstance(spec, StarSpec) else tuple(spec)
    if not is_reflexive_weights(q):
        warnings.warn(f"q={q} fails the divisibility hypothesis", HypothesisWarning, stacklevel=2)
    h = [0] * (len(q) + 1)
    for b in range(sum(q) + 1):
        h[delta1q_weight(b, q)] += 1
    return HStarVector(tuple(h))


def predicted_nonunimodal_hstar(spec: NonUnimodalSpec) -> HStarVector:
    a, b, k1 = spec.alpha, spec.beta, spec.k + 1
    blocks = [
        (1, 2 * k1 - a),
        (2, a),
        (1, k1 - a - b),
        (2, b),
        (1, k1 - a - b),
        (2, a),
        (1, 2 * k1 - a),
    ]
    return HStarVector(tuple(v for v, length in blocks for _ in range(length)))


def _coeffs(h: HStarVector | Iterable[int]) -> tuple[int, ...]:
    return h.coeffs if isinstance(h, HStarVector) else tuple(h)


def is_symmetric(h: HStarVector | Iterable[int]) -> bool:
    c = _coeffs(h)
    return c == c[::-1]


def is_unimodal(h: HStarVector | Iterable[int]) -> bool:
    """Weakly increasing up to some index, weakly decreasing after it."""
    c = _coeffs(h)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)

