"""Exception types shared across the package."""

from __future__ import annotations


class LapSimplexError(Exception):
    """Base class for all errors raised by lapsimplex."""


class InputError(LapSimplexError, ValueError):
    """Malformed or out-of-range user input (bad JSON, loops, bad labels)."""


class SingularMatrixError(LapSimplexError, ArithmeticError):
    """A linear system has no unique solution."""


class DegenerateSimplexError(LapSimplexError):
    """The Laplacian has rank below n - 1, so P_D is not a simplex."""

    def __init__(self, rank: int, n: int):
        self.rank = rank
        self.n = n
        super().__init__(
            f"degenerate: rank {rank} < n-1 = {n - 1}; "
            "the digraph has no spanning converging tree"
        )


class BudgetExceededError(LapSimplexError):
    """An exhaustive computation would exceed its configured budget."""

    def __init__(self, what: str, needed: int | None, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        detail = f"at least {needed}" if needed is not None else "more than budget"
        super().__init__(f"{what}: {detail} candidates, budget is {budget}")


class OriginNotInteriorError(LapSimplexError):
    """An operation needs the origin in the (strict) interior of P."""
