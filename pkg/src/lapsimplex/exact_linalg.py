"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints; nothing here ever touches a
float.  The routines are small and written for clarity over speed, since the
matrices that show up (Laplacians of digraphs with a handful of vertices)
stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrixError

IntMatrix = list[list[int]]
RationalVector = tuple[Fraction, ...]


def _check_square(A: Sequence[Sequence[int]]) -> int:
    n = len(A)
    for row in A:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if A and len(A[0]) != len(B):
        raise ValueError("inner dimensions do not agree")
    cols = len(B[0]) if B else 0
    Bt = [[B[k][j] for k in range(len(B))] for j in range(cols)]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def submatrix(A: Sequence[Sequence[int]], i: int, j: int) -> IntMatrix:
    """A with row ``i`` and column ``j`` removed (0-based)."""
    return [
        [x for c, x in enumerate(row) if c != j]
        for r, row in enumerate(A)
        if r != i
    ]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every intermediate value is an integer (each division is exact), so the
    result is correct for arbitrarily large entries.

    >>> determinant([[1, -1], [-1, 2]])
    1
    """
    n = _check_square(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk = M[i], M[k]
            a = Mi[k]
            for j in range(k + 1, n):
                Mi[j] = (pivot * Mi[j] - a * Mk[j]) // prev
            Mi[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def minor_determinant(A: Sequence[Sequence[int]], i: int, j: int) -> int:
    """Determinant of ``A`` with row ``i`` and column ``j`` deleted (0-based)."""
    n = _check_square(A)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"minor ({i}, {j}) out of range for a {n}x{n} matrix")
    return determinant(submatrix(A, i, j))


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, via fraction-free row reduction."""
    M = [list(map(int, row)) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c]:
                a, b = M[r][c], M[i][c]
                M[i] = [a * x - b * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int | Fraction]) -> RationalVector:
    """Unique exact solution of ``A x = b``.

    Raises ``ValueError`` on shape mismatch and ``SingularMatrixError`` when
    ``A`` is singular.
    """
    n = _check_square(A)
    if len(b) != n:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        Mk = M[k] = [x * inv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], Mk)]
    return tuple(row[n] for row in M)


def scaled_inverse(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, int]:
    """Return ``(N, d)`` with ``d > 0`` and ``A^{-1} = N / d``, all integers.

    ``d`` is ``|det A|``, so ``N`` is the adjugate up to sign.
    """
    n = _check_square(A)
    det = determinant(A)
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for k in range(n):
        piv = next(i for i in range(k, n) if M[i][k] != 0)
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        Mk = M[k] = [x * inv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], Mk)]
    d = abs(det)
    N = []
    for row in M:
        out = []
        for x in row[n:]:
            y = x * d
            assert y.denominator == 1
            out.append(y.numerator)
        N.append(out)
    return N, d


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == diag(d_1, ..., d_r)`` padded with zeros.

    ``U_inv`` and ``V_inv`` are the exact integer inverses of the unimodular
    transforms, kept because they are needed to lift group representatives.
    """

    U: IntMatrix
    V: IntMatrix
    diag: tuple[int, ...]
    U_inv: IntMatrix
    V_inv: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        D = [[0] * cols for _ in range(rows)]
        for k, d in enumerate(self.diag):
            D[k][k] = d
        return D


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form by elementary row and column operations.

    The pivot at each stage is the nonzero entry of smallest absolute value
    in the remaining block (ties broken by row-major position).  Row ops are
    mirrored into ``U`` / ``U_inv`` and column ops into ``V`` / ``V_inv``.
    The returned invariant factors are positive and each divides the next;
    zero factors of a rank-deficient matrix are not listed.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    def row_add(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        if q == 0:
            return
        for M in (D, U):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]
        for row in U_inv:  # inverse: col_src -= q * col_dst
            row[src] -= q * row[dst]

    def row_swap(a: int, b: int) -> None:
        if a == b:
            return
        for M in (D, U):
            M[a], M[b] = M[b], M[a]
        for row in U_inv:
            row[a], row[b] = row[b], row[a]

    def row_neg(a: int) -> None:
        for M in (D, U):
            M[a] = [-x for x in M[a]]
        for row in U_inv:
            row[a] = -row[a]

    def col_add(dst: int, src: int, q: int) -> None:
        # col_dst += q * col_src
        if q == 0:
            return
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]
        V_inv[src] = [x - q * y for x, y in zip(V_inv[src], V_inv[dst])]

    def col_swap(a: int, b: int) -> None:
        if a == b:
            return
        for M in (D, V):
            for row in M:
                row[a], row[b] = row[b], row[a]
        V_inv[a], V_inv[b] = V_inv[b], V_inv[a]

    diag: list[int] = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = D[i][j]
                    if x and (best is None or abs(x) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            row_swap(t, best[0])
            col_swap(t, best[1])
            p = D[t][t]
            for i in range(t + 1, m):
                row_add(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                col_add(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is not None:
                row_add(t, bad, 1)
                continue
            break
        if best is None:
            break
        if D[t][t] < 0:
            row_neg(t)
        diag.append(D[t][t])
    return SmithDecomposition(U=U, V=V, diag=tuple(diag), U_inv=U_inv, V_inv=V_inv)
