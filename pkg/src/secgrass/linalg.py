"""Exact dense linear algebra over Q: row reduction, rank, right kernel."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .poly import _norm, as_rational


class RationalMatrix:
    """Dense matrix of exact rationals.  Immutable by convention."""

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows: List[List] = [[as_rational(x) for x in r] for r in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.nrows = len(self.rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], n)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        A = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == len(A):
                break
            p = next((i for i in range(r, len(A)) if A[i][c]), None)
            if p is None:
                continue
            A[r], A[p] = A[p], A[r]
            inv = Fraction(1) / A[r][c]
            A[r] = [_norm(x * inv) for x in A[r]]
            for i in range(len(A)):
                if i != r and A[i][c]:
                    f = A[i][c]
                    A[i] = [_norm(x - f * y) for x, y in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
        return A[:r], pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> List[List]:
        """Basis of the right kernel, one vector per free column.

        Each vector has a 1 in its free column and zeros in the other free
        columns, so the basis is the reduced-echelon normalized one.
        """
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for row, p in zip(R, pivots):
                v[p] = _norm(-row[f])
            basis.append(v)
        return basis

    def apply(self, vec):
        return [_norm(sum(a * b for a, b in zip(row, vec))) for row in self.rows]


def matrix_kernel(M: RationalMatrix) -> List[List]:
    return M.kernel()


class RowSpace:
    """Incrementally grown row space, kept in echelon form with unit pivots."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: List[List] = []
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row) -> bool:
        """Insert a row; return True iff it raised the rank."""
        v = [as_rational(x) for x in row]
        for b, p in zip(self._rows, self._pivots):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, b)]
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = Fraction(1) / v[p]
        self._rows.append([_norm(x * inv) for x in v])
        self._pivots.append(p)
        return True

    def kernel(self) -> List[List]:
        if not self._rows:
            return RationalMatrix.identity(self.ncols).rows
        return RationalMatrix(self._rows, self.ncols).kernel()
