"""
Closed-form plethysm multiplicities and the row and column reductions.

Column triples ``(a, b, c)`` name the diagram with three columns of those
lengths; :func:`s3_wedge_multiplicity` gives its multiplicity in S^3(wedge^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, floor
from fractions import Fraction
from typing import List, Tuple

from .symfunc import plethysm_table
from .young import COLUMNS, ROWS, IsotypicTable, Partition, gl_dimension, require, transpose


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True)
class ColumnTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = sorted((self.a, self.b, self.c), reverse=True)
        if c < 0:
            raise ConstraintError("column lengths must be nonnegative")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def weight(self) -> int:
        return self.a + self.b + self.c

    def partition(self) -> Partition:
        return Partition((self.a, self.b, self.c), COLUMNS)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


def column_triples(k: int) -> List[ColumnTriple]:
    """All (a, b, c) with a >= b >= c >= 0 and a + b + c = 3k."""
    out = []
    n = 3 * k
    for a in range(n, -1, -1):
        for b in range(min(a, n - a), -1, -1):
            c = n - a - b
            if 0 <= c <= b:
                out.append(ColumnTriple(a, b, c))
    return out


def s3_wedge_multiplicity(t: ColumnTriple, k: int) -> int:
    """Multiplicity of the (a,b,c)-column diagram in S^3(wedge^k)."""
    if not isinstance(t, ColumnTriple):
        t = ColumnTriple(*t)
    if t.weight != 3 * k:
        raise ConstraintError(f"a+b+c = {t.weight} but 3k = {3 * k}")
    lo = min(t.b - t.c, t.a - t.b)
    hi = max(t.b - t.c, t.a - t.b)
    q = Fraction(lo + 1, 6)
    if lo % 2 == 0:
        return ceil(q) if hi % 2 == 0 else floor(q)
    r = lo % 3
    if r == 0:
        return ceil(q)
    if r == 1:
        return floor(q)
    if q.denominator != 1:
        raise AssertionError(f"(min+1)/6 not integral for min={lo}")
    return q.numerator


def s3_wedge_oracle(t: ColumnTriple, k: int) -> int:
    """Same multiplicity read off the character/discriminant expansion."""
    if not isinstance(t, ColumnTriple):
        t = ColumnTriple(*t)
    return plethysm_table(Partition((3,), ROWS), k, "wedge").multiplicity(t.partition())


def s3_wedge_report(k: int, dim: int) -> list:
    """One row per triple: closed form, oracle, agreement flag and GL_dim dimension."""
    table = plethysm_table(Partition((3,), ROWS), k, "wedge")
    rows_ = []
    for t in column_triples(k):
        closed = s3_wedge_multiplicity(t, k)
        oracle = table.multiplicity(t.partition())
        rows_.append({
            "columns": list(t.as_tuple()),
            "closed_form": closed,
            "oracle": oracle,
            "agree": closed == oracle,
            "dimension": gl_dimension(t.partition(), dim),
        })
    return rows_


def s3_wedge_dimension_sum(k: int, d: int) -> Tuple[int, int]:
    """(sum of mult * dim over triples, C(C(d,k)+2, 3))."""
    lhs = sum(s3_wedge_multiplicity(t, k) * gl_dimension(t.partition(), d) for t in column_triples(k))
    return lhs, comb(comb(d, k) + 2, 3)


def sym2_table(n: int) -> IsotypicTable:
    """S^2(S^n): two-row diagrams of weight 2n with even second row."""
    if n < 1:
        raise ValueError("n must be positive")
    return IsotypicTable(
        {Partition((2 * n - j, j), ROWS): 1 for j in range(0, n + 1) if j % 2 == 0},
        f"S^2(S^{n})",
    )


def wedge2_table(n: int) -> IsotypicTable:
    """wedge^2(S^n): two-row diagrams of weight 2n with odd rows."""
    if n < 1:
        raise ValueError("n must be positive")
    return IsotypicTable(
        {Partition((2 * n - j, j), ROWS): 1 for j in range(1, n + 1) if j % 2 == 1},
        f"wedge^2(S^{n})",
    )


def reduce_column(lam: Partition, mu: Partition, k: int) -> Tuple[Partition, int]:
    """Strip the full first row: S^mu(wedge^k) at lam  ->  S^mu(wedge^(k-1)) at lam'."""
    lam = lam.as_rows()
    require(mu, ROWS)
    if k < 1:
        raise ConstraintError("cannot reduce below k = 0")
    if lam[0] != mu.weight:
        raise ConstraintError(f"first row of {lam.parts} must have length |mu| = {mu.weight}")
    return Partition(lam.parts[1:], ROWS), k - 1


def reduce_row(lam: Partition, mu: Partition, k: int) -> Tuple[Partition, Partition, int]:
    """Strip the full first column: S^mu(S^k) at lam  ->  S^(mu^T)(S^(k-1)) at lam'."""
    lam = lam.as_rows()
    require(mu, ROWS)
    if k < 1:
        raise ConstraintError("cannot reduce below k = 0")
    if len(lam) != mu.weight:
        raise ConstraintError(f"{lam.parts} must have exactly |mu| = {mu.weight} rows")
    return Partition(tuple(p - 1 for p in lam.parts), ROWS), transpose(mu), k - 1
