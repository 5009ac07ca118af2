import random
from fractions import Fraction

import sympy

from secgrass.linalg import RationalMatrix, RowSpace


def rand_matrix(rng, m, n, rank):
    A = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(m)]
    B = [[Fraction(rng.randint(-3, 3), rng.choice((1, 2))) for _ in range(n)] for _ in range(rank)]
    return [[sum(A[i][k] * B[k][j] for k in range(rank)) for j in range(n)] for i in range(m)]


def test_rank_and_kernel_against_sympy():
    rng = random.Random(3)
    for _ in range(20):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = rand_matrix(rng, m, n, rng.randint(0, min(m, n)))
        M = RationalMatrix(rows)
        S = sympy.Matrix(rows)
        assert M.rank() == S.rank()
        ker = M.kernel()
        assert len(ker) == n - S.rank()
        for v in ker:
            assert all(x == 0 for x in M.apply(v))


def test_rowspace_matches_batch():
    rng = random.Random(5)
    rows = rand_matrix(rng, 8, 6, 4)
    rs = RowSpace(6)
    grew = [rs.add(r) for r in rows]
    assert rs.rank == 4 == sum(grew)
    assert len(rs.kernel()) == 2
    for v in rs.kernel():
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_empty_rowspace_kernel_is_everything():
    assert len(RowSpace(3).kernel()) == 3


def test_identity():
    assert RationalMatrix.identity(4).rank() == 4
    assert RationalMatrix.zeros(2, 3).kernel() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
