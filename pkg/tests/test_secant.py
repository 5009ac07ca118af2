import random
from fractions import Fraction

import pytest

from secgrass.plethysm import ColumnTriple, ConstraintError, column_triples
from secgrass.poly import Poly
from secgrass.secant import (NotHomogeneous, PreconditionError, check_hwv, crucial_bound, crucial_m, cubic_ideal_table,
                             cubic_multiplicity, cubic_multiplicity_entry, f_alpha, hwv, ideal_degree_d,
                             ideal_degree_d_ungraded, in_D, longarein_predicate, orbit_ring_multiplicity,
                             orbit_ring_oracle, polarize, pvar, quotient_degree3, random_D_alpha, reduce_secant,
                             secant_point, signed_var, sym_power_dimension, unordered_decompositions)
from secgrass.young import COLUMNS, ROWS, Partition, columns, rows
from secgrass.poly import Var

x, y = Poly.var("x"), Poly.var("y")
X, Y = Var("x"), Var("y")


def test_polarize_examples():
    f = polarize(x * y)
    assert f({X: 1}, {Y: 1}) == Fraction(1, 2)
    g = polarize(x ** 3)
    assert g({X: 2}, {X: 2}, {X: 2}) == 8
    h = polarize(x ** 2 * y)
    v = {X: 3, Y: 5}
    assert h(v, v, v) == 45
    with pytest.raises(NotHomogeneous):
        polarize(x + x * y)
    with pytest.raises(ValueError):
        g({X: 1})


def test_f_alpha_on_rank_one_points():
    P = x ** 2 * y
    Q1, Q2 = {X: 1, Y: 2}, {X: 3, Y: -1}
    a, b = 2, 5
    direct = P.eval({X: a + 3 * b, Y: 2 * a - b})
    viapol = (a ** 3 * f_alpha(P, (3, 0), [Q1, Q2]) + 3 * a ** 2 * b * f_alpha(P, (2, 1), [Q1, Q2])
              + 3 * a * b ** 2 * f_alpha(P, (1, 2), [Q1, Q2]) + b ** 3 * f_alpha(P, (0, 3), [Q1, Q2]))
    assert direct == viapol


def test_signed_var():
    assert signed_var((2, 1)) == -Poly.var(pvar((1, 2)))
    assert signed_var((1, 1)) == 0


def test_sym_power_dimension():
    assert sym_power_dimension(2, 5, 3) == 220
    assert sym_power_dimension(2, 6, 3) == 680


@pytest.mark.parametrize("k,n,s,d,dim", [(2, 4, 1, 2, 1), (2, 5, 1, 2, 5), (2, 5, 2, 2, 0), (2, 6, 2, 3, 1),
                                         (2, 6, 3, 3, 0), (3, 6, 2, 3, 0), (2, 7, 2, 3, 7)])
def test_ideal_dimensions(k, n, s, d, dim):
    piece = ideal_degree_d(k, n, s, d)
    assert piece.dimension == dim


def test_ideal_isotypic_and_vanishing():
    piece = ideal_degree_d(2, 6, 2, 3)
    assert piece.isotypic().in_convention(COLUMNS).entries == {columns(6): 1}
    rng = random.Random(99)
    assert piece.vanishes_on([secant_point(2, 6, 2, rng) for _ in range(50)])
    assert not piece.vanishes_on([secant_point(2, 6, 3, rng) for _ in range(5)])
    g = ideal_degree_d(2, 5, 1, 2)
    assert g.isotypic().in_convention(COLUMNS).entries == {columns(4): 1}


def test_ideal_seed_independent():
    assert ideal_degree_d(2, 7, 2, 3, seed=3).dimension == ideal_degree_d(2, 7, 2, 3, seed=0).dimension


@pytest.mark.parametrize("k,n,s,d", [(2, 4, 1, 2), (2, 5, 1, 2), (2, 5, 2, 2)])
def test_ungraded_cross_check(k, n, s, d):
    assert ideal_degree_d_ungraded(k, n, s, d) == ideal_degree_d(k, n, s, d).dimension


def test_longarein():
    assert longarein_predicate(columns(3, 3), 3, 2, 2) is False
    assert longarein_predicate(columns(3, 2, 1), 2, 2, 3) is False
    assert longarein_predicate(columns(4, 1, 1), 2, 2, 3) is True
    assert longarein_predicate(rows(1, 1, 1, 1, 1, 1), 2, 2, 3) is True
    with pytest.raises(PreconditionError):
        longarein_predicate(columns(3), 2, 2, 3)


def test_reduce_secant():
    lam = Partition((3, 2, 1), ROWS)
    assert reduce_secant(lam, 2, 6, 3) == (Partition((2, 1), ROWS), 1, 5)
    assert reduce_secant(columns(7, 1, 1), 3, 7, 3) == (columns(6), 2, 6)
    with pytest.raises(PreconditionError):
        reduce_secant(lam, 1, 6, 3)
    with pytest.raises(PreconditionError):
        reduce_secant(lam, 2, 6, 4)


def _d_column_shapes(k, n, d):
    from secgrass.young import partitions
    out = []
    for p in partitions(d * k, max_part=n):
        lam = Partition(p, COLUMNS)
        if len(p) == d and p[0] <= n:
            out.append(lam)
    return out


REDUCTION_PAIRS = [((3, 6, 1, 2), (2, 5, 1, 2)), ((3, 7, 1, 2), (2, 6, 1, 2)), ((2, 5, 1, 2), (1, 4, 1, 2)),
                   ((2, 6, 2, 3), (1, 5, 2, 3)), ((3, 6, 2, 3), (2, 5, 2, 3)), ((2, 6, 1, 2), (1, 5, 1, 2))]


def redsecgras_instances(count, seed):
    rng = random.Random(seed)
    pieces = {}
    out = []
    for _ in range(count):
        big, small = rng.choice(REDUCTION_PAIRS)
        k, n, s, d = big
        lam = rng.choice(_d_column_shapes(k, n, d))
        for key in (big, small):
            if key not in pieces:
                pieces[key] = ideal_degree_d(*key).isotypic()
        lam2, k2, n2 = reduce_secant(lam.as_rows(), k, n, d)
        out.append((big, lam, pieces[big].multiplicity(lam), pieces[small].multiplicity(lam2)))
    return out


def test_redsecgras_invariance():
    for big, lam, m1, m2 in redsecgras_instances(20, 5):
        assert m1 == m2, (big, lam)


def test_quadrics_reduce():
    assert ideal_degree_d(3, 6, 1, 2).isotypic().in_convention(COLUMNS).entries == {columns(5, 1): 1}
    assert ideal_degree_d(2, 5, 1, 2).isotypic().multiplicity(columns(4)) == 1


@pytest.mark.slow
def test_sigma2_g37_cubics():
    piece = ideal_degree_d(3, 7, 2, 3)
    assert piece.dimension == 28
    assert piece.isotypic().in_convention(COLUMNS).entries == {columns(7, 1, 1): 1}


# -- cubics -----------------------------------------------------------------

def test_cubic_examples():
    assert cubic_multiplicity((6, 0, 0), 2, 6) == 1
    assert cubic_multiplicity((4, 2, 0), 2, 6) == 0
    e = cubic_multiplicity_entry((3, 2, 1), 2, 6)
    assert e.multiplicity == 0 and e.flagged
    assert cubic_multiplicity((6, 0, 0), 2, 5) == 0
    with pytest.raises(ConstraintError):
        cubic_multiplicity((3, 3, 1), 2, 6)


def test_flagged_triples():
    for k, t in [(1, (2, 1, 0)), (2, (3, 2, 1)), (3, (4, 3, 2)), (4, (5, 4, 3))]:
        flagged = [e.triple.as_tuple() for e in cubic_ideal_table(k, 2 * k + 2)[1] if e.flagged]
        assert flagged == [t]


def test_cubic_table_matches_kernel():
    for k, n in [(2, 5), (2, 6), (2, 7), (3, 6)]:
        table, _ = cubic_ideal_table(k, n)
        assert table.dimension(n) == ideal_degree_d(k, n, 2, 3).dimension, (k, n)


def test_quotient_readings():
    q = quotient_degree3(2, 6)
    assert q["ideal_dimension"] == 1 and q["s3_dimension"] == 680
    assert q["reading_dimensions"]["present"] == 679
    assert q["identity_holds"]["present"] and not q["identity_holds"]["literal"]
    assert q["flagged"] == [(3, 2, 1)]
    q = quotient_degree3(2, 5)
    assert q["ideal_dimension"] == 0 and q["reading_dimensions"]["present"] == 220


# -- highest weight vectors ---------------------------------------------------

@pytest.mark.parametrize("k,terms,value", [(2, 3, "8"), (3, 16, "-72")])
def test_hwv(k, terms, value):
    r = check_hwv(k)
    assert r["passed"] and r["terms"] == terms and r["value_at_Q"] == value
    assert r["weight_columns"] == [2 * k, k]


def test_hwv_rejects_wrong_polynomial():
    P = Poly.var(pvar((1, 2))) ** 3
    r = check_hwv(2, P)
    assert not r["passed"]


# -- open orbit ---------------------------------------------------------------

@pytest.mark.parametrize("alpha,mult", [((2, 1, 1, 0), 1), ((3, 1, 1, 0), 0), ((4, 3, 1, 0), 2), ((2, 2, 0, 0), 2),
                                        ((5, 4, 3, 2, 1, 0), 1), ((5, 4, 2, 1, 0, 0), 0)])
def test_orbit_ring_examples(alpha, mult):
    k = len(alpha) // 2
    assert orbit_ring_multiplicity(alpha, k) == mult
    assert orbit_ring_oracle(alpha, k) == mult


def test_orbit_ring_shift():
    assert orbit_ring_multiplicity((5, 4, 4, 3), 2) == orbit_ring_multiplicity((2, 1, 1, 0), 2)


def test_orbit_ring_random():
    rng = random.Random(7)
    for _ in range(30):
        k = rng.randint(1, 3)
        alpha = random_D_alpha(k, rng, top=5)
        assert in_D(alpha, k)
        assert orbit_ring_multiplicity(alpha, k) == orbit_ring_oracle(alpha, k), alpha


def test_in_D_validation():
    with pytest.raises(PreconditionError):
        in_D((1, 2), 1)
    with pytest.raises(PreconditionError):
        in_D((2, 1, 0), 2)


def test_crucial_m_matches_orbit_formula():
    rng = random.Random(3)
    for _ in range(15):
        k = rng.randint(1, 3)
        alpha = random_D_alpha(k, rng, top=4, shift=False)
        s = sum(alpha) // k
        if s == 0:
            continue
        mu = Partition(tuple(alpha), ROWS)
        assert crucial_m(mu, k, 2, s) == orbit_ring_multiplicity(alpha, k), alpha


def test_unordered_decompositions():
    assert unordered_decompositions(3, 2) == [(3, 0), (2, 1)]
    assert unordered_decompositions(0, 2) == [(0, 0)]


def test_crucial_bound():
    assert crucial_bound(columns(6), 2, 2, 3) == 1
    assert crucial_bound(columns(3, 3), 2, 2, 3) <= 0
