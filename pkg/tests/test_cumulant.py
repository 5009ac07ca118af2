from fractions import Fraction

import pytest

from secgrass.cumulant import (Chart, NonTriangularError, compose, composition_sum, invert_triangular, p_poly,
                               pfaffian_pluecker, pfaffian_pluecker_suite, resolved_sign, secant_in_coords,
                               tangent_in_z, verify_comput_identity, verify_composition_sum, verify_main_theorem,
                               verify_secant_lemmas, x_to_y, y_to_z)
from secgrass.minuscule import TypeA, TypeD
from secgrass.poly import Poly, Var

t = Poly.var("t")


def X(w):
    return Poly.var("x", w)


def test_degree_one_coordinates_unchanged():
    ch = Chart(TypeA(2, 5))
    xy, yz = x_to_y(ch), y_to_z(ch)
    for w in ch.weights():
        if ch.fam.degree(w) == 1:
            assert xy[w] == X(w)
            assert yz[w] == Poly.var("y", w)


def test_x_to_y_top_weight():
    y = x_to_y(Chart(TypeA(2, 4)))[((1, 2), (1, 2))]
    assert y == X(((1, 2), (1, 2))) - X(((1,), (1,))) * X(((2,), (2,))) + X(((1,), (2,))) * X(((2,), (1,)))


def test_y_to_z_low_degrees():
    for fam, w in [(TypeA(2, 5), ((1, 2), (2, 3))), (TypeA(3, 6), ((1, 2, 3), (1, 2, 3))), (TypeD(6), (1, 2, 3, 4, 5, 6))]:
        assert y_to_z(Chart(fam))[w] == -Poly.var("y", w)


def test_inverses_compose_to_identity():
    ch = Chart(TypeA(2, 5))
    f = x_to_y(ch)
    g = invert_triangular(f, "x", "y", ch.fam.degree)
    assert all(compose(f, g, "x")[w] == Poly.var("y", w) for w in ch.weights())
    D = Chart(TypeD(5))
    h = y_to_z(D)
    hi = invert_triangular(h, "y", "z", D.fam.degree)
    assert all(compose(h, hi, "y")[w] == Poly.var("z", w) for w in D.weights())


def test_identity_map_inverts_to_identity():
    ch = Chart(TypeA(2, 4))
    ident = {w: X(w) for w in ch.weights()}
    inv = invert_triangular(ident, "x", "x", ch.fam.degree)
    assert inv == ident


def test_non_triangular_rejected():
    ch = Chart(TypeA(2, 4))
    top = ((1, 2), (1, 2))
    bad = {w: X(w) for w in ch.weights()}
    bad[((1,), (1,))] = X(((1,), (1,))) + X(top)
    with pytest.raises(NonTriangularError):
        invert_triangular(bad, "x", "y", ch.fam.degree)
    bad = {w: X(w) for w in ch.weights()}
    bad[top] = X(((1,), (1,)))
    with pytest.raises(NonTriangularError):
        invert_triangular(bad, "x", "y", ch.fam.degree)


def test_p_polynomials():
    assert p_poly(1) == 0
    assert p_poly(2) == t - t ** 2
    assert p_poly(3) == t - 3 * t ** 2 + 2 * t ** 3
    assert p_poly(3).eval({Var("t"): Fraction(1, 2)}) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_comput_identity(k):
    assert verify_comput_identity(k)


def test_composition_sum_sign():
    assert resolved_sign() == -1
    assert composition_sum(2) == -(t * (1 - t))
    assert composition_sum(4) == 4 * t ** 4 - 8 * t ** 3 + 5 * t ** 2 - t
    assert all(verify_composition_sum(d) for d in range(2, 9))
    assert not verify_composition_sum(3, sign=1)


@pytest.mark.parametrize("fam", [TypeA(2, 5), TypeA(2, 6), TypeA(3, 6), TypeD(5), TypeD(6), TypeA(3, 6, "reversed")],
                         ids=lambda f: f.label() + f.pairing)
def test_secant_lemmas(fam):
    r = verify_secant_lemmas(fam)
    assert r["y"] and r["z"], r["mismatches"]


def test_secant_degree_one():
    fam = TypeA(2, 5)
    a, b = Poly.var("a", (1, 2)), Poly.var("b", (1, 2))
    for coords in "xyz":
        assert secant_in_coords(fam, coords)[((1,), (2,))] == t * a + (1 - t) * b


@pytest.mark.parametrize("fam", [TypeA(2, 4), TypeA(3, 6), TypeD(5)], ids=lambda f: f.label())
def test_tangent_constant(fam):
    r = tangent_in_z(fam)
    assert r.consistent
    assert r.c == Fraction(1, 4)


def test_main_theorem_samples():
    r = verify_main_theorem(TypeA(2, 6), samples=25, seed=0)
    assert r["passed"] and r["relations"] == 1
    r = verify_main_theorem(TypeA(2, 7), samples=10, seed=1)
    assert r["passed"] and r["relations"] == 5
    r = verify_main_theorem(TypeA(3, 6), samples=5)
    assert r["passed"] and r["relations"] == 0
    with pytest.raises(ValueError):
        verify_main_theorem(TypeD(5))


def test_pfaffian_example_n6():
    r = pfaffian_pluecker(6, (1, 2, 3, 4, 5, 6))
    assert r["passed"] and r["pullback_degree"] == 3


def test_pfaffian_n7_choices():
    res = pfaffian_pluecker_suite(7, all_charts=False)
    assert len(res) == 5 and all(r["passed"] for r in res)
    assert len(pfaffian_pluecker_suite(7)) == 7
