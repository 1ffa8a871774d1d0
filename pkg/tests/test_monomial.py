import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbpow.errors import DimensionMismatchError
from symbpow.monomial import (Monomial, MonomialIdeal, containment_with_m,
                              contains, degree_monomials, intersect,
                              is_squarefree, maximal_ideal, minimalize,
                              multiply, power, radical, subset)

from conftest import ideal_of


def m(*exps):
    return Monomial(tuple(exps))


# ---------------------------------------------------------------------------
# Monomial basics


def test_monomial_degree_support():
    g = m(2, 0, 3)
    assert g.degree == 5
    assert g.support == (0, 2)
    assert not g.is_squarefree
    assert m(1, 0, 1).is_squarefree


def test_monomial_divides_lcm_mul():
    assert m(1, 0).divides(m(2, 1))
    assert not m(1, 2).divides(m(2, 1))
    assert m(1, 2).lcm(m(2, 1)) == m(2, 2)
    assert m(1, 2) * m(2, 1) == m(3, 3)


def test_monomial_rejects_negative():
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_render():
    assert m(2, 1, 0).render(("x", "y", "z")) == "x^2*y"
    assert m(0, 0).render() == "1"


# ---------------------------------------------------------------------------
# ideal construction and minimal generators


def test_make_minimalizes_and_sorts():
    I = ideal_of(2, (2, 0), (2, 1), (0, 3), (2, 0))
    # (x^2*y is divisible by x^2; duplicates collapse)
    assert I.vectors == ((2, 0), (0, 3))


def test_zero_and_unit():
    Z = MonomialIdeal.zero(3)
    U = MonomialIdeal.unit(3)
    assert Z.is_zero and Z.is_proper  # the zero ideal is proper
    assert U.is_unit and not U.is_proper
    assert ideal_of(3, (0, 0, 0), (1, 2, 0)).is_unit
    assert ideal_of(2, (1, 0)).is_proper


def test_contains_membership():
    I = ideal_of(2, (2, 0), (0, 1))
    assert contains(I, m(2, 5))
    assert contains(I, m(0, 1))
    assert not contains(I, m(1, 0))
    assert not contains(MonomialIdeal.zero(2), m(1, 0))
    assert contains(MonomialIdeal.unit(2), m(0, 0))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        intersect(ideal_of(2, (1, 0)), ideal_of(3, (1, 0, 0)))


# ---------------------------------------------------------------------------
# frozen arithmetic oracles


def test_intersect_known_values():
    x = ideal_of(2, (1, 0))
    y = ideal_of(2, (0, 1))
    assert intersect(x, y).vectors == ((1, 1),)
    # (x^2, y) cap (y^2, x) = (x*y, x^2, y^2) minimalized
    a = ideal_of(2, (2, 0), (0, 1))
    b = ideal_of(2, (0, 2), (1, 0))
    assert intersect(a, b).vectors == ((0, 2), (1, 1), (2, 0))


def test_intersect_three_primes(edges3):
    x_y = ideal_of(3, (1, 0, 0), (0, 1, 0))
    x_z = ideal_of(3, (1, 0, 0), (0, 0, 1))
    y_z = ideal_of(3, (0, 1, 0), (0, 0, 1))
    got = intersect(intersect(x_y, x_z), y_z)
    assert got == edges3


def test_power_known_value():
    I = ideal_of(2, (2, 0), (0, 1))
    cube = power(I, 3)
    assert cube.vectors == ((0, 3), (2, 2), (4, 1), (6, 0))


def test_power_edge_cases():
    I = ideal_of(2, (1, 1))
    assert power(I, 0).is_unit
    assert power(I, 1) == I
    assert power(MonomialIdeal.zero(2), 3).is_zero
    assert power(MonomialIdeal.unit(2), 3).is_unit


def test_multiply():
    I = ideal_of(2, (1, 0))
    J = ideal_of(2, (0, 1), (2, 0))
    assert multiply(I, J).vectors == ((1, 1), (3, 0))
    assert multiply(I, MonomialIdeal.zero(2)).is_zero


def test_radical_and_squarefree(rot3):
    assert radical(rot3).vectors == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert not is_squarefree(rot3)
    assert is_squarefree(radical(rot3))


def test_subset():
    I = ideal_of(2, (2, 0), (0, 2))
    J = ideal_of(2, (1, 0), (0, 1))
    assert subset(I, J)
    assert not subset(J, I)
    assert subset(MonomialIdeal.zero(2), I)
    assert subset(I, MonomialIdeal.unit(2))


def test_containment_with_m_degree_gap():
    J = ideal_of(3, (1, 1, 0))
    assert containment_with_m(m(2, 1, 0), J, 1)       # one spare degree
    assert not containment_with_m(m(1, 1, 0), J, 1)   # no room for m
    assert containment_with_m(m(1, 1, 0), J, 0)
    assert not containment_with_m(m(1, 0, 0), J, 0)


def test_simplex_power_recognition():
    P2 = power(ideal_of(3, (1, 0, 0), (0, 1, 0)), 2)
    assert P2.simplex_power == ((0, 1), 2)
    assert ideal_of(3, (2, 0, 0), (0, 1, 0)).simplex_power is None
    assert maximal_ideal(3).simplex_power == ((0, 1, 2), 1)


def test_degree_monomials_count():
    assert len(degree_monomials(3, 4)) == 15  # C(4+2, 2)


def test_huge_exponents_fall_back_to_python():
    big = 10 ** 30
    I = ideal_of(2, (big, 0), (0, big))
    J = ideal_of(2, (1, 1))
    assert intersect(I, J).vectors == ((1, big), (big, 1))
    assert power(I, 2).vectors == ((0, 2 * big), (big, big), (2 * big, 0))
    assert contains(I, m(big + 1, 0))


# ---------------------------------------------------------------------------
# property tests

small_vec = st.lists(st.integers(min_value=0, max_value=4), min_size=3, max_size=3)
small_ideal = st.lists(small_vec, min_size=1, max_size=5).map(
    lambda vs: MonomialIdeal.make(3, [Monomial(tuple(v)) for v in vs]))


@given(st.lists(small_vec, min_size=1, max_size=8))
def test_minimalize_idempotent_and_order_free(vecs):
    mons = [Monomial(tuple(v)) for v in vecs]
    once = minimalize(mons)
    assert minimalize(once) == once
    assert minimalize(list(reversed(mons))) == once


@given(small_ideal, small_ideal)
def test_intersect_commutes(I, J):
    assert intersect(I, J) == intersect(J, I)


@given(small_ideal, small_ideal, small_ideal)
@settings(max_examples=40)
def test_intersect_associates(I, J, K):
    assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))


@given(small_ideal, small_ideal)
def test_intersect_is_greatest_lower_bound(I, J):
    got = intersect(I, J)
    assert subset(got, I) and subset(got, J)
    for g in got.gens:
        assert contains(I, g) and contains(J, g)


@given(small_ideal, st.integers(min_value=0, max_value=3),
       st.integers(min_value=0, max_value=2))
@settings(max_examples=40)
def test_power_is_additive(I, a, b):
    assert multiply(power(I, a), power(I, b)) == power(I, a + b)


@given(small_ideal, small_vec, st.integers(min_value=0, max_value=3))
def test_containment_with_m_matches_literal_product(I, vec, s):
    if not I.is_proper:
        return
    f = Monomial(tuple(vec))
    literal = multiply(power(maximal_ideal(3), s), I)
    assert containment_with_m(f, I, s) == contains(literal, f)
