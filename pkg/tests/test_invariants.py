from fractions import Fraction

import pytest

import symbpow.results as R
from symbpow.errors import ResourceLimitError
from symbpow.invariants import (alpha, alpha_equality_at_denominator, beta,
                                check_alpha_equality, check_alpha_lower,
                                check_alpha_slope, check_chudnovsky,
                                check_equigenerated_containment,
                                check_integrally_closed_bound,
                                chudnovsky_bound, invariant_report,
                                is_equigenerated, is_integrally_closed,
                                waldschmidt, waldschmidt_point)
from symbpow.monomial import MonomialIdeal, maximal_ideal, power

from conftest import ideal_of

F = Fraction


def test_alpha_beta(rot3, triples4):
    assert alpha(rot3) == 3 and beta(rot3) == 3
    assert alpha(triples4) == 3 and beta(triples4) == 3
    mixed = ideal_of(2, (2, 0), (0, 5))
    assert alpha(mixed) == 2 and beta(mixed) == 5
    assert not is_equigenerated(mixed)
    assert is_equigenerated(rot3)


def test_alpha_rejects_degenerate():
    with pytest.raises(ValueError):
        alpha(MonomialIdeal.zero(2))
    with pytest.raises(ValueError):
        beta(MonomialIdeal.unit(2))


def test_waldschmidt_values(rot3, triples4, edges3):
    assert waldschmidt(rot3) == F(2)
    assert waldschmidt(triples4) == F(2)
    assert waldschmidt(edges3) == F(3, 2)
    assert sum(waldschmidt_point(rot3)) == F(2)


def test_waldschmidt_of_prime_power():
    assert waldschmidt(power(maximal_ideal(3), 4)) == F(4)


def test_chudnovsky(rot3, triples4, edges3):
    for I, bound in ((rot3, F(2)), (triples4, F(2)), (edges3, F(3, 2))):
        assert chudnovsky_bound(I) == bound
        res = check_chudnovsky(I)
        assert res.verdict == R.HOLDS
        assert res.kind == R.CONJECTURE
        assert res.details["slack"] == 0


def test_alpha_lower(rot3):
    for m in (1, 2, 3, 4, 5, 6):
        res = check_alpha_lower(rot3, m)
        assert res.verdict == R.HOLDS
    # equality exactly at multiples of the realizing denominator 3
    assert check_alpha_lower(rot3, 3).details["equality"]
    assert check_alpha_lower(rot3, 6).details["equality"]
    assert not check_alpha_lower(rot3, 1).details["equality"]


def test_alpha_equality_at_denominator(rot3, triples4):
    rep = alpha_equality_at_denominator(rot3)
    assert rep == {"b": 3, "waldschmidt": F(2), "checked": True,
                   "alpha_at_b": 6, "equal": True}
    rep4 = alpha_equality_at_denominator(triples4)
    assert rep4["b"] == 2 and rep4["equal"]


def test_alpha_slope(triples4):
    res = check_alpha_slope(triples4, 1, m=2)
    assert res.verdict == R.HOLDS
    assert res.params == {"r": 1, "m": 2}
    assert res.details["s"] == 1
    below = check_alpha_slope(triples4, 1, m=1)
    assert below.verdict == R.NOT_APPLICABLE
    assert not below.in_hypothesis


def test_alpha_slope_auto_m(rot3):
    res = check_alpha_slope(rot3, 1)
    assert res.verdict == R.HOLDS
    assert res.params["m"] == 2  # threshold max(2, 3/2) = 2


def test_alpha_slope_threshold_cap(rot3):
    res = check_alpha_slope(rot3, 1, threshold_cap=1)
    assert res.verdict == R.RESOURCE_LIMIT


def test_equigenerated_containment(rot3, triples4):
    for I in (rot3, triples4):
        for r in (1, 2):
            res = check_equigenerated_containment(I, r)
            assert res.verdict == R.HOLDS, (I, r)
    mixed = ideal_of(2, (2, 0), (0, 5))
    assert check_equigenerated_containment(mixed, 1).verdict == R.NOT_APPLICABLE


def test_alpha_equality_check(edges3, rot3):
    # edges3: waldschmidt 3/2 != alpha 2 -> not applicable
    assert check_alpha_equality(edges3, 1).verdict == R.NOT_APPLICABLE
    # a prime power: waldschmidt equals alpha
    res = check_alpha_equality(power(maximal_ideal(2), 3), 1)
    assert res.verdict == R.HOLDS
    assert res.details["containment_checked"]
    assert check_alpha_equality(rot3, 1).verdict == R.NOT_APPLICABLE


def test_is_integrally_closed():
    assert is_integrally_closed(ideal_of(2, (2, 0), (0, 1)))
    assert is_integrally_closed(power(maximal_ideal(3), 4))
    # (x^2, y^2) misses x*y which lies in the Newton polyhedron
    assert not is_integrally_closed(ideal_of(2, (2, 0), (0, 2)))
    with pytest.raises(ResourceLimitError):
        is_integrally_closed(ideal_of(2, (40, 0), (0, 40)), max_points=100)


def test_integrally_closed_bound():
    I = power(maximal_ideal(3), 8)  # n = 2, alpha = 8: hypothesis boundary
    res = check_integrally_closed_bound(I)
    assert res.verdict == R.HOLDS
    assert res.details["bound"] == F(9, 2)
    small = power(maximal_ideal(3), 3)
    assert check_integrally_closed_bound(small).verdict == R.NOT_APPLICABLE


def test_invariant_report(rot3):
    rep = invariant_report(rot3, ("x", "y", "z"))
    assert rep["alpha"] == 3
    assert rep["big_height"] == 2
    assert rep["sigma"] == 2
    assert rep["waldschmidt"] == F(2)
    assert rep["ass"] == ["(x,y)", "(x,z)", "(y,z)"]
    assert rep["squarefree"] is False
    assert rep["symbolic_equals_ordinary"] is False
    assert rep["integrally_closed"] is True
