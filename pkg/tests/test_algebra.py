from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smirnov_trees.algebra import (
    LA,
    LD,
    ONE,
    RA,
    RD,
    ZERO,
    Series,
    WeightPoly,
    multiplicities,
    partitions_of,
    z_number,
)

exps = st.tuples(*[st.integers(0, 3)] * 4)
coeffs = st.integers(-20, 20)
polys = st.dictionaries(exps, coeffs, max_size=5).map(WeightPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(polys)
def test_text_and_json_round_trip(a):
    assert WeightPoly.parse(str(a)) == a
    assert WeightPoly.from_json(a.to_json()) == a


def test_canonical_text():
    p = 2 * RA ** 3 * RD ** 2 + LA
    assert str(p) == "2*ra^3*rd^2 + la"
    assert str(ZERO) == "0"
    assert str(RA * LA + RD * LD) == "ra*la + rd*ld"


def test_json_shape():
    assert (RA * LD * 3).to_json() == [{"e": [1, 0, 0, 1], "c": "3"}]


def test_fraction_coefficients_normalize():
    p = RA * Fraction(1, 2) + RA * Fraction(1, 2)
    assert p == RA
    assert isinstance(p.coefficient((1, 0, 0, 0)), int)


def test_evaluate_and_degree():
    p = (RA + RD + LA + LD) ** 2
    assert p.evaluate((1, 1, 1, 1)) == 16
    assert p.evaluate((1, 1, 1, 0)) == 9
    assert p.degree() == 2
    assert p.is_nonnegative()
    assert not (RA - RD).is_nonnegative()


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        WeightPoly.parse("ra^^2")
    with pytest.raises(ValueError):
        WeightPoly.parse("xy")


def test_partitions():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(partitions_of(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]
    assert multiplicities((2, 2, 1)) == {2: 2, 1: 1}
    assert z_number((2, 2, 1)) == 8
    assert z_number((1, 1, 1)) == 6
    assert z_number((3,)) == 3


def test_series_inverse_and_exp():
    x = Series([0, 1, 0, 0, 0, 0], 5)
    geometric = (1 - x).inverse()
    assert list(geometric.coeffs) == [1] * 6
    e = x.exp()
    assert [Fraction(c) for c in e.coeffs] == [Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6),
                                               Fraction(1, 24), Fraction(1, 120)]
    assert e.to_exponential().coeffs == (1,) * 6


def test_series_division_round_trip():
    a = Series([RA, RD, LA * 2, LD, RA * RD], 4)
    b = Series([1, RA, RD + LA, 0, LD], 4)
    assert (a * b) / b == a


def test_series_compose():
    x = Series([0, 1, 0, 0], 3)
    f = Series([1, 1, 1, 1], 3)   # 1/(1-x) truncated
    g = f.compose(x + x * x)
    # 1 + (x+x^2) + (x+x^2)^2 + (x+x^2)^3
    assert list(g.coeffs) == [1, 1, 2, 3]
    with pytest.raises(ValueError):
        f.compose(f)


def test_series_non_unit_division():
    with pytest.raises(ZeroDivisionError):
        Series([0, 1], 1).inverse()
    with pytest.raises(ZeroDivisionError):
        Series([RA, 1], 1).inverse()


def test_unit_inverse_of_constants():
    assert (ONE * 4).unit_inverse() == ONE * Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        RA.unit_inverse()
