from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smirnov_trees.algebra import LA, RA, RD, Series, partitions_of
from smirnov_trees.core import enumerate_smirnov_words, word_stats
from smirnov_trees.symfunc import (
    BASES,
    STPoly,
    SymFunc,
    SymmetryError,
    character_values,
    e_series,
    from_monomial_data,
    hall_inner,
    omega,
    sw_des_formula,
    sw_formula,
    sw_formula_product_form,
)


def brute_e(k, nvars):
    return {c: 1 for c in combinations(range(1, nvars + 1), k)}


def test_basis_convert_examples():
    assert SymFunc.e(1).convert("m") == SymFunc.m(1)
    assert SymFunc.e(2).convert("m").coeffs == {(1, 1): 1}
    assert SymFunc.e(2, 1).convert("m").coeffs == {(2, 1): 1, (1, 1, 1): 3}


def test_e21_against_expansion():
    # e2 * e1 in three variables, collected by hand from the product
    prod = {}
    for a, ca in brute_e(2, 3).items():
        for b, cb in brute_e(1, 3).items():
            key = tuple(sorted(a + b))
            prod[key] = prod.get(key, 0) + ca * cb
    assert prod[(1, 1, 2)] == 1 and prod[(1, 2, 3)] == 3
    assert SymFunc.e(2, 1).expand(3) == prod


def test_round_trips_up_to_degree_7():
    for n in range(1, 8):
        for pi in partitions_of(n):
            for src in BASES:
                f = SymFunc.element(src, pi)
                for dst in BASES:
                    assert f.convert(dst).convert(src) == f


def test_known_transitions():
    # e2 = (p1^2 - p2)/2 and h2 = (p1^2 + p2)/2
    assert SymFunc.e(2).convert("p").coeffs == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    assert SymFunc.h(2).convert("p").coeffs == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    assert SymFunc.h(2, 1).convert("e").coeffs == {(1, 1, 1): 1, (2, 1): -1}


def test_omega():
    assert omega(SymFunc.e(3)) == SymFunc.h(3)
    assert omega(SymFunc.p(2)).coeffs == {(2,): -1}
    assert omega(SymFunc.p(3)).coeffs == {(3,): 1}
    assert omega(SymFunc.m(1, 1)).convert("m").coeffs == {(2,): 1, (1, 1): 1}


def test_hall_inner():
    for n in range(1, 5):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                assert hall_inner(SymFunc.m(*lam), SymFunc.h(*mu)) == (1 if lam == mu else 0)
    assert hall_inner(SymFunc.p(2, 1), SymFunc.p(2, 1)) == 2
    assert hall_inner(SymFunc.p(1, 1, 1), SymFunc.p(1, 1, 1)) == 6


sym_terms = st.dictionaries(
    st.integers(1, 5).flatmap(lambda n: st.sampled_from(partitions_of(n))),
    st.integers(-4, 4),
    max_size=4,
)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(BASES), sym_terms, st.sampled_from(BASES), sym_terms)
def test_omega_and_inner_properties(b1, t1, b2, t2):
    f, g = SymFunc(b1, t1), SymFunc(b2, t2)
    assert f.omega().omega() == f
    assert hall_inner(f, g) == hall_inner(g, f)
    assert hall_inner(f.omega(), g.omega()) == hall_inner(f, g)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.dictionaries(st.sampled_from(partitions_of(n)),
                                                    st.integers(-5, 5), max_size=4))))
def test_monomial_extraction_inverts_expansion(data):
    n, terms = data
    f = SymFunc("e", terms)
    assert from_monomial_data(n, f.expand(n)) == f


def test_from_monomial_data_rejects_asymmetric():
    data = SymFunc.e(2, 1).expand(3)
    data.pop((1, 2, 2))
    with pytest.raises(SymmetryError):
        from_monomial_data(3, data)
    data = SymFunc.e(2, 1).expand(3)
    data[(1, 1, 2)] = 7
    with pytest.raises(SymmetryError):
        from_monomial_data(3, data)
    with pytest.raises(SymmetryError):
        from_monomial_data(2, {(1, 1, 2): 1})


def test_weightpoly_coefficients():
    f = SymFunc.e(2, coeff=RA + RD) + SymFunc.e(1, coeff=LA)
    g = f * f
    assert g.coefficient((2, 1)) == 2 * (RA + RD) * LA
    assert g.convert("m").convert("e") == g


def test_inverse_in_graded_ring():
    f = SymFunc.scalar(1) + SymFunc.e(1, coeff=RA) + SymFunc.h(2)
    assert f * f.inverse() == SymFunc.scalar(1)


def test_truncation():
    f = SymFunc.e(3, max_degree=4) * SymFunc.e(2, max_degree=4)
    assert not f


def word_sum_oracle(n, homogeneous=True):
    data = {}
    for w in enumerate_smirnov_words(n, n):
        a, d = word_stats(w)
        key = tuple(sorted(w))
        mono = STPoly({(a if homogeneous else 0, d): 1})
        data[key] = data[key] + mono if key in data else mono
    return from_monomial_data(n, data).convert("e")


def test_sw_formula_n3_published():
    t = STPoly.t()
    f = sw_formula(3).map_coeffs(lambda c: c.subs(1, t))
    assert f.coefficient((3,)) == 1 + t + t ** 2
    assert f.coefficient((2, 1)) == t
    assert set(f.coeffs) == {(3,), (2, 1)}


def test_sw_formula_n1():
    assert sw_formula(1).coeffs == {(1,): STPoly.const(1)}


def test_sw_formula_matches_words():
    for n in range(1, 6):
        assert sw_formula(n) == word_sum_oracle(n)
        assert sw_des_formula(n) == word_sum_oracle(n, homogeneous=False)
        assert sw_formula_product_form(n) == sw_formula(n)


def test_asc_des_rehomogenization():
    # W_n(s, t) = s^(n-1) W_n(1, t/s)
    for n in range(1, 6):
        assert word_sum_oracle(n) == word_sum_oracle(n, False).map_coeffs(
            lambda c: c.homogenize(n - 1))


def test_e_series_and_division():
    E = e_series(2)
    assert [str(c) for c in E.coeffs] == ["(1)*e[]", "(1)*e[1]", "(1)*e[2]"]
    # (E(z) - E(zt)) / (E(zt) - t E(z)) at t = 1/2, degree-1 coefficient is e1
    half = Fraction(1, 2)
    E = e_series(3)
    num = Series([E[n] - E[n] * half ** n for n in range(4)], 3)
    den = Series([E[n] * half ** n - E[n] * half for n in range(4)], 3)
    q = num / den
    assert q[1] == SymFunc.e(1)


def test_character_values():
    # p_1^3 is the regular character of S_3
    chi = character_values(SymFunc.p(1, 1, 1))
    assert chi == {(3,): 0, (2, 1): 0, (1, 1, 1): 6}
    assert character_values(SymFunc.h(3)) == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    with pytest.raises(ValueError):
        character_values(SymFunc.e(2) + SymFunc.e(1))


def test_json_round_trip():
    f = SymFunc.e(2, 1, coeff=RA * 3) + SymFunc.e(1, coeff=LA)
    assert SymFunc.from_json(f.to_json()) == f
    assert f.to_json()["basis"] == "e"
