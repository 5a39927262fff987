from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from abelian_tm.abelian import abelian_complexity_oracle
from abelian_tm.closed_form import (
    MAX_CLOSED_K,
    TMParameters,
    closed_form_branch,
    count_circle_arc_vectors,
    lemma3_sum,
    lemma4_sum,
    tm_abelian_closed,
)
from abelian_tm.morphisms import tm_morphism


def exact_branch(k, r):
    # rational evaluation of the five branches, no integer shortcuts
    k = Fraction(k)
    if k % 2:
        return k * (k * k - 1) / 4 + 1 if r == 0 else k * (k - 1) ** 2 / 4 + k
    if r == 0:
        return k ** 3 / 4 + 1
    if r % 2 == 0:
        return k * (k - 1) ** 2 / 4 + Fraction(5, 4) * k
    return k * k * (k - 2) / 4 + k


@pytest.mark.parametrize("k,n,expected", [(2, 6, 3), (5, 12, 25), (6, 14, 45), (2, 4, 3), (2, 5, 2), (3, 6, 7), (3, 5, 6), (4, 9, 12)])
def test_closed_examples(k, n, expected):
    assert tm_abelian_closed(k, n) == expected


def test_tm4_window():
    assert [tm_abelian_closed(4, n) for n in range(8, 12)] == [17, 12, 14, 12]


@pytest.mark.parametrize("k,expected", [(4, 17), (3, 7), (2, 3)])
def test_multiple_of_k_sum_examples(k, expected):
    assert lemma3_sum(k) == expected


@pytest.mark.parametrize("k,r,expected", [(4, 2, 14), (3, 1, 6), (2, 1, 2)])
def test_residue_sum_examples(k, r, expected):
    assert lemma4_sum(k, r) == expected


def test_argument_checks():
    with pytest.raises(ValueError):
        tm_abelian_closed(4, 3)
    with pytest.raises(ValueError):
        tm_abelian_closed(1, 5)
    with pytest.raises(ValueError):
        tm_abelian_closed(MAX_CLOSED_K + 1, MAX_CLOSED_K + 1)
    with pytest.raises(ValueError):
        lemma4_sum(4, 0)
    with pytest.raises(ValueError):
        lemma4_sum(4, 4)
    with pytest.raises(ValueError):
        lemma3_sum(1)


def test_parameters():
    p = TMParameters(5, 17)
    assert (p.m, p.r) == (3, 2)
    assert p.k * p.m + p.r == p.n


@pytest.mark.parametrize("k", range(2, 65))
def test_summations_match_branches(k):
    assert lemma3_sum(k) == tm_abelian_closed(k, k)
    for r in range(1, k):
        assert lemma4_sum(k, r) == tm_abelian_closed(k, k + r)


@pytest.mark.parametrize("k", range(2, 65))
def test_branches_are_integral(k):
    for r in range(k):
        value = exact_branch(k, r)
        assert value.denominator == 1
        assert tm_abelian_closed(k, k + r) == value


@given(st.integers(2, MAX_CLOSED_K), st.integers(0, 10 ** 6))
def test_period_k(k, offset):
    n = k + offset
    assert tm_abelian_closed(k, n) == tm_abelian_closed(k, n + k)
    assert tm_abelian_closed(k, n) == exact_branch(k, n % k)


def test_branch_names():
    assert closed_form_branch(3, 0) == "odd,r=0"
    assert closed_form_branch(3, 2) == "odd,r!=0"
    assert closed_form_branch(4, 0) == "even,r=0"
    assert closed_form_branch(4, 2) == "even,r even"
    assert closed_form_branch(4, 3) == "even,r odd"


@pytest.mark.parametrize("k", range(2, 9))
def test_circle_arcs(k):
    assert lemma3_sum(k) - 1 == count_circle_arc_vectors(k)


def test_closed_matches_oracle_small():
    for k in (2, 3, 4, 5):
        m = tm_morphism(k)
        for n in range(k, 6 * k):
            assert tm_abelian_closed(k, n) == abelian_complexity_oracle(m, n)
