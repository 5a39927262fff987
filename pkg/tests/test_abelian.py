from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from abelian_tm.abelian import (
    abelian_complexity_of_prefix,
    abelian_complexity_oracle,
    prefix_profile,
    stable_prefix_complexity,
)
from abelian_tm.morphisms import cantor_morphism, factor_set, fixed_point_prefix, tm_morphism
from abelian_tm.words import Alphabet, WordError, parikh

from conftest import digit_sum_tm


def naive_abelian(w, n):
    return len({tuple(w[i:i + n].count(a) for a in sorted(set(w))) for i in range(len(w) - n + 1)})


@pytest.mark.parametrize("k,n,expected", [(2, 4, 3), (2, 5, 2), (3, 6, 7)])
def test_oracle_examples(k, n, expected):
    assert abelian_complexity_oracle(tm_morphism(k), n) == expected


def test_oracle_rejects_zero():
    with pytest.raises(ValueError):
        abelian_complexity_oracle(tm_morphism(2), 0)


def test_prefix_examples():
    assert abelian_complexity_of_prefix("01101001", 2) == 3
    assert abelian_complexity_of_prefix("01101001", 8) == 1
    assert abelian_complexity_of_prefix("0000", 2) == 1
    with pytest.raises(WordError):
        abelian_complexity_of_prefix("0110", 5)


def test_oracle_against_digit_sum_scan():
    # independent path: digit-sum word, plain string counting
    for k in (2, 3):
        w = digit_sum_tm(k, 4000)
        for n in range(1, 5 * k):
            assert abelian_complexity_oracle(tm_morphism(k), n) == naive_abelian(w, n)


def test_oracle_bounds():
    for m in (tm_morphism(2), tm_morphism(3), tm_morphism(4), cantor_morphism()):
        q = len(m.alphabet)
        for n in range(1, 25):
            rho = abelian_complexity_oracle(m, n)
            assert 1 <= rho <= min(len(factor_set(m, n)), comb(n + q - 1, q - 1))


def test_prefix_monotone_and_reaches_oracle():
    m = tm_morphism(3)
    w = fixed_point_prefix(m, 3 ** 6)
    for n in (2, 4, 7, 11):
        values = [abelian_complexity_of_prefix(w[:L], n) for L in range(n, len(w) + 1, 13)]
        assert values == sorted(values)
        assert abelian_complexity_of_prefix(w, n) == abelian_complexity_oracle(m, n)


def test_stable_prefix_estimate():
    m = tm_morphism(2)
    est = stable_prefix_complexity(lambda L: fixed_point_prefix(m, L), 6, 256)
    assert est.stable and est.status == "stable" and est.value == abelian_complexity_oracle(m, 6)
    short = stable_prefix_complexity(lambda L: fixed_point_prefix(m, L), 6, 6)
    assert short.status in ("stable", "lower bound")
    assert short.value <= abelian_complexity_oracle(m, 6)


def test_prefix_profile_wide_alphabet():
    # eight letters at n = 1000 leaves the packed-key path
    k = 8
    w = fixed_point_prefix(tm_morphism(k), 20000)
    assert prefix_profile(w, [1000]) == [naive_abelian(w, 1000)]


@settings(max_examples=80, deadline=None)
@given(st.text(alphabet="012", min_size=1, max_size=60), st.data())
def test_prefix_profile_matches_naive(w, data):
    n = data.draw(st.integers(1, len(w)))
    A = Alphabet.sigma(3)
    assert prefix_profile(w, [n], A) == [len({parikh(w[i:i + n], A) for i in range(len(w) - n + 1)})]
