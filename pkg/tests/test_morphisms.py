import pytest
from hypothesis import given, settings, strategies as st

from abelian_tm.morphisms import (
    MorphismError,
    UniformMorphism,
    apply,
    cantor_morphism,
    factor_set,
    fixed_point_prefix,
    format_morphism,
    parse_morphism,
    reachable_letters,
    resolve_sequence,
    tm_morphism,
)
from abelian_tm.words import Alphabet, WordError, abelian_classes, factors

from conftest import digit_sum_tm, scan_factor_set


def test_tm_morphism_images():
    assert tm_morphism(2).images == ("01", "10")
    assert tm_morphism(3).images == ("012", "120", "201")
    assert tm_morphism(3).length == 3 and tm_morphism(3).seed == "0"


@pytest.mark.parametrize("k", [0, 1, 256])
def test_tm_morphism_range(k):
    with pytest.raises(MorphismError):
        tm_morphism(k)


def test_cantor():
    c = cantor_morphism()
    assert c.images == ("000", "101") and c.length == 3
    assert apply(c, "01") == "000101"
    assert c.seed == "1"
    assert fixed_point_prefix(c, 9) == "101000101"
    # seeded at 0 the fixed point is constant and 1 is unreachable
    c0 = cantor_morphism("0")
    assert fixed_point_prefix(c0, 9) == "000000000"
    assert reachable_letters(c0) == {"0"}
    assert factor_set(c0, 4) == {"0000"}


def test_parse_morphism():
    m = parse_morphism("0->01,1->10")
    assert m == tm_morphism(2)
    assert m.seed == "0"
    m = parse_morphism(" 0 -> 000 , 1 -> 101 ; seed = 1 ")
    assert m == cantor_morphism()
    assert parse_morphism(format_morphism(m)) == m


@pytest.mark.parametrize(
    "text,needle",
    [
        ("0->01,1->100", "not uniform"),
        ("0->01,1->12", "not in alphabet"),
        ("0->10,1->01", "not prolongable"),
        ("0->01,0->10", "duplicate"),
        ("0->01,1->10;seed=2", "seed"),
        ("0=>01", "cannot parse"),
        ("0->0,1->1", "at least 2"),
    ],
)
def test_parse_morphism_errors(text, needle):
    with pytest.raises(MorphismError, match=needle):
        parse_morphism(text)


def test_resolve_sequence():
    assert resolve_sequence("tm:4") == tm_morphism(4)
    assert resolve_sequence("cantor") == cantor_morphism()
    with pytest.raises(MorphismError):
        resolve_sequence("tm:x")


def test_apply():
    s2, s3 = tm_morphism(2), tm_morphism(3)
    assert apply(s2, "0") == "01"
    assert apply(s3, "01") == "012120"
    assert apply(s2, "") == ""
    with pytest.raises(WordError):
        apply(s2, "012")


def test_fixed_point_prefix_examples():
    assert fixed_point_prefix(tm_morphism(2), 8) == "01101001" == digit_sum_tm(2, 8)
    assert fixed_point_prefix(tm_morphism(3), 9) == "012120201" == digit_sum_tm(3, 9)
    assert fixed_point_prefix(cantor_morphism(), 1) == "1"


@pytest.mark.parametrize("k", range(2, 9))
def test_fixed_point_matches_digit_sums(k):
    assert fixed_point_prefix(tm_morphism(k), 3000) == digit_sum_tm(k, 3000)


def test_fixed_point_invariants(tm):
    ell = tm.length
    for L in (1, 2, 5, 17):
        assert fixed_point_prefix(tm, ell * L) == apply(tm, fixed_point_prefix(tm, L))
        assert fixed_point_prefix(tm, 2 * L).startswith(fixed_point_prefix(tm, L))


def test_factor_set_examples():
    assert factor_set(tm_morphism(2), 2) == {"00", "01", "10", "11"} == scan_factor_set(tm_morphism(2), 2, 64)
    assert factor_set(tm_morphism(3), 1) == {"0", "1", "2"} == scan_factor_set(tm_morphism(3), 1, 64)
    assert len(abelian_classes(factor_set(tm_morphism(3), 5), tm_morphism(3).alphabet)) == 6


def scan_length(m, n):
    # 4*l^3*n alone is too short once l >= 4: a square "aa" of the
    # generalized Thue-Morse word first occurs near position l^l
    ell = m.length
    return max(4 * ell ** 3 * n, ell ** (ell + 2))


def test_factor_set_matches_prefix_scan(tm):
    for n in range(1, 4 * tm.length + 2):
        length = scan_length(tm, n)
        scanned = scan_factor_set(tm, n, length)
        assert scan_factor_set(tm, n, 2 * length) == scanned
        assert factor_set(tm, n) == scanned


@pytest.mark.parametrize("k", [2, 3])
def test_factor_set_short_scan_small_k(k):
    m = tm_morphism(k)
    for n in range(1, 4 * k + 2):
        length = 4 * k ** 3 * n
        assert scan_factor_set(m, n, length) == scan_factor_set(m, n, 2 * length) == factor_set(m, n)


def test_short_scan_misses_squares_for_large_k():
    m = tm_morphism(5)
    length = 4 * 5 ** 3 * 2
    short = scan_factor_set(m, 2, length)
    # one doubling still misses "00"
    assert "00" not in scan_factor_set(m, 2, 2 * length)
    missing = factor_set(m, 2) - short
    assert missing == {"00", "10", "22", "33", "44"}
    w = fixed_point_prefix(m, 6000)
    assert w.find("00") == 5624


def test_factor_set_structure(tm):
    assert len(factor_set(tm, 1)) == tm.length
    for n in range(2, 30):
        fs = factor_set(tm, n)
        shorter = factor_set(tm, n - 1)
        for w in fs:
            assert len(w) == n
            assert w[1:] in shorter and w[:-1] in shorter


def test_factor_set_cantor_matches_scan():
    c = cantor_morphism()
    for n in range(1, 30):
        assert factor_set(c, n) == scan_factor_set(c, n, 4 * 27 * n)


@st.composite
def uniform_morphisms(draw):
    q = draw(st.integers(2, 3))
    ell = draw(st.integers(2, 3))
    letters = "012"[:q]
    images = [draw(st.text(alphabet=letters, min_size=ell, max_size=ell)) for _ in letters]
    images[0] = "0" + images[0][1:]
    return UniformMorphism(Alphabet(tuple(letters)), tuple(images), "0")


@settings(max_examples=60, deadline=None)
@given(uniform_morphisms(), st.integers(1, 12))
def test_factor_set_random_morphisms(m, n):
    length = 4 * m.length ** 3 * n * 4
    scanned = scan_factor_set(m, n, length)
    assert factor_set(m, n) == scanned
