from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import naive_is_square_free
from sqfree.words import (HOLE, PatternSet, PeriodicPartialWord, compatible, expand_pattern,
                          extends_square_free, is_square_free, parse_partial, parse_word,
                          render, square_free_words)

# letters of the English examples mapped onto integers
ENG = {c: i for i, c in enumerate("abcdefghijklmnopqrstuvwxyz")}


def eng(s):
    return tuple(ENG[c] for c in s)


def test_hotshots_is_a_square():
    assert not extends_square_free(eng("hotshot"), ENG["s"])


def test_minimize_is_square_free():
    assert extends_square_free(eng("minimiz"), ENG["e"])
    assert is_square_free(eng("minimize"))


def test_single_letter():
    assert extends_square_free((), 0, k=3)


def test_bounded_period():
    assert extends_square_free((0, 1), 0, max_period=2)
    assert not extends_square_free((0, 1), 1, max_period=2)


def test_letter_outside_alphabet():
    with pytest.raises(ValueError):
        extends_square_free((0, 1), 3, k=3)


@pytest.mark.parametrize("word, max_period, expected", [
    ("010", None, True),
    ("0210120", None, True),
    ("0101", None, False),
    ("0101", 2, True),   # only period 1 is forbidden
    ("0101", 3, False),
    ("0110", 2, False),
])
def test_is_square_free(word, max_period, expected):
    assert is_square_free(parse_word(word), max_period) is expected
    assert naive_is_square_free(parse_word(word), max_period) is expected


@pytest.mark.parametrize("k, p", [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)])
def test_bounded_check_agrees_with_factor_scan(k, p):
    for n in range(2 * p + 1):
        for w in product(range(k), repeat=n):
            assert is_square_free(w, p) == naive_is_square_free(w, p)


@given(st.lists(st.integers(0, 2), max_size=14), st.one_of(st.none(), st.integers(2, 6)))
def test_incremental_matches_batch(word, max_period):
    ok = True
    for j in range(len(word)):
        ok = ok and extends_square_free(word[:j], word[j], max_period)
        assert ok == is_square_free(word[:j + 1], max_period)


def test_square_free_word_counts():
    # ternary square-free words of length 0..6 (brute-force checked below)
    counts = [len(list(square_free_words(3, n))) for n in range(7)]
    assert counts == [sum(naive_is_square_free(w) for w in product(range(3), repeat=n)) for n in range(7)]
    assert counts[:4] == [1, 3, 6, 12]


@pytest.mark.parametrize("v, mu, expected", [
    ("012", "0.2", True),
    ("01", "0.2", True),
    ("0122", "0.2", False),
    ("112", "0.2", False),
])
def test_compatible(v, mu, expected):
    assert compatible(parse_word(v), parse_partial(mu)) is expected


@given(st.lists(st.integers(0, 2), max_size=10), st.lists(st.integers(-1, 2), max_size=12))
def test_compatibility_closed_under_prefixes(v, mu):
    if compatible(v, mu):
        assert all(compatible(v[:j], mu) for j in range(len(v)))


@given(st.lists(st.integers(0, 2), max_size=10), st.integers(0, 3))
def test_all_holes_accept_square_free_words(v, extra):
    if is_square_free(v):
        assert compatible(v, (HOLE,) * (len(v) + extra))


def test_periodic_partial_word():
    mu = PeriodicPartialWord.parse("(0{.^5}1{.^5}2{.^5})")
    assert render(mu.at(i) for i in range(19)) == "0.....1.....2.....0"
    assert compatible((0, 2, 2, 0, 1, 0, 1), mu)
    assert not compatible((1,), mu)
    finite = PeriodicPartialWord.parse("00")
    assert len(finite) == 2 and not compatible((0, 0, 1), finite)
    blocks = PeriodicPartialWord(prefix=[(0,)], cycle=[(HOLE,), (1, HOLE)]).blocks()
    assert [next(blocks) for _ in range(4)] == [(0,), (HOLE,), (1, HOLE), (HOLE,)]


def test_expand_pattern_macros():
    assert expand_pattern("0.2", 3) == [(0, HOLE, 2)]
    assert expand_pattern("{.^9}", 3) == [(HOLE,) * 9]
    six = expand_pattern("{.a.b}", 6)
    assert len(six) == 36 and (HOLE, 5, HOLE, 0) in six
    tern = expand_pattern("{.^i a : i=18..26}", 3)
    assert len(tern) == 27
    assert sorted({len(w) for w in tern}) == list(range(19, 28))
    with pytest.raises(ValueError):
        expand_pattern("{.^n}", 3)


def test_pattern_set_validation():
    PatternSet(((HOLE,),), 2, {1: 1})
    with pytest.raises(ValueError):
        PatternSet(((HOLE, HOLE),), 3, {2: 1})   # p below 2 * max length
    with pytest.raises(ValueError):
        PatternSet(((HOLE,),), 2, {1: 1, 2: 1})  # f defined off the lengths
