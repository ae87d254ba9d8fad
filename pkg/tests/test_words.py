import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majinv import Composition, Word, class_size, composition_of, enumerate_class
from majinv.words import Alphabet, compositions_of_weight, words_of_length


def wd(text, size):
    return Word.parse(text, size)


def test_composition_of_examples():
    assert composition_of(wd("", 3)).counts == (0, 0, 0)
    assert composition_of(wd("3 1 2", 3)).counts == (1, 1, 1)
    assert composition_of(wd("1 1 2", 2)).counts == (2, 1)


def test_enumerate_class_examples():
    assert [w.letters for w in enumerate_class(Composition((1, 1)))] == [(1, 2), (2, 1)]
    assert [w.letters for w in enumerate_class(Composition((2, 1)))] == [
        (1, 1, 2),
        (1, 2, 1),
        (2, 1, 1),
    ]
    assert [w.letters for w in enumerate_class(Composition((0, 0, 0)))] == [()]


def test_class_size_examples():
    assert class_size(Composition((1, 1, 1))) == 6
    assert class_size(Composition((2, 1))) == 3
    assert class_size(Composition((7,))) == 1


def test_word_validation():
    with pytest.raises(ValueError):
        Word((0, 1), 2)
    with pytest.raises(ValueError):
        Word((3,), 2)
    with pytest.raises(ValueError):
        Word((), 0)
    with pytest.raises(ValueError):
        Composition((1, -1))
    with pytest.raises(ValueError):
        Alphabet(0)


def test_text_forms_round_trip():
    w = wd("3 1 2", 3)
    assert w.text() == "3 1 2"
    assert Word.parse(w.text(), 3) == w
    assert wd("", 4).text() == ""
    c = Composition.parse("1,0,2")
    assert c.counts == (1, 0, 2)
    assert Composition.parse(c.text()) == c


def test_enumerate_class_matches_class_size_exhaustively():
    # every composition with weight <= 8 over alphabets up to size 4
    for r in range(1, 5):
        for n in range(9):
            for c in compositions_of_weight(r, n):
                seen = list(enumerate_class(c))
                letters = [w.letters for w in seen]
                assert letters == sorted(letters)
                assert len(set(letters)) == len(letters) == class_size(c)
                assert all(composition_of(w) == c for w in seen)


def test_words_of_length_counts():
    assert sum(1 for _ in words_of_length(3, 4)) == 81
    assert [w.letters for w in words_of_length(2, 1)] == [(1,), (2,)]


def test_compositions_of_weight_counts():
    assert sum(1 for _ in compositions_of_weight(3, 4)) == math.comb(6, 2)
    assert [c.counts for c in compositions_of_weight(2, 2)] == [
        (0, 2),
        (1, 1),
        (2, 0),
    ]


@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda r: st.tuples(
            st.just(r), st.lists(st.integers(min_value=1, max_value=r), max_size=12)
        )
    )
)
def test_composition_of_counts_letters(args):
    r, letters = args
    w = Word(tuple(letters), r)
    c = composition_of(w)
    assert c.weight == len(w)
    assert all(c.counts[x - 1] == letters.count(x) for x in range(1, r + 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=4))
def test_enumerate_class_is_the_full_multiset_orbit(counts):
    c = Composition(tuple(counts))
    from itertools import permutations

    base = [x for x in range(1, len(counts) + 1) for _ in range(counts[x - 1])]
    orbit = sorted(set(permutations(base)))
    assert [w.letters for w in enumerate_class(c)] == orbit
