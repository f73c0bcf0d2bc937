import random

import pytest

from basilica.element import (
    compose,
    equal,
    generator,
    identity,
    image_of_gap,
    inverse,
    reduce,
)
from basilica.errors import ParseError
from basilica.lamination import GapId, gap_depth
from basilica.words import (
    abelianize,
    decompose,
    eval_word,
    format_word,
    free_reduce,
    invert_word,
    is_in_commutator_subgroup,
    parse_word,
    random_element,
    random_word,
    transport_gap_to_center,
)

from test_lamination import all_arcs


def test_parse_and_format():
    w = parse_word("a b' d")
    assert w == ["a", "b'", "d"]
    assert format_word(w) == "a b' d"
    with pytest.raises(ParseError):
        parse_word("a x")
    with pytest.raises(ParseError):
        parse_word("a''")


def test_leftmost_letter_applies_last():
    w = eval_word(["a", "d"])
    assert equal(w, compose(generator("alpha"), generator("delta")))


def test_free_reduce_and_invert():
    assert free_reduce(["a", "a'", "b"]) == ["b"]
    assert free_reduce(["a", "b", "b'", "a'"]) == []
    assert invert_word(["a", "b'"]) == ["b", "a'"]
    rng = random.Random(51)
    for _ in range(20):
        w = random_word(rng.randrange(1000), rng.randrange(8))
        assert equal(eval_word(free_reduce(w)), eval_word(w))
        assert equal(eval_word(invert_word(w)), inverse(eval_word(w)))


def test_random_element_is_deterministic():
    assert str(random_element(42, 8)) == str(random_element(42, 8))
    assert equal(random_element(7, 0), identity())


def test_transport_reaches_center_for_shallow_gaps():
    # every gap of depth <= 4 that arcs up to level 7 can bound
    count = 0
    for arc in all_arcs(7):
        gap = GapId.behind(arc)
        if gap_depth(gap) > 4:
            continue
        word = transport_gap_to_center(gap)
        assert image_of_gap(eval_word(word), gap) == GapId.central()
        count += 1
    assert transport_gap_to_center(GapId.central()) == []
    assert count >= 30


def test_decompose_multiplies_back():
    rng = random.Random(52)
    for _ in range(25):
        e = random_element(rng.randrange(10 ** 6), rng.randrange(7))
        word = decompose(e)
        assert equal(eval_word(word), e)


def test_decompose_of_identity_is_empty():
    assert decompose(identity()) == []
    assert decompose(compose(generator("delta"), generator("delta"))) == []


def test_abelianization_values():
    assert abelianize(generator("alpha")) == 1
    assert abelianize(generator("beta")) == 0
    assert abelianize(generator("gamma")) == 0
    assert abelianize(generator("delta")) == 0


def test_abelianization_is_a_homomorphism():
    rng = random.Random(53)
    for _ in range(30):
        f = random_element(rng.randrange(10 ** 6), rng.randrange(6))
        g = random_element(rng.randrange(10 ** 6), rng.randrange(6))
        assert abelianize(compose(f, g)) == (abelianize(f) + abelianize(g)) % 2


def test_commutators_die_in_the_abelianization():
    rng = random.Random(54)
    for _ in range(15):
        f = random_element(rng.randrange(10 ** 6), rng.randrange(1, 5))
        g = random_element(rng.randrange(10 ** 6), rng.randrange(1, 5))
        comm = compose(
            compose(inverse(f), inverse(g)), compose(f, g)
        )
        assert is_in_commutator_subgroup(comm)


def test_alpha_parity_of_decompositions():
    rng = random.Random(55)
    for _ in range(15):
        e = random_element(rng.randrange(10 ** 6), rng.randrange(6))
        word = decompose(e)
        parity = sum(1 for letter in word if letter[0] == "a") % 2
        assert parity == abelianize(e)
