"""Automaton operations: evaluation, trim, support, products, negation."""

import random
from fractions import Fraction

import pytest

from corpus import random_automaton
from twa import (
    MAX_PLUS,
    MIN_PLUS,
    AlphabetError,
    TagMismatchError,
    WeightedAutomaton,
    hadamard,
    negate_series,
    zoo,
)
from twa.oracle import eval_bruteforce, words_upto


@pytest.fixture(scope="module")
def pair():
    return zoo.sample_equivalent_pair()


def test_eval_on_empty_word(pair):
    amax, _ = pair
    assert amax.eval("") == 0


def test_eval_single_letter(pair):
    amax, _ = pair
    assert amax.eval("a") == 2


def test_eval_matches_path_enumeration_on_corpus(pair):
    rng = random.Random(11)
    for aut in pair:
        for word in words_upto(aut.alphabet, 8):
            assert aut.eval(word) == eval_bruteforce(aut, word)
    for aut in (random_automaton(rng, max_states=3) for _ in range(12)):
        for word in words_upto(aut.alphabet, 5):
            assert aut.eval(word) == eval_bruteforce(aut, word)


def test_eval_rejects_unknown_symbols(pair):
    amax, _ = pair
    with pytest.raises(AlphabetError):
        amax.eval("ax")


def test_eval_with_no_final_arrow_is_zero():
    aut = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 2, initial=[(0, 0)], arcs=[(0, "a", 1, 1)]
    )
    assert aut.eval("") is None
    assert aut.eval("a") is None


def test_trim_is_identity_on_trim_automata(pair):
    amax, _ = pair
    assert amax.trim() is amax
    trimmed = amax.trim().trim()
    assert trimmed == amax


def test_trim_drops_unreachable_state():
    aut = WeightedAutomaton.from_arcs(
        MAX_PLUS,
        "ab",
        3,
        initial=[(0, 0)],
        final=[(1, 2)],
        arcs=[(0, "a", 1, 1), (2, "b", 1, 5)],  # state 2 is unreachable
    )
    slim = aut.trim()
    assert slim.n == 2
    for word in words_upto(aut.alphabet, 6):
        assert slim.eval(word) == aut.eval(word)


def test_trim_of_automaton_without_finals_is_empty():
    aut = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 2, initial=[(0, 0)], arcs=[(0, "a", 1, 1), (1, "a", 0, 1)]
    )
    assert aut.trim().n == 0


def test_trim_preserves_series_on_randoms():
    rng = random.Random(21)
    for _ in range(40):
        aut = random_automaton(rng, max_states=4)
        slim = aut.trim()
        assert slim.trim() == slim  # idempotent
        for word in words_upto(aut.alphabet, 4):
            assert slim.eval(word) == aut.eval(word)


def test_support_accepts_exactly_nonzero_words():
    rng = random.Random(31)
    corpus = [random_automaton(rng, max_states=4) for _ in range(25)]
    corpus.append(zoo.sample_equivalent_pair()[0])
    for aut in corpus:
        nfa = aut.support()
        for word in words_upto(aut.alphabet, 5):
            assert nfa.accepts(word) == (aut.eval(word) is not None)


def test_support_of_demo_pair_is_all_words(pair):
    amax, _ = pair
    nfa = amax.support()
    for word in words_upto(amax.alphabet, 6):
        assert nfa.accepts(word)


def test_support_of_empty_automaton_accepts_nothing():
    empty = WeightedAutomaton.from_arcs(MAX_PLUS, "a", 0)
    nfa = empty.support()
    assert not nfa.accepts("")
    assert not nfa.accepts("a")


def test_hadamard_single_paths():
    a = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 2, initial=[(0, 0)], final=[(1, 0)], arcs=[(0, "a", 1, 1)]
    )
    b = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 2, initial=[(0, 0)], final=[(1, 0)], arcs=[(0, "a", 1, 2)]
    )
    h = hadamard(a, b)
    assert h.eval("a") == 3
    assert h.eval("") is None  # zero absorbs


def test_hadamard_pointwise_contract():
    rng = random.Random(41)
    for _ in range(25):
        a = random_automaton(rng, max_states=3)
        b = random_automaton(rng, max_states=3)
        h = hadamard(a, b)
        sr = a.semiring
        for word in words_upto(a.alphabet, 4):
            assert h.eval(word) == sr.times(a.eval(word), b.eval(word))


def test_hadamard_rejects_mismatches(pair):
    amax, bmin = pair
    with pytest.raises(TagMismatchError):
        hadamard(amax, bmin)
    other = WeightedAutomaton.from_arcs(MAX_PLUS, "ac", 1, initial=[(0, 0)], final=[(0, 0)])
    with pytest.raises(AlphabetError):
        hadamard(amax, other)


def test_negate_is_an_involution(pair):
    _, bmin = pair
    assert negate_series(negate_series(bmin)) == bmin


def test_negate_flips_values_pointwise(pair):
    _, bmin = pair
    flipped = bmin.negate()
    assert flipped.semiring.tag == "max-plus"
    assert flipped.eval("b") == -1  # bmin evaluates b to 1
    for word in words_upto(bmin.alphabet, 5):
        value = bmin.eval(word)
        assert flipped.eval(word) == (None if value is None else -value)


def test_negate_single_transition():
    aut = WeightedAutomaton.from_arcs(
        MIN_PLUS, "a", 2, initial=[(0, 0)], final=[(1, 0)], arcs=[(0, "a", 1, 3)]
    )
    flipped = aut.negate()
    assert flipped.mu["a"].entry(0, 1) == -3
    assert flipped.semiring.tag == "max-plus"


def test_letter_sum():
    aut = WeightedAutomaton.from_arcs(
        MAX_PLUS,
        "ab",
        2,
        initial=[(0, 0)],
        final=[(1, 0)],
        arcs=[(0, "a", 1, 1), (0, "b", 1, 2)],
    )
    m = aut.letter_sum()
    assert m.entry(0, 1) == 2
    single = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 2, initial=[(0, 0)], final=[(1, 0)], arcs=[(0, "a", 1, 5)]
    )
    assert single.letter_sum() == single.mu["a"]
    silent = WeightedAutomaton.from_arcs(MAX_PLUS, "ab", 2, initial=[(0, 0)], final=[(1, 0)])
    assert all(not row for row in silent.letter_sum().rows)


def test_letter_sum_rejects_pair_tag(pair):
    from twa import pair_product

    amax, bmin = pair
    p = pair_product(amax, bmin.negate())
    with pytest.raises(TagMismatchError):
        p.letter_sum()


def test_constructor_validates():
    with pytest.raises(AlphabetError):
        WeightedAutomaton.from_arcs(MAX_PLUS, "aa", 1)
    with pytest.raises(AlphabetError):
        WeightedAutomaton.from_arcs(MAX_PLUS, ["ab"], 1)
    with pytest.raises(TagMismatchError):
        WeightedAutomaton.from_arcs(MAX_PLUS, "a", 1, initial=[(0, 0.5)])
    with pytest.raises(TagMismatchError):
        WeightedAutomaton.from_arcs(MAX_PLUS, "a", 1, initial=[(0, (1, 2))])


def test_fraction_weights_evaluate_exactly():
    aut = WeightedAutomaton.from_arcs(
        MAX_PLUS,
        "a",
        1,
        initial=[(0, Fraction(1, 3))],
        final=[(0, Fraction(1, 6))],
        arcs=[(0, "a", 0, Fraction(1, 2))],
    )
    assert aut.eval("aa") == Fraction(3, 2)
