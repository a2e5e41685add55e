"""Pair product, one-valued extraction, covering, competition removal."""

import itertools
import random

import pytest

from corpus import as_min_plus_copy, random_automaton, random_deterministic_automaton
from twa import (
    MAX_PLUS,
    MAX_PLUS_PAIR,
    BooleanAutomaton,
    CapExceededError,
    NotEqualError,
    TropicalMatrix,
    WeightedAutomaton,
    covering,
    determinize,
    disambiguate,
    extract_one_valued,
    nfa_equivalence,
    pair_product,
    remove_competitions,
    unambiguous_from_pair,
    zoo,
)
from twa.oracle import (
    equal_upto,
    max_ambiguity_upto,
    one_valued_upto,
    words_upto,
)


@pytest.fixture(scope="module")
def pair():
    return zoo.sample_equivalent_pair()


def automata_isomorphic(a, b):
    """Exact isomorphism search; fine for a handful of states."""
    if (a.n, a.alphabet, a.semiring.tag) != (b.n, b.alphabet, b.semiring.tag):
        return False
    for perm in itertools.permutations(range(a.n)):
        if any(a.alpha[i] != b.alpha[perm[i]] for i in range(a.n)):
            continue
        if any(a.beta[i] != b.beta[perm[i]] for i in range(a.n)):
            continue
        if all(
            a.mu[ch].entry(i, j) == b.mu[ch].entry(perm[i], perm[j])
            for ch in a.alphabet
            for i in range(a.n)
            for j in range(a.n)
        ):
            return True
    return False


# The 4-state product of the demo pair and the 1-valued automaton it filters
# down to, both written out by hand from the construction rules.
def expected_pair_product():
    return WeightedAutomaton.from_arcs(
        MAX_PLUS_PAIR,
        "ab",
        4,  # 0=(A,A') 1=(A,B') 2=(B,A') 3=(B,B')
        initial=[(0, (0, 0))],
        final=[(0, (0, 0)), (2, (1, 1))],
        arcs=[
            (0, "a", 2, (1, -1)),
            (0, "a", 3, (1, 0)),
            (0, "b", 0, (1, 0)),
            (1, "a", 2, (1, 0)),
            (1, "b", 1, (1, -2)),
            (2, "a", 0, (1, -1)),
            (2, "a", 1, (1, 0)),
            (2, "a", 2, (0, -2)),
            (2, "a", 3, (0, -1)),
            (2, "b", 0, (2, 1)),
            (2, "b", 2, (1, 0)),
            (3, "a", 0, (1, 0)),
            (3, "a", 2, (0, -1)),
            (3, "b", 1, (2, -1)),
            (3, "b", 3, (1, -2)),
        ],
    )


def expected_one_valued():
    return WeightedAutomaton.from_arcs(
        MAX_PLUS,
        "ab",
        4,
        initial=[(0, 0)],
        final=[(0, 0), (2, 1)],
        arcs=[
            (0, "a", 2, 1),
            (0, "a", 3, 1),
            (0, "b", 0, 1),
            (1, "a", 2, 1),
            (2, "a", 1, 1),
            (2, "b", 0, 2),
            (2, "b", 2, 1),
            (3, "a", 0, 1),
            (3, "a", 2, 0),
            (3, "b", 1, 2),
        ],
    )


def test_pair_product_matches_hand_transcription(pair):
    amax, bmin = pair
    product = pair_product(amax, bmin.negate())
    assert product.n == 4
    expected = expected_pair_product()
    # state (p,q) lands at index p*2+q, so this is equality, not just isomorphism
    assert product == expected


def test_pair_product_with_trivial_second_factor(pair):
    amax, _ = pair
    one_state = WeightedAutomaton.from_arcs(
        MAX_PLUS, "ab", 1, initial=[(0, 0)], final=[(0, 0)],
        arcs=[(0, "a", 0, 0), (0, "b", 0, 0)],
    )
    product = pair_product(amax, one_state)
    assert product.n == amax.n
    for word in words_upto(amax.alphabet, 5):
        value = amax.eval(word)
        expected = None if value is None else (value, value)
        assert product.eval(word) == expected


def test_pair_product_projections_on_randoms():
    rng = random.Random(5005)
    for _ in range(25):
        a = random_automaton(rng, max_states=3)
        b = random_automaton(rng, max_states=3)
        product = pair_product(a, b)
        for word in words_upto(a.alphabet, 4):
            got = product.eval(word)
            va, vb = a.eval(word), b.eval(word)
            if va is None or vb is None:
                assert got is None
            else:
                assert got == (va, va + vb)


def test_pair_product_second_coordinate_is_the_hadamard(pair):
    from twa import hadamard

    amax, bmin = pair
    product = pair_product(amax, bmin.negate())
    had = hadamard(amax, bmin.negate())
    for word in words_upto(amax.alphabet, 6):
        got = product.eval(word)
        assert (None if got is None else got[1]) == had.eval(word)


def test_second_coordinate_renormalization_matches_hand_figures(pair):
    # the renormalized second coordinates of the product: potentials are
    # u = (0, 1, 1, 0), so arc 2->0 on a moves -1 -> -2 and 3->2 on a -1 -> 0
    from twa import fatou_normalize

    product = expected_pair_product()
    second = WeightedAutomaton(
        MAX_PLUS,
        product.alphabet,
        product.n,
        [None if w is None else w[1] for w in product.alpha],
        [None if w is None else w[1] for w in product.beta],
        {
            ch: TropicalMatrix(
                MAX_PLUS,
                product.n,
                [{j: w[1] for j, w in row.items()} for row in mat.rows],
            )
            for ch, mat in product.mu.items()
        },
    )
    flat = fatou_normalize(second)
    assert flat.mu["a"].entry(2, 0) == -2
    assert flat.mu["a"].entry(3, 2) == 0
    assert flat.beta == [0, None, 0, None]
    assert flat.mu["b"].to_rows() == [
        [0, None, None, None],
        [None, -2, None, None],
        [0, None, 0, None],
        [None, 0, None, -2],
    ]


def test_extract_one_valued_demo(pair):
    amax, bmin = pair
    result = extract_one_valued(amax, bmin)
    assert result.n == 4
    assert result.trim() == result
    assert automata_isomorphic(result, expected_one_valued())
    assert one_valued_upto(result, 8).holds
    assert equal_upto(result, amax, 8).holds


def test_extract_one_valued_trivial_pair():
    path = WeightedAutomaton.from_arcs(
        MAX_PLUS, "ab", 2, initial=[(0, 0)], final=[(1, 2)], arcs=[(0, "a", 1, 1)]
    )
    result = extract_one_valued(path, as_min_plus_copy(path))
    assert equal_upto(result, path, 5).holds
    assert result.n <= path.n * path.n


def test_extract_one_valued_checks_equality(pair):
    amax, bmin = pair
    worse = as_min_plus_copy(amax)  # not equal to amax as series (two-valued words)
    with pytest.raises(NotEqualError) as err:
        extract_one_valued(amax, worse)
    assert amax.eval(err.value.witness) != worse.eval(err.value.witness)


def test_extract_one_valued_dimension_bound_and_values():
    rng = random.Random(6006)
    for _ in range(20):
        det = random_deterministic_automaton(rng, max_states=3)
        result = extract_one_valued(det, as_min_plus_copy(det), check=False)
        assert result.n <= det.n * det.n
        assert equal_upto(result, det, 5).holds
        assert one_valued_upto(result, 5).holds


# -- determinize ---------------------------------------------------------------


def _nfa(alphabet, n, initial, final, arcs):
    delta = {}
    for i, ch, j in arcs:
        delta.setdefault((i, ch), set()).add(j)
    return BooleanAutomaton(alphabet, n, initial, final, delta)


def test_determinize_twostate_example():
    nfa = _nfa("a", 2, {0}, {1}, [(0, "a", 0), (0, "a", 1)])
    dfa = determinize(nfa)
    assert dfa.n == 2  # subsets {0} and {0,1}
    assert nfa_equivalence(nfa, dfa).holds


def test_determinize_is_deterministic_and_equivalent():
    rng = random.Random(7007)
    for _ in range(25):
        aut = random_automaton(rng, max_states=4)
        nfa = aut.support()
        dfa = determinize(nfa)
        assert nfa_equivalence(nfa, dfa).holds
        for (state, ch), targets in dfa.delta.items():
            assert len(targets) == 1
        # a deterministic accessible input comes back with the same shape
        already = determinize(dfa)
        assert already.n == dfa.n
        assert nfa_equivalence(already, dfa).holds


def test_determinize_cap():
    nfa = _nfa("a", 2, {0}, {1}, [(0, "a", 0), (0, "a", 1)])  # needs two subsets
    with pytest.raises(CapExceededError):
        determinize(nfa, cap=1)


# -- covering and competitions ---------------------------------------------------


def test_covering_of_deterministic_automaton_is_isomorphic():
    rng = random.Random(9009)
    for _ in range(15):
        det = random_deterministic_automaton(rng, max_states=3).trim()
        if det.n == 0:
            continue
        cover = covering(det)
        assert automata_isomorphic(cover.automaton.trim(), det)


def test_covering_preserves_series(pair):
    amax, bmin = pair
    one_valued = extract_one_valued(amax, bmin)
    cover = covering(one_valued)
    assert equal_upto(cover.automaton, one_valued, 10).holds
    rng = random.Random(1010)
    for _ in range(15):
        aut = random_automaton(rng, max_states=3)
        cover = covering(aut)
        assert equal_upto(cover.automaton, aut, 5).holds


def test_covering_provenance_tracks_subsets(pair):
    amax, bmin = pair
    cover = covering(extract_one_valued(amax, bmin))
    aut = cover.automaton
    for i, (p, s) in enumerate(cover.provenance):
        assert p in cover.subsets[s]
    assert aut.state_labels is not None


def test_remove_competitions_no_op_without_competitions():
    rng = random.Random(1111)
    for _ in range(10):
        det = random_deterministic_automaton(rng, max_states=3).trim()
        if det.n == 0:
            continue
        cover = covering(det)
        pruned = remove_competitions(cover)
        assert automata_isomorphic(pruned, cover.automaton.trim())


def test_remove_competitions_parallel_paths_toy():
    toy = WeightedAutomaton.from_arcs(
        MAX_PLUS, "a", 3, initial=[(0, 0)],
        final=[(1, 0), (2, 0)],
        arcs=[(0, "a", 1, 1), (0, "a", 2, 1)],  # two equal-weight paths
    )
    assert one_valued_upto(toy, 3).holds
    result = remove_competitions(covering(toy))
    assert max_ambiguity_upto(result, 3)[0] <= 1
    assert equal_upto(result, toy, 3).holds


def test_disambiguate_demo(pair):
    amax, bmin = pair
    one_valued = extract_one_valued(amax, bmin)
    result = disambiguate(one_valued)
    assert max_ambiguity_upto(result, 10)[0] <= 1
    assert equal_upto(result, one_valued, 10).holds


def test_disambiguate_keeps_unambiguous_inputs_equivalent():
    rng = random.Random(1212)
    for _ in range(15):
        det = random_deterministic_automaton(rng, max_states=3)
        result = disambiguate(det)
        assert max_ambiguity_upto(result, 6)[0] <= 1
        assert equal_upto(result, det, 6).holds


def test_full_pipeline_demo(pair):
    amax, bmin = pair
    result = unambiguous_from_pair(amax, bmin)
    assert max_ambiguity_upto(result, 10)[0] <= 1
    assert equal_upto(result, amax, 10).holds
    assert equal_upto(result, bmin, 10).holds


def test_full_pipeline_single_path():
    path = WeightedAutomaton.from_arcs(
        MAX_PLUS, "ab", 2, initial=[(0, 0)], final=[(1, 2)], arcs=[(0, "a", 1, 1)]
    )
    result = unambiguous_from_pair(path, as_min_plus_copy(path))
    assert result.n == 2
    assert equal_upto(result, path, 4).holds


def test_full_pipeline_random_onevalued_corpus():
    rng = random.Random(1313)
    for _ in range(15):
        det = random_deterministic_automaton(rng, max_states=3)
        result = unambiguous_from_pair(det, as_min_plus_copy(det))
        assert max_ambiguity_upto(result, 8)[0] <= 1
        assert equal_upto(result, det, 8).holds


def test_full_pipeline_rejects_unequal_pairs(pair):
    amax, _ = pair
    with pytest.raises(NotEqualError):
        unambiguous_from_pair(amax, as_min_plus_copy(amax))


def _duplicate_union(aut):
    """Disjoint union of an automaton with itself: 1-valued but ambiguous."""
    shift = aut.n
    return WeightedAutomaton.from_arcs(
        aut.semiring,
        aut.alphabet,
        2 * aut.n,
        initial=[(i + d, w) for d in (0, shift) for i, w in enumerate(aut.alpha) if w is not None],
        final=[(i + d, w) for d in (0, shift) for i, w in enumerate(aut.beta) if w is not None],
        arcs=[(s + d, ch, t + d, w) for d in (0, shift) for s, ch, t, w in aut.arcs()],
    )


def test_disambiguate_collapses_duplicated_automata():
    rng = random.Random(1414)
    for _ in range(12):
        det = random_deterministic_automaton(rng, max_states=3).trim()
        if det.n == 0:
            continue
        doubled = _duplicate_union(det)
        assert one_valued_upto(doubled, 6).holds
        assert max_ambiguity_upto(doubled, 6)[0] >= 2  # genuinely ambiguous
        result = disambiguate(doubled)
        assert max_ambiguity_upto(result, 8)[0] <= 1
        assert equal_upto(result, det, 8).holds


def test_full_pipeline_with_ambiguous_max_side():
    rng = random.Random(1515)
    for _ in range(10):
        det = random_deterministic_automaton(rng, max_states=3).trim()
        if det.n == 0:
            continue
        doubled = _duplicate_union(det)
        result = unambiguous_from_pair(doubled, as_min_plus_copy(det))
        assert max_ambiguity_upto(result, 8)[0] <= 1
        assert equal_upto(result, det, 8).holds
