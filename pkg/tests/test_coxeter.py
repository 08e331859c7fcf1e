from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tlmarkov.coxeter import (
    IDENTITY, Heap, NotFullyCommutative, NotReduced, WordError, act_left,
    bruhat_leq, build_graph, commutation_class, enumerate_fc, fc_from_word,
    format_word, inverse, is_reduced, left_descents, normalize, parse_word,
    right_descents, rho_vector, vector_length, vector_reduced_word, word_vector,
)
from tlmarkov.suites import FC_COUNTS, fc_elements


def brute_is_fc(g, word):
    if not is_reduced(g, word):
        return False
    for u in commutation_class(g, word):
        for i in range(len(u) - 2):
            if u[i] == u[i + 2] and u[i + 1] in g.adj[u[i]]:
                return False
    return True


def brute_bruhat(g, x, w):
    target = word_vector(g, x.word)
    ww = w.word
    for r in range(len(ww) + 1):
        for idx in combinations(range(len(ww)), r):
            sub = [ww[i] for i in idx]
            if len(sub) == x.length and word_vector(g, sub) == target:
                return True
    return False


def test_graph_shape():
    g = build_graph(6)
    assert g.sorted_edges() == [(0, 3), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert g.m(0, 3) == 3 and g.m(0, 1) == 2 and g.m(2, 2) == 1
    assert build_graph(8).adj[7] == frozenset({6})
    with pytest.raises(ValueError):
        build_graph(5)


def test_parse_word():
    assert parse_word("1 2  4") == (1, 2, 4)
    assert parse_word("") == ()
    assert format_word((3, 0)) == "3 0"
    with pytest.raises(WordError):
        parse_word("1 x")
    with pytest.raises(WordError):
        parse_word("6", 6)


def test_normalize_errors(e6):
    with pytest.raises(NotReduced):
        normalize(e6, "1 1")
    with pytest.raises(NotFullyCommutative):
        normalize(e6, "0 3 0")
    with pytest.raises(NotFullyCommutative):
        normalize(e6, "2 3 2")
    assert normalize(e6, "") == IDENTITY


def test_normal_form_is_commutation_invariant(e6):
    a = normalize(e6, "1 4 2 5")
    b = normalize(e6, "4 1 5 2")
    assert a == b
    assert a.layers == ((1, 4), (2, 5))


@pytest.mark.parametrize("n", sorted(FC_COUNTS))
def test_fc_counts(n):
    g = build_graph(n)
    right = set(enumerate_fc(g, side="right"))
    assert len(right) == FC_COUNTS[n]
    if n < 8:
        assert right == set(enumerate_fc(g, side="left"))


def test_longest_fc_lengths():
    assert max(w.length for w in fc_elements(6)) == 16
    assert max(w.length for w in fc_elements(7)) == 27


def test_unbounded_enumeration_refused():
    with pytest.raises(ValueError):
        next(enumerate_fc(build_graph(9)))
    # 28 commuting pairs plus both orders along each of the 8 edges
    assert len(list(enumerate_fc(build_graph(9), max_len=2))) == 1 + 9 + 28 + 16


words = st.lists(st.integers(0, 5), max_size=7).map(tuple)


@given(words)
def test_fc_criterion_matches_commutation_closure(word):
    g = build_graph(6)
    try:
        normalize(g, word)
        ok = True
    except (NotReduced, NotFullyCommutative):
        ok = False
    assert ok == brute_is_fc(g, word)


@given(words)
def test_reducedness_via_length(word):
    g = build_graph(6)
    vec = word_vector(g, word)
    assert is_reduced(g, word) == (vector_length(g, vec) == len(word))
    red = vector_reduced_word(g, vec)
    assert word_vector(g, red) == vec and is_reduced(g, red)


def test_all_fc_are_reduced_and_fc(e6, e6_elements):
    for w in e6_elements:
        assert normalize(e6, w.word) == w


def test_every_word_in_class_gives_same_element(e6, e6_elements):
    for w in e6_elements[::37]:
        for u in commutation_class(e6, w.word):
            assert fc_from_word(e6, u) == w


def test_descents_and_inverse(e6, e6_elements):
    for w in e6_elements:
        vec = word_vector(e6, w.word)
        assert left_descents(e6, w) == frozenset(i for i, c in enumerate(vec) if c < 0)
        wi = inverse(e6, w)
        assert inverse(e6, wi) == w
        assert right_descents(e6, w) == left_descents(e6, wi)


@given(st.data())
def test_bruhat_matches_subword_search(data):
    g = build_graph(6)
    els = fc_elements(6, 7)
    x = data.draw(st.sampled_from(els))
    w = data.draw(st.sampled_from(els))
    assert bruhat_leq(g, x, w) == brute_bruhat(g, x, w)


def test_bruhat_basics(e6):
    w = normalize(e6, "1 2 3 0")
    assert bruhat_leq(e6, IDENTITY, w)
    assert bruhat_leq(e6, w, w)
    assert bruhat_leq(e6, normalize(e6, "1 3"), w)
    assert not bruhat_leq(e6, normalize(e6, "4"), w)


def test_act_left_is_involution(e6):
    v = rho_vector(e6)
    for s in range(6):
        assert act_left(e6, s, act_left(e6, s, v)) == v


def brute_width(g, word):
    heap = Heap(g, word)
    best = 0
    for r in range(1, len(word) + 1):
        for c in combinations(range(len(word)), r):
            if all(not heap.comparable(p, q) for p, q in combinations(c, 2)):
                best = r
    return best


def test_heap_width_matches_brute(e6, e6_elements):
    for w in e6_elements:
        if w.length <= 9:
            assert Heap(e6, w.word).width() == brute_width(e6, w.word)


def test_heap_order():
    g = build_graph(6)
    h = Heap(g, (1, 2, 4))
    assert h.leq(0, 1) and not h.comparable(0, 2)
    assert set(h.minimal()) == {0, 2}
    assert set(h.maximal()) == {1, 2}
    assert sorted(h.antichains(2)) == [(0, 2), (1, 2)]
