import pytest
from hypothesis import given, strategies as st

from tlmarkov.algebra import (
    ScaledMonomial, a_value, are_neighbours, commuting_sets, i_of,
    max_antichain_decomposition, mult_gen_left, p_classes, p_prime, product,
    product_word,
)
from tlmarkov.coxeter import (
    IDENTITY, build_graph, commutation_class, fc_from_word, normalize,
)
from tlmarkov.suites import brute_a_value, fc_elements


def naive_reduce(g, word):
    """Rewrite with s s -> delta s and s t s -> s anywhere in the commutation class."""
    k = 0
    word = tuple(word)
    while True:
        for u in commutation_class(g, word):
            hit = None
            for i in range(len(u) - 1):
                if u[i] == u[i + 1]:
                    hit = (u[:i + 1] + u[i + 2:], 1)
                    break
                if i + 2 < len(u) and u[i] == u[i + 2] and u[i + 1] in g.adj[u[i]]:
                    hit = (u[:i + 1] + u[i + 3:], 0)
                    break
            if hit:
                word, dk = hit
                k += dk
                break
        else:
            return k, normalize(g, word)


def test_generator_relations(e6):
    s1 = normalize(e6, "1")
    assert product(e6, s1, s1) == ScaledMonomial(1, s1)
    assert product_word(e6, (2, 3, 2), IDENTITY) == ScaledMonomial(0, normalize(e6, "2"))
    assert product_word(e6, (0, 3, 0), IDENTITY) == ScaledMonomial(0, normalize(e6, "0"))
    assert product(e6, normalize(e6, "1"), normalize(e6, "4")) == ScaledMonomial(0, normalize(e6, "1 4"))


def test_complex_product(e6):
    # b_3 * b_{2 4 3} -> b_3 b_2 b_4 b_3 stays FC; b_2 b_{3 2} collapses
    assert product(e6, normalize(e6, "2"), normalize(e6, "3 2")).elt == normalize(e6, "2")
    p = product(e6, normalize(e6, "3"), normalize(e6, "2 4 3"))
    assert p == ScaledMonomial(0, normalize(e6, "3 2 4 3"))


@given(st.data())
def test_product_matches_naive_rewriting(data):
    g = build_graph(6)
    els = fc_elements(6, 5)
    x = data.draw(st.sampled_from(els))
    y = data.draw(st.sampled_from(els))
    p = product(g, x, y)
    assert (p.exp, p.elt) == naive_reduce(g, x.word + y.word)


@given(st.data())
def test_associativity(data):
    g = build_graph(6)
    els = fc_elements(6)
    x, y, z = (data.draw(st.sampled_from(els)) for _ in range(3))
    assert product(g, product(g, x, y), z) == product(g, x, product(g, y, z))


def test_identity_is_neutral(e6, e6_elements):
    for w in e6_elements[::11]:
        assert product(e6, IDENTITY, w) == ScaledMonomial(0, w)
        assert product(e6, w, IDENTITY) == ScaledMonomial(0, w)


def test_mult_gen_left_shifts_exponent(e6):
    m = ScaledMonomial(2, normalize(e6, "1"))
    assert mult_gen_left(e6, 1, m) == ScaledMonomial(3, normalize(e6, "1"))


def test_scaled_monomial_guard():
    with pytest.raises(ValueError):
        ScaledMonomial(-1, IDENTITY)


def test_a_value_examples(e6):
    assert a_value(e6, IDENTITY) == 0
    assert a_value(e6, normalize(e6, "1 2 3")) == 1
    assert a_value(e6, normalize(e6, "1 3 5 0")) == 3
    assert a_value(e6, normalize(e6, "0 2 5")) == 3


def test_a_value_matches_brute_force(e6, e6_elements):
    for w in e6_elements:
        if w.length <= 6:
            assert a_value(e6, w) == brute_a_value(e6, w)


def test_antichain_decomposition_reassembles(e6, e6_elements):
    for w in e6_elements:
        x, A, y = max_antichain_decomposition(e6, w)
        assert len(A) == a_value(e6, w)
        whole = x.word + tuple(sorted(A)) + y.word
        assert fc_from_word(e6, whole) == w
        assert len(whole) == w.length


@pytest.mark.parametrize("n,count", [(6, 22), (7, 36), (8, 58)])
def test_commuting_set_counts(n, count):
    g = build_graph(n)
    sets = commuting_sets(g)
    assert len(sets) == count
    assert frozenset() in sets


def test_neighbours(e6):
    assert are_neighbours(e6, frozenset({1, 4}), frozenset({2, 4}))
    assert not are_neighbours(e6, frozenset({1, 4}), frozenset({1, 5}) | {0})
    assert not are_neighbours(e6, frozenset({1}), frozenset({5}))


@pytest.mark.parametrize("n,count", [(6, 4), (7, 6), (8, 5)])
def test_class_counts(n, count):
    g = build_graph(n)
    part = p_classes(g)
    assert len(part) == count
    primes = p_prime(g)
    assert len(primes) == count
    for cls in part.classes:
        assert sum(A in cls for A in primes) == 1
    assert set(part.representatives) == set(primes)


def test_rank7_class_of_four_set(e7):
    cls = p_classes(e7).class_of({0, 2, 4, 6})
    assert cls == {frozenset({0, 2, 4, 6}), frozenset({0, 1, 4, 6})}


def test_i_of_rejects_adjacent(e6):
    with pytest.raises(ValueError):
        i_of(e6, {2, 3})
    assert i_of(e6, {5, 1}) == normalize(e6, "1 5")
