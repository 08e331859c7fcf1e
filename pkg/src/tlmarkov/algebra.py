"""Monomial-basis arithmetic in TL(E_n) and commuting-subset combinatorics.

A product of two monomial basis elements is always ``delta**k * b_z`` for a
single FC element ``z`` and ``k >= 0``, so only the pair ``(k, z)`` is ever
stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .coxeter import (
    IDENTITY, CoxeterGraph, FCElement, Heap, fc_from_word, left_descents,
    left_multiply,
)
from .laurent import DELTA, LaurentPolynomial


@dataclass(frozen=True)
class ScaledMonomial:
    """``delta**exp * b_elt``."""

    exp: int
    elt: FCElement

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("ScaledMonomial exponent must be non-negative")

    def coefficient(self) -> LaurentPolynomial:
        return DELTA ** self.exp

    def __str__(self) -> str:
        head = "" if self.exp == 0 else ("delta " if self.exp == 1 else f"delta^{self.exp} ")
        return f"{head}b[{self.elt}]"


def monomial(x: FCElement) -> ScaledMonomial:
    return ScaledMonomial(0, x)


@lru_cache(maxsize=None)
def _gen_times(g: CoxeterGraph, s: int, w: FCElement) -> tuple[int, FCElement]:
    if s in left_descents(g, w):
        return 1, w
    sw = left_multiply(g, w, s)
    if sw is not None:
        return 0, sw
    # s w is complex: the first s in w has exactly one adjacent letter t before
    # it, and everything below t commutes with s, so b_s b_w = b_x b_s b_t b_s b_y
    # collapses to b_x b_s b_y.
    word = w.word
    i = word.index(s)
    adj_before = [j for j in range(i) if word[j] in g.adj[s]]
    assert len(adj_before) == 1, (s, word)
    j = adj_before[0]
    heap = Heap(g, word)
    ideal = heap.below[j]
    assert all(word[p] not in g.near[s] for p in range(len(word)) if ideal >> p & 1)
    x = [word[p] for p in range(len(word)) if ideal >> p & 1]
    y = [word[p] for p in range(len(word)) if not (ideal >> p & 1) and p not in (i, j)]
    return _fold(g, x + [s] + y, IDENTITY)


def _fold(g: CoxeterGraph, word: Sequence[int], start: FCElement) -> tuple[int, FCElement]:
    k, z = 0, start
    for s in reversed(word):
        dk, z = _gen_times(g, s, z)
        k += dk
    return k, z


def mult_gen_left(g: CoxeterGraph, s: int, m: ScaledMonomial) -> ScaledMonomial:
    dk, z = _gen_times(g, s, m.elt)
    return ScaledMonomial(m.exp + dk, z)


def product_word(g: CoxeterGraph, word: Sequence[int], y: FCElement | ScaledMonomial) -> ScaledMonomial:
    """``b_{s1} ... b_{sk} * y`` for an arbitrary word of generators."""
    base = y if isinstance(y, ScaledMonomial) else monomial(y)
    k, z = _fold(g, word, base.elt)
    return ScaledMonomial(base.exp + k, z)


@lru_cache(maxsize=None)
def _product(g: CoxeterGraph, x: FCElement, y: FCElement) -> ScaledMonomial:
    return product_word(g, x.word, y)


def product(g: CoxeterGraph, x: FCElement | ScaledMonomial, y: FCElement | ScaledMonomial) -> ScaledMonomial:
    """The unique ``delta**k b_z`` equal to ``b_x b_y``."""
    ex = x.exp if isinstance(x, ScaledMonomial) else 0
    ey = y.exp if isinstance(y, ScaledMonomial) else 0
    xe = x.elt if isinstance(x, ScaledMonomial) else x
    ye = y.elt if isinstance(y, ScaledMonomial) else y
    p = _product(g, xe, ye)
    return ScaledMonomial(p.exp + ex + ey, p.elt)


@lru_cache(maxsize=None)
def a_value(g: CoxeterGraph, w: FCElement) -> int:
    """Largest number of commuting generators forming a factor of a reduced decomposition.

    Equal to the width of the heap of ``w``.
    """
    return Heap(g, w.word).width()


@lru_cache(maxsize=None)
def max_antichain_decomposition(g: CoxeterGraph, w: FCElement) -> tuple[FCElement, frozenset, FCElement]:
    """Split ``w = x * i(A) * y`` (reduced) with ``#A = a(w)``.

    Among maximum antichains of the heap the one with the largest down-set is
    used (the topmost one); remaining ties go to the smallest sorted labels.
    ``x`` is everything strictly below ``A`` and ``y`` is the rest.
    """
    if w.is_identity():
        return IDENTITY, frozenset(), IDENTITY
    word = w.word
    heap = Heap(g, word)
    width = heap.width()

    def key(chain):
        return (-bin(heap.downset(chain)).count("1"), tuple(sorted(word[p] for p in chain)))

    best = min(heap.antichains(width), key=key)
    down = heap.downset(best)
    chosen = set(best)
    x = [word[p] for p in range(len(word)) if down >> p & 1 and p not in chosen]
    y = [word[p] for p in range(len(word)) if not down >> p & 1]
    return fc_from_word(g, x), frozenset(word[p] for p in best), fc_from_word(g, y)


# -- commuting subsets ---------------------------------------------------------

def is_commuting_set(g: CoxeterGraph, A: Iterable[int]) -> bool:
    A = list(A)
    return all(0 <= a < g.n for a in A) and len(set(A)) == len(A) and not any(
        b in g.adj[a] for a, b in combinations(A, 2))


def i_of(g: CoxeterGraph, A: Iterable[int]) -> FCElement:
    A = frozenset(A)
    if not is_commuting_set(g, A):
        raise ValueError(f"{sorted(A)} is not a set of pairwise non-adjacent vertices")
    return FCElement((tuple(sorted(A)),)) if A else IDENTITY


def set_key(A: Iterable[int]) -> tuple:
    A = sorted(A)
    return (len(A), A)


@lru_cache(maxsize=None)
def commuting_sets(g: CoxeterGraph) -> tuple[frozenset, ...]:
    """Every independent vertex set of the Coxeter graph, the empty set included."""
    out = [frozenset()]

    def grow(current: frozenset, start: int):
        for v in range(start, g.n):
            if not (g.adj[v] & current):
                nxt = current | {v}
                out.append(nxt)
                grow(nxt, v + 1)

    grow(frozenset(), 0)
    return tuple(sorted(out, key=set_key))


def are_neighbours(g: CoxeterGraph, A: frozenset, B: frozenset) -> bool:
    if len(A) != len(B) or len(A & B) + 1 != len(A):
        return False
    (a,), (b,) = A - B, B - A
    return b in g.adj[a]


@dataclass(frozen=True)
class PClassPartition:
    classes: tuple[frozenset, ...]
    representatives: tuple[frozenset, ...]

    def class_index(self, A: Iterable[int]) -> int:
        A = frozenset(A)
        for i, cls in enumerate(self.classes):
            if A in cls:
                return i
        raise KeyError(sorted(A))

    def class_of(self, A: Iterable[int]) -> frozenset:
        return self.classes[self.class_index(A)]

    def __len__(self) -> int:
        return len(self.classes)


@lru_cache(maxsize=None)
def p_classes(g: CoxeterGraph) -> PClassPartition:
    """Classes of commuting sets under the closure of the neighbour relation."""
    sets = commuting_sets(g)
    parent = {A: A for A in sets}

    def find(A):
        while parent[A] != A:
            parent[A] = parent[parent[A]]
            A = parent[A]
        return A

    for A in sets:
        for a in A:
            for b in g.adj[a]:
                B = (A - {a}) | {b}
                if B in parent and are_neighbours(g, A, B):
                    ra, rb = find(A), find(B)
                    if ra != rb:
                        parent[ra] = rb
    groups: dict[frozenset, list[frozenset]] = {}
    for A in sets:
        groups.setdefault(find(A), []).append(A)
    primes = set(p_prime(g))
    classes = []
    reps = []
    for members in groups.values():
        cls = frozenset(members)
        in_prime = [A for A in members if A in primes]
        rep = in_prime[0] if in_prime else min(members, key=set_key)
        classes.append(cls)
        reps.append(rep)
    order = sorted(range(len(classes)), key=lambda i: set_key(reps[i]))
    return PClassPartition(tuple(classes[i] for i in order), tuple(reps[i] for i in order))


def p_prime(g: CoxeterGraph) -> tuple[frozenset, ...]:
    """The explicit family of class representatives (odd and even rank cases)."""
    n = g.n
    top = (n - 1) // 2 if n % 2 else (n - 2) // 2
    out = [frozenset((n - 1) - 2 * j for j in range(N + 1)) for N in range(top + 1)]
    if n % 2:
        out.append(frozenset(range(n - 1, 3, -2)) | {0})
    out.append(frozenset())
    return tuple(out)
