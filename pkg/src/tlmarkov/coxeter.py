"""Coxeter groups of type E_n and their fully commutative elements.

Vertices are numbered 0..n-1 with 1, 2, ..., n-1 forming a path and 0 joined
to 3.  A fully commutative (FC) element is stored by its Cartier-Foata normal
form: the left-justified layering of its heap, each layer sorted ascending.

General (not necessarily FC) group elements are handled through the
contragredient action on the weight lattice: ``w`` is encoded by the
fundamental-weight coordinates of ``w(rho)``.  Coordinate ``i`` is negative
exactly when ``s_i`` is a left descent of ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


class WordError(ValueError):
    """Malformed word: bad token or generator index out of range."""


class NotReduced(ValueError):
    pass


class NotFullyCommutative(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterGraph:
    n: int
    edges: frozenset = field(repr=False)

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for s, t in self.edges:
            nb[s].add(t)
            nb[t].add(s)
        return tuple(frozenset(x) for x in nb)

    @cached_property
    def near(self) -> tuple[frozenset, ...]:
        # neighbours together with the vertex itself
        return tuple(self.adj[s] | {s} for s in range(self.n))

    def adjacent(self, s: int, t: int) -> bool:
        return t in self.adj[s]

    def m(self, s: int, t: int) -> int:
        if s == t:
            return 1
        return 3 if t in self.adj[s] else 2

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def build_graph(n: int) -> CoxeterGraph:
    if n < 6:
        raise ValueError(f"type E_n needs rank n >= 6, got {n}")
    edges = {frozenset((i, i + 1)) for i in range(1, n - 1)}
    edges.add(frozenset((0, 3)))
    return CoxeterGraph(n, frozenset(edges))


def parse_word(text: str | Sequence[int], n: int | None = None) -> Word:
    """Space (or comma) separated generator indices; the empty string is the identity."""
    if isinstance(text, str):
        tokens = text.replace(",", " ").split()
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError as exc:
            raise WordError(f"malformed word {text!r}") from exc
    else:
        word = tuple(int(t) for t in text)
    if n is not None:
        bad = [s for s in word if not 0 <= s < n]
        if bad:
            raise WordError(f"generator(s) {bad} out of range for rank {n}")
    return word


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(s) for s in word)


# -- the whole group, via the weight-lattice action ---------------------------

def rho_vector(g: CoxeterGraph) -> tuple[int, ...]:
    return (1,) * g.n


def act_left(g: CoxeterGraph, s: int, vec: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``s(lambda)`` given those of ``lambda``."""
    c = vec[s]
    out = list(vec)
    out[s] = -c
    for t in g.adj[s]:
        out[t] += c
    return tuple(out)


def word_vector(g: CoxeterGraph, word: Sequence[int]) -> tuple[int, ...]:
    vec = rho_vector(g)
    for s in reversed(word):
        vec = act_left(g, s, vec)
    return vec


def vector_left_descents(vec: Sequence[int]) -> frozenset:
    return frozenset(i for i, c in enumerate(vec) if c < 0)


def vector_length(g: CoxeterGraph, vec: Sequence[int]) -> int:
    length = 0
    while True:
        for i, c in enumerate(vec):
            if c < 0:
                vec = act_left(g, i, vec)
                length += 1
                break
        else:
            return length


def vector_reduced_word(g: CoxeterGraph, vec: Sequence[int]) -> Word:
    """A reduced word, built by peeling off the smallest left descent."""
    word = []
    while True:
        for i, c in enumerate(vec):
            if c < 0:
                vec = act_left(g, i, vec)
                word.append(i)
                break
        else:
            return tuple(word)


def is_reduced(g: CoxeterGraph, word: Sequence[int]) -> bool:
    vec = rho_vector(g)
    for s in reversed(word):
        if vec[s] < 0:
            return False
        vec = act_left(g, s, vec)
    return True


# -- fully commutative elements ----------------------------------------------

@dataclass(frozen=True)
class FCElement:
    """Cartier-Foata normal form of a fully commutative element."""

    layers: tuple[tuple[int, ...], ...]

    @cached_property
    def word(self) -> Word:
        return tuple(chain.from_iterable(self.layers))

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return self.length

    def is_identity(self) -> bool:
        return not self.layers

    def __str__(self) -> str:
        return format_word(self.word) if self.layers else "1"

    def __lt__(self, other: "FCElement") -> bool:
        return (self.length, self.layers) < (other.length, other.layers)


IDENTITY = FCElement(())


def cf_layers(g: CoxeterGraph, word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Left-justified layering; assumes ``word`` is a reduced FC word."""
    depth_of_label: dict[int, int] = {}
    layers: list[list[int]] = []
    for s in word:
        d = 0
        for t in g.near[s]:
            if t in depth_of_label:
                d = max(d, depth_of_label[t] + 1)
        depth_of_label[s] = d
        if d == len(layers):
            layers.append([])
        layers[d].append(s)
    return tuple(tuple(sorted(layer)) for layer in layers)


def fc_violation(g: CoxeterGraph, word: Sequence[int]) -> tuple[int, int] | None:
    """First pair of consecutive equal letters with fewer than two adjacent letters between.

    On a reduced word, no violation means the word is FC.
    """
    last: dict[int, int] = {}
    for j, s in enumerate(word):
        if s in last:
            i = last[s]
            between = sum(1 for t in word[i + 1:j] if t in g.adj[s])
            if between < 2:
                return (i, j)
        last[s] = j
    return None


def normalize(g: CoxeterGraph, word: Sequence[int] | str) -> FCElement:
    word = parse_word(word, g.n)
    if not is_reduced(g, word):
        raise NotReduced(f"word {format_word(word)!r} is not reduced")
    bad = fc_violation(g, word)
    if bad is not None:
        i, j = bad
        raise NotFullyCommutative(
            f"word {format_word(word)!r} is not fully commutative "
            f"(letters at positions {i} and {j} braid)"
        )
    return FCElement(cf_layers(g, word))


def fc_from_word(g: CoxeterGraph, word: Sequence[int]) -> FCElement:
    """Normal form of a word already known to be reduced and FC (no checks)."""
    return FCElement(cf_layers(g, word))


def left_descents(g: CoxeterGraph, x: FCElement) -> frozenset:
    return frozenset(x.layers[0]) if x.layers else frozenset()


def right_descents(g: CoxeterGraph, x: FCElement) -> frozenset:
    # heap-maximal letters: no later occurrence with an equal or adjacent label
    word = x.word
    out = set()
    seen: set[int] = set()
    for s in reversed(word):
        if not (g.near[s] & seen):
            out.add(s)
        seen.add(s)
    return frozenset(out)


def descents(g: CoxeterGraph, x: FCElement, side: str = "left") -> frozenset:
    if side == "left":
        return left_descents(g, x)
    if side == "right":
        return right_descents(g, x)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def inverse(g: CoxeterGraph, x: FCElement) -> FCElement:
    return FCElement(cf_layers(g, x.word[::-1]))


def right_multiply(g: CoxeterGraph, x: FCElement, s: int) -> FCElement | None:
    """``x s`` if it is a longer FC element, else None."""
    word = x.word
    if s in right_descents(g, x):
        return None
    if s in word:
        i = len(word) - 1 - word[::-1].index(s)
        if sum(1 for t in word[i + 1:] if t in g.adj[s]) < 2:
            return None
    # place s just above the last layer touching it
    top = -1
    for d, layer in enumerate(x.layers):
        if any(t in g.near[s] for t in layer):
            top = d
    layers = [list(layer) for layer in x.layers]
    if top + 1 == len(layers):
        layers.append([s])
    else:
        layers[top + 1].append(s)
    return FCElement(tuple(tuple(sorted(layer)) for layer in layers))


def left_multiply(g: CoxeterGraph, x: FCElement, s: int) -> FCElement | None:
    """``s x`` if it is a longer FC element, else None."""
    if s in left_descents(g, x):
        return None
    word = (s,) + x.word
    if s in x.word:
        j = word.index(s, 1)
        if sum(1 for t in word[1:j] if t in g.adj[s]) < 2:
            return None
    return FCElement(cf_layers(g, word))


def enumerate_fc(g: CoxeterGraph, max_len: int | None = None,
                 side: str = "right") -> Iterator[FCElement]:
    """Breadth-first enumeration of FC elements in non-decreasing length.

    ``side`` selects right or left multiplication for the BFS step.  With
    ``max_len=None`` the enumeration runs until no longer element exists,
    which terminates because W_c(E_n) is finite; ranks above 8 demand a bound.
    """
    if max_len is None and g.n > 8:
        raise ValueError("enumeration for n > 8 must be bounded by max_len")
    step = right_multiply if side == "right" else left_multiply
    stratum = [IDENTITY]
    length = 0
    while stratum:
        yield from stratum
        if max_len is not None and length >= max_len:
            return
        nxt: dict[FCElement, None] = {}
        for x in stratum:
            for s in g.vertices:
                y = step(g, x, s)
                if y is not None:
                    nxt[y] = None
        stratum = sorted(nxt)
        length += 1


def commutation_class(g: CoxeterGraph, word: Sequence[int]) -> set[Word]:
    """All words reachable from ``word`` by swapping adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and b not in g.adj[a]:
                u = w[:i] + (b, a) + w[i + 2:]
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
    return seen


def bruhat_leq(g: CoxeterGraph, x: FCElement | Sequence[int], w: Sequence[int] | FCElement) -> bool:
    """Bruhat order test ``x <= w`` with ``w`` given by a reduced word.

    Strips the first letter ``s`` of ``w`` at each step: if ``s`` is a left
    descent of ``x`` then ``x <= w`` iff ``sx <= sw``, otherwise iff ``x <= sw``.
    """
    xw = x.word if isinstance(x, FCElement) else tuple(x)
    ww = w.word if isinstance(w, FCElement) else tuple(w)
    vec = word_vector(g, xw)
    remaining = len(ww)
    xlen = vector_length(g, vec)
    for s in ww:
        if xlen > remaining:
            return False
        if vec[s] < 0:
            vec = act_left(g, s, vec)
            xlen -= 1
        remaining -= 1
    return xlen == 0


class Heap:
    """Labelled poset of the letter occurrences of a reduced FC word.

    ``below[p]`` is a bitmask of occurrences strictly below occurrence ``p``.
    """

    def __init__(self, g: CoxeterGraph, word: Sequence[int]):
        self.g = g
        self.labels = tuple(word)
        k = len(word)
        below = [0] * k
        for p in range(k):
            mask = 0
            for q in range(p):
                if self.labels[q] in g.near[self.labels[p]]:
                    mask |= (1 << q) | below[q]
            below[p] = mask
        self.below = below
        above = [0] * k
        for p in range(k):
            m = below[p]
            q = 0
            while m:
                if m & 1:
                    above[q] |= 1 << p
                m >>= 1
                q += 1
        self.above = above

    def __len__(self) -> int:
        return len(self.labels)

    def leq(self, p: int, q: int) -> bool:
        return p == q or bool(self.below[q] >> p & 1)

    def comparable(self, p: int, q: int) -> bool:
        return self.leq(p, q) or self.leq(q, p)

    def incomparable_mask(self, p: int) -> int:
        full = (1 << len(self.labels)) - 1
        return full & ~(self.below[p] | self.above[p] | (1 << p))

    def antichains(self, size: int | None = None) -> Iterator[tuple[int, ...]]:
        """All antichains (of a given size, if specified), as sorted position tuples."""
        k = len(self.labels)
        inc = [self.incomparable_mask(p) for p in range(k)]

        def rec(chosen: list[int], cand: int):
            if size is None or len(chosen) == size:
                yield tuple(chosen)
                if size is not None:
                    return
            m = cand
            while m:
                low = m & -m
                p = low.bit_length() - 1
                m ^= low
                chosen.append(p)
                yield from rec(chosen, cand & inc[p] & ~((low << 1) - 1))
                chosen.pop()

        yield from rec([], (1 << k) - 1)

    def width(self) -> int:
        k = len(self.labels)
        inc = [self.incomparable_mask(p) for p in range(k)]
        best = 0

        def rec(size: int, cand: int):
            nonlocal best
            if size > best:
                best = size
            if size + bin(cand).count("1") <= best:
                return
            m = cand
            while m:
                low = m & -m
                p = low.bit_length() - 1
                m ^= low
                rec(size + 1, cand & inc[p] & ~((low << 1) - 1))
                if size + bin(m).count("1") <= best:
                    return

        rec(0, (1 << k) - 1)
        return best

    def downset(self, positions: Iterable[int]) -> int:
        mask = 0
        for p in positions:
            mask |= self.below[p] | (1 << p)
        return mask

    def minimal(self) -> list[int]:
        return [p for p in range(len(self.labels)) if not self.below[p]]

    def maximal(self) -> list[int]:
        return [p for p in range(len(self.labels)) if not self.above[p]]
