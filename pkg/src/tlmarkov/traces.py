"""Traces on TL(E_n) evaluated from their values on the commuting products i(A).

Any trace ``t`` satisfies ``t(b_w) = delta**k * t(i(A))`` for a pair
``(k, A)`` that depends only on ``w``; :func:`trace_reduce` finds it by
repeatedly rotating ``b_x i(A) b_y`` into ``b_{i(A) y} b_{x i(A)}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .algebra import (
    PClassPartition, ScaledMonomial, a_value, i_of, max_antichain_decomposition,
    p_classes, product,
)
from .coxeter import CoxeterGraph, FCElement, build_graph, fc_from_word, inverse
from .laurent import LaurentPolynomial, delta_power_series


def divide_by_delta(c: LaurentPolynomial) -> LaurentPolynomial | None:
    """Exact quotient ``c / delta`` in Z[v, v^-1], or None if delta does not divide ``c``."""
    if c.is_zero():
        return LaurentPolynomial()
    low = c.low_degree()
    quotient: dict[int, int] = {}
    rem = c.terms
    while rem:
        d = max(rem)
        if d - 2 < low:
            return None
        a = rem[d]
        quotient[d - 1] = a
        rem[d] -= a
        rem[d - 2] = rem.get(d - 2, 0) - a
        rem = {k: v for k, v in rem.items() if v}
    return LaurentPolynomial(quotient)


class DeltaCombination:
    """Finite sum ``sum_e c_e * delta**e`` with Laurent-polynomial coefficients.

    Negative powers of delta are kept symbolic; nothing is expanded.
    """

    def __init__(self, terms: Mapping[int, LaurentPolynomial | int] | None = None):
        # canonical form: no coefficient is divisible by delta
        pending = list((terms or {}).items())
        clean: dict[int, LaurentPolynomial] = {}
        while pending:
            e, c = pending.pop()
            c = c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c)
            e = int(e)
            while not c.is_zero():
                q = divide_by_delta(c)
                if q is None:
                    break
                c, e = q, e + 1
            if c.is_zero():
                continue
            if e in clean:
                pending.append((e, clean.pop(e) + c))
            else:
                clean[e] = c
        self.terms = clean

    def __add__(self, other: "DeltaCombination") -> "DeltaCombination":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, LaurentPolynomial()) + c
        return DeltaCombination(out)

    def scale(self, coeff: LaurentPolynomial | int, shift: int = 0) -> "DeltaCombination":
        return DeltaCombination({e + shift: c * coeff for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaCombination):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"DeltaCombination({{{inner}}})"

    def to_json(self) -> dict:
        return {str(e): c.to_json() for e, c in sorted(self.terms.items())}


@dataclass(frozen=True)
class TraceValue:
    """``delta**exponent``."""

    exponent: int

    def expanded(self, precision: int = 8) -> dict[int, int]:
        return delta_power_series(self.exponent, precision)


@dataclass(frozen=True)
class TraceBase:
    """Values of a trace on each class of commuting sets, as ``coeff * delta**exp``."""

    partition: PClassPartition
    values: tuple[tuple[int, LaurentPolynomial], ...] = field(repr=False)

    def value_for(self, A: Iterable[int]) -> tuple[int, LaurentPolynomial]:
        return self.values[self.partition.class_index(A)]


def tr_base(g: CoxeterGraph) -> TraceBase:
    part = p_classes(g)
    vals = tuple((-len(rep), LaurentPolynomial.constant(1)) for rep in part.representatives)
    return TraceBase(part, vals)


def indicator_base(g: CoxeterGraph, class_index: int) -> TraceBase:
    part = p_classes(g)
    vals = tuple((0, LaurentPolynomial.constant(int(i == class_index))) for i in range(len(part)))
    return TraceBase(part, vals)


def custom_base(g: CoxeterGraph, values: Mapping[int, LaurentPolynomial | int]) -> TraceBase:
    part = p_classes(g)
    vals = []
    for i in range(len(part)):
        c = values.get(i, 0)
        vals.append((0, c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c)))
    return TraceBase(part, tuple(vals))


def trace_reduction_chain(g: CoxeterGraph, w: FCElement) -> list[tuple[FCElement, int]]:
    """The sequence of (element, a-value) visited by the rotation recursion."""
    chain = []
    cur = w
    while True:
        chain.append((cur, a_value(g, cur)))
        x, A, y = max_antichain_decomposition(g, cur)
        iA = tuple(sorted(A))
        left = fc_from_word(g, iA + y.word)
        right = fc_from_word(g, x.word + iA)
        p = product(g, left, right)
        if a_value(g, p.elt) == len(A):
            return chain
        cur = p.elt


@lru_cache(maxsize=None)
def trace_reduce(g: CoxeterGraph, w: FCElement) -> tuple[int, frozenset]:
    """``(k, A)`` with ``t(b_w) = delta**k * t(i(A))`` for every trace ``t``."""
    acc = 0
    cur = w
    while True:
        x, A, y = max_antichain_decomposition(g, cur)
        if x.is_identity() and y.is_identity():
            return acc, A
        iA = tuple(sorted(A))
        # t(b_x i(A) b_y) = delta^-#A t(b_{i(A) y} b_{x i(A)})
        left = fc_from_word(g, iA + y.word)
        right = fc_from_word(g, x.word + iA)
        p = product(g, left, right)
        acc += p.exp - len(A)
        az = a_value(g, p.elt)
        if az == len(A):
            if p.elt != i_of(g, A):
                raise AssertionError(
                    f"rotation of {cur} reached {p.elt} with a = #A but not equal to i(A)")
            return acc, A
        if az < len(A):
            raise AssertionError(f"a-value decreased from {len(A)} to {az} at {p.elt}")
        cur = p.elt


def eval_trace(g: CoxeterGraph, base: TraceBase, w: FCElement | ScaledMonomial) -> DeltaCombination:
    shift = 0
    if isinstance(w, ScaledMonomial):
        shift, w = w.exp, w.elt
    k, A = trace_reduce(g, w)
    e, c = base.value_for(A)
    return DeltaCombination({k + e + shift: c})


@lru_cache(maxsize=None)
def tr_exponent(g: CoxeterGraph, w: FCElement) -> int:
    """Exponent ``e`` with ``tr(b_w) = delta**e`` for the normalised trace."""
    k, A = trace_reduce(g, w)
    return k - len(A)


def tr(g: CoxeterGraph, w: FCElement | ScaledMonomial) -> TraceValue:
    if isinstance(w, ScaledMonomial):
        return TraceValue(w.exp + tr_exponent(g, w.elt))
    return TraceValue(tr_exponent(g, w))


def coeff_v_minus1(e: int) -> int:
    """Coefficient of v^-1 in delta**e expanded in descending powers of v (``e <= 0``)."""
    if e > 0:
        raise ValueError(f"delta exponent {e} > 0 cannot arise from a trace of a basis product")
    return 1 if e == -1 else 0


def gram_exponent(g: CoxeterGraph, x: FCElement, y: FCElement) -> int:
    """Exponent of ``tr(b_x b_{y^-1})``."""
    p = product(g, x, inverse(g, y))
    return p.exp + tr_exponent(g, p.elt)


def mu_tilde(g: CoxeterGraph, x: FCElement, y: FCElement) -> int:
    return coeff_v_minus1(gram_exponent(g, x, y))


def trace_linear(g: CoxeterGraph, base: TraceBase,
                 combo: Iterable[tuple[LaurentPolynomial | int, FCElement]]) -> DeltaCombination:
    total = DeltaCombination()
    for coeff, w in combo:
        total = total + eval_trace(g, base, w).scale(coeff)
    return total


def markov_step(g: CoxeterGraph, h: FCElement | ScaledMonomial) -> tuple[int, int]:
    """Both sides of ``tr_{n+1}(h b_n) = delta^-1 tr_n(h)``, as delta exponents.

    ``h`` lives in TL(E_n) and is read in TL(E_{n+1}) through the same word.
    """
    big = build_graph(g.n + 1)
    shift = h.exp if isinstance(h, ScaledMonomial) else 0
    elt = h.elt if isinstance(h, ScaledMonomial) else h
    lifted = fc_from_word(big, elt.word)
    p = product(big, lifted, fc_from_word(big, (g.n,)))
    lhs = shift + p.exp + tr_exponent(big, p.elt)
    rhs = shift - 1 + tr_exponent(g, elt)
    return lhs, rhs
