"""Brute-force Kazhdan-Lusztig polynomials on Bruhat intervals of W(E_n).

This is an oracle, independent of the Temperley-Lieb machinery: it works in
the whole Coxeter group, representing ``w`` by the weight vector ``w(rho)``,
and runs the classical recursion column by column.  Polynomials in ``q`` are
coefficient tuples, index = power of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coxeter import (
    CoxeterGraph, FCElement, act_left, is_reduced, rho_vector, vector_length,
    word_vector,
)

Vec = tuple[int, ...]
Poly = tuple[int, ...]


class OracleLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_length: int = 16
    max_interval: int = 200_000

    def __post_init__(self):
        if self.max_length <= 0 or self.max_interval <= 0:
            raise ValueError("oracle limits must be positive")


def _padd(a: Poly, b: Poly, shift: int = 0, scale: int = 1) -> Poly:
    """``a + scale * q**shift * b``."""
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] += scale * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_coeff(p: Poly, k: int) -> int:
    return p[k] if 0 <= k < len(p) else 0


class KLOracle:
    def __init__(self, g: CoxeterGraph, limits: OracleLimits | None = None):
        self.g = g
        self.limits = limits or OracleLimits()
        self.e: Vec = rho_vector(g)
        self._len: dict[Vec, int] = {self.e: 0}
        self._col: dict[Vec, dict[Vec, Poly]] = {self.e: {self.e: (1,)}}
        self._mu_list: dict[Vec, list[tuple[Vec, int]]] = {}

    def _vec(self, word: Sequence[int] | FCElement) -> Vec:
        word = word.word if isinstance(word, FCElement) else tuple(word)
        if not is_reduced(self.g, word):
            raise ValueError(f"word {word} is not reduced")
        vec = word_vector(self.g, word)
        self._len.setdefault(vec, len(word))
        return vec

    def length(self, vec: Vec) -> int:
        return self._len[vec]

    def column(self, w: Vec) -> dict[Vec, Poly]:
        """``{x: P_{x,w}}`` over the Bruhat interval ``[e, w]``."""
        col = self._col.get(w)
        if col is not None:
            return col
        lw = self._len.get(w)
        if lw is None:
            lw = self._len[w] = vector_length(self.g, w)
        if lw > self.limits.max_length:
            raise OracleLimitError(f"length {lw} exceeds max_length={self.limits.max_length}")
        s = min(i for i, c in enumerate(w) if c < 0)
        v = act_left(self.g, s, w)
        self._len.setdefault(v, lw - 1)
        colv = self.column(v)

        interval = set(colv)
        for x in colv:
            sx = act_left(self.g, s, x)
            if sx not in interval:
                self._len.setdefault(sx, self._len[x] + (-1 if x[s] < 0 else 1))
                interval.add(sx)
        if len(interval) > self.limits.max_interval:
            raise OracleLimitError(
                f"interval of size {len(interval)} exceeds max_interval={self.limits.max_interval}")

        corrections = [(z, m, (lw - self._len[z]) // 2, self.column(z))
                       for z, m in self.mu_list(v) if z[s] < 0]
        col = {}
        for x in interval:
            sx = act_left(self.g, s, x)
            c = 1 if x[s] < 0 else 0
            p = _padd(_padd((), colv.get(sx, ()), 1 - c), colv.get(x, ()), c)
            for z, m, shift, colz in corrections:
                pz = colz.get(x)
                if pz:
                    p = _padd(p, pz, shift, -m)
            if p:
                col[x] = p
        self._col[w] = col
        return col

    def mu_list(self, w: Vec) -> list[tuple[Vec, int]]:
        """Pairs ``(z, mu(z, w))`` with ``z < w`` and non-zero mu."""
        out = self._mu_list.get(w)
        if out is None:
            lw = self._len[w]
            out = []
            for z, p in self.column(w).items():
                d = lw - self._len[z] - 1
                if d >= 0 and d % 2 == 0 and poly_coeff(p, d // 2):
                    out.append((z, poly_coeff(p, d // 2)))
            self._mu_list[w] = out
        return out

    def kl_poly(self, x: Sequence[int] | FCElement, w: Sequence[int] | FCElement) -> Poly:
        """``P_{x,w}`` as coefficients of ``1, q, q^2, ...``; empty tuple means 0."""
        xv, wv = self._vec(x), self._vec(w)
        return self.column(wv).get(xv, ())

    def leq(self, x: Sequence[int] | FCElement, w: Sequence[int] | FCElement) -> bool:
        return self._vec(x) in self.column(self._vec(w))

    def mu(self, x: Sequence[int] | FCElement, w: Sequence[int] | FCElement) -> int:
        xv, wv = self._vec(x), self._vec(w)
        d = self._len[wv] - self._len[xv] - 1
        if d < 0 or d % 2:
            return 0
        return poly_coeff(self.column(wv).get(xv, ()), d // 2)

    def mu_tilde(self, x: FCElement, y: FCElement) -> int:
        """The symmetrised coefficient: mu(x, y) if x <= y, else mu(y, x)."""
        return self.mu(x, y) if self.leq(x, y) else self.mu(y, x)

    def interval_size(self, w: Sequence[int] | FCElement) -> int:
        return len(self.column(self._vec(w)))


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
        parts.append(mono if c == 1 else f"{c}*{mono}" if k else str(c))
    return " + ".join(parts)
