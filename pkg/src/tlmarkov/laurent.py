"""Sparse integer Laurent polynomials in a single variable ``v``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term dictionaries are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPolynomial":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> float:
        return max(self._terms) if self._terms else float("-inf")

    def low_degree(self) -> float:
        return min(self._terms) if self._terms else float("inf")

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible in Z[v, v^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPolynomial({e * k: c ** (-k)})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, v):
        return sum(c * v ** e for e, c in self._terms.items())

    def __repr__(self):
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                power = "v" if e == 1 else f"v^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(e): c for e, c in data.items()})


V = LaurentPolynomial.monomial(1)
DELTA = LaurentPolynomial({1: 1, -1: 1})
Q = LaurentPolynomial.monomial(2)


def delta_power_series(e: int, precision: int) -> dict[int, int]:
    """Expansion of ``delta**e`` in descending powers of v.

    Returns the coefficients of ``v**k`` for all ``k >= e - precision``. For
    ``e >= 0`` this is the exact polynomial; for ``e < 0`` it is the
    truncation of ``v**e * (1 + v**-2)**e`` obtained by long division.
    """
    if e >= 0:
        return {k: c for k, c in (DELTA ** e).terms.items() if k >= e - precision}
    # 1/(1 + v^-2) = sum_j (-1)^j v^(-2j); raise that series to the power -e.
    m = -e
    inv = [0] * (precision + 1)
    for j in range(0, precision + 1, 2):
        inv[j] = (-1) ** (j // 2)
    series = [1] + [0] * precision
    for _ in range(m):
        nxt = [0] * (precision + 1)
        for i, a in enumerate(series):
            if a:
                for j in range(precision + 1 - i):
                    if inv[j]:
                        nxt[i + j] += a * inv[j]
        series = nxt
    return {e - i: c for i, c in enumerate(series) if c}


def sum_polys(polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for p in polys:
        total = total + p
    return total
