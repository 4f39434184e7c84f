"""Exact arithmetic in Z[q^{1/2}, q^{-1/2}].

Elements are integer Laurent polynomials in ``v`` with ``v**2 = q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """No exact quotient exists."""


class QInt:
    """An element of Z[v, v^{-1}], stored as ``{exponent: nonzero coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))
        self._hash = None

    @classmethod
    def vpow(cls, e: int, c: int = 1) -> "QInt":
        return cls({e: c})

    @classmethod
    def qpow(cls, h) -> "QInt":
        """``q^h`` for ``h`` in (1/2)Z."""
        return cls.vpow(_half_to_v(h))

    # -- data access ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QInt(other)
        return isinstance(other, QInt) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"QInt({self.to_text()!r})"

    def top(self) -> int:
        return self._terms[0][0]

    def bottom(self) -> int:
        return self._terms[-1][0]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[v^{+-1}] are exactly ``+-v^e``."""
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> "QInt":
        if isinstance(other, int):
            other = QInt(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return QInt(acc)

    __radd__ = __add__

    def __neg__(self) -> "QInt":
        return QInt({e: -c for e, c in self._terms})

    def __sub__(self, other) -> "QInt":
        if isinstance(other, int):
            other = QInt(other)
        return self + (-other)

    def __rsub__(self, other) -> "QInt":
        return QInt(other) - self

    def __mul__(self, other) -> "QInt":
        if isinstance(other, int):
            return QInt({e: c * other for e, c in self._terms})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return QInt(acc)

    __rmul__ = __mul__

    def shift(self, e: int) -> "QInt":
        """Multiply by ``v**e``."""
        return QInt({x + e: c for x, c in self._terms})

    def bar(self) -> "QInt":
        return QInt({-e: c for e, c in self._terms})

    def is_nonneg(self) -> bool:
        return all(c >= 0 for _, c in self._terms)

    def specialize_q1(self) -> int:
        return sum(c for _, c in self._terms)

    # -- text ----------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*v^{e}" for e, c in self._terms)

    @classmethod
    def from_text(cls, text: str) -> "QInt":
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for part in text.split(" + "):
            m = _TERM.fullmatch(part.strip())
            if not m:
                raise ValueError(f"malformed QInt term {part!r}")
            terms.append((int(m.group(2)), int(m.group(1))))
        return cls(terms)


_TERM = re.compile(r"(-?\d+)\*v\^(-?\d+)")


def _half_to_v(h) -> int:
    h2 = Fraction(h) * 2
    if h2.denominator != 1:
        raise ValueError(f"q-power {h} is not a half-integer")
    return int(h2)


def add(a: QInt, b: QInt) -> QInt:
    return a + b


def mul(a: QInt, b: QInt) -> QInt:
    return a * b


def neg(a: QInt) -> QInt:
    return -a


def scale_qpow(a: QInt, h) -> QInt:
    """Multiply by ``q^h``, ``h`` a half-integer."""
    return a.shift(_half_to_v(h))


def bar(a: QInt) -> QInt:
    return a.bar()


def is_nonneg(a: QInt) -> bool:
    return a.is_nonneg()


def specialize_q1(a: QInt) -> int:
    return a.specialize_q1()


def divide_exact(a: QInt, b: QInt) -> QInt:
    """Return ``c`` with ``b * c == a``; raise NotDivisible otherwise."""
    if not b:
        raise ZeroDivisionError("division by zero QInt")
    if not a:
        return QInt()
    if b.is_monomial():
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            qt, r = divmod(c, cb)
            if r:
                raise NotDivisible(f"{a.to_text()} / {b.to_text()}")
            out[e - eb] = qt
        return QInt(out)
    # long division from the top degree; the quotient spans a.top-b.top .. a.bottom-b.bottom
    rem = a.terms
    btop, bcoef = b.top(), b.terms[b.top()]
    low = a.bottom() - b.bottom()
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        e = top - btop
        if e < low:
            raise NotDivisible(f"{a.to_text()} / {b.to_text()}")
        qt, r = divmod(rem[top], bcoef)
        if r:
            raise NotDivisible(f"{a.to_text()} / {b.to_text()}")
        quot[e] = qt
        for eb, cb in b.items():
            x = rem.get(eb + e, 0) - qt * cb
            if x:
                rem[eb + e] = x
            else:
                rem.pop(eb + e, None)
    return QInt(quot)
