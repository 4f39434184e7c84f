"""The based quantum torus P(L) in the basis of normalized monomials X^a.

With ``v**2 = q`` the product rule reads

    X^a X^b = v^{<a, b>_L} X^{a+b},   <a, b>_L = sum_{i,j} a_i b_j L_ij,

so every q-power that appears is an integer power of ``v``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .qring import NotDivisible, QInt, divide_exact

Exp = tuple[int, ...]


class TorusElement:
    """Finite map ``exponent vector -> QInt`` (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, QInt] | Iterable[tuple[Exp, QInt]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, QInt] = {}
        for a, c in items:
            a = tuple(int(x) for x in a)
            if isinstance(c, int):
                c = QInt(c)
            acc[a] = acc[a] + c if a in acc else c
        self._terms = {a: c for a, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, a: Sequence[int], coeff: QInt | int = 1) -> "TorusElement":
        return cls({tuple(a): coeff})

    @classmethod
    def one(cls, n: int) -> "TorusElement":
        return cls.monomial((0,) * n)

    @property
    def terms(self) -> dict[Exp, QInt]:
        return dict(self._terms)

    def support(self) -> list[Exp]:
        return sorted(self._terms)

    def coeff(self, a: Sequence[int]) -> QInt:
        return self._terms.get(tuple(a), QInt())

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusElement) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "TorusElement") -> "TorusElement":
        acc = dict(self._terms)
        for a, c in other._terms.items():
            acc[a] = acc[a] + c if a in acc else c
        return TorusElement(acc)

    def __neg__(self) -> "TorusElement":
        return TorusElement({a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def scale(self, c: QInt | int) -> "TorusElement":
        if isinstance(c, int):
            c = QInt(c)
        return TorusElement({a: c * x for a, x in self._terms.items()})

    def shift(self, e: int) -> "TorusElement":
        """Multiply every coefficient by ``v**e``."""
        return TorusElement({a: c.shift(e) for a, c in self._terms.items()})

    def bar(self) -> "TorusElement":
        """Conjugate coefficients; the normalized monomials are bar-fixed."""
        return TorusElement({a: c.bar() for a, c in self._terms.items()})

    def specialize_q1(self) -> dict[Exp, int]:
        out = {}
        for a, c in self._terms.items():
            s = c.specialize_q1()
            if s:
                out[a] = s
        return out

    def is_nonneg(self) -> bool:
        return all(c.is_nonneg() for c in self._terms.values())

    def __repr__(self) -> str:
        return f"TorusElement({self.to_text()})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({self._terms[a].to_text()})*X^{list(a)}" for a in sorted(self._terms, reverse=True))

    # -- JSON ----------------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [{"exponent": list(a), "coeff": self._terms[a].to_text()} for a in sorted(self._terms)]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "TorusElement":
        return cls({tuple(t["exponent"]): QInt.from_text(t["coeff"]) for t in obj})


def _check_skew(L) -> tuple[tuple[int, ...], ...]:
    L = tuple(tuple(int(x) for x in row) for row in L)
    n = len(L)
    for i in range(n):
        if len(L[i]) != n:
            raise ValueError("commutation matrix must be square")
        for j in range(n):
            if L[i][j] != -L[j][i]:
                raise ValueError("commutation matrix must be skew-symmetric")
    return L


class QuantumTorus:
    """Arithmetic in P(L) for a fixed skew-symmetric integer matrix ``L``."""

    def __init__(self, L):
        self.L = _check_skew(L)
        self.rank = len(self.L)

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``sum_{i,j} a_i b_j L_ij`` (the v-exponent of X^a X^b)."""
        L = self.L
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = L[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
        return total

    def product_exponent(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """The q-power ``1/2 sum a_i b_j L_ij`` in ``X^a X^b = q^(.) X^{a+b}``."""
        return Fraction(self.pairing(a, b), 2)

    def mul(self, f: TorusElement, g: TorusElement) -> TorusElement:
        acc: dict[Exp, QInt] = {}
        for a, ca in f.items():
            for b, cb in g.items():
                e = tuple(x + y for x, y in zip(a, b))
                c = (ca * cb).shift(self.pairing(a, b))
                acc[e] = acc[e] + c if e in acc else c
        return TorusElement(acc)

    def power(self, f: TorusElement, n: int) -> TorusElement:
        if n < 0:
            f, n = self.inverse(f), -n
        out = TorusElement.one(self.rank)
        for _ in range(n):
            out = self.mul(out, f)
        return out

    def inverse(self, f: TorusElement) -> TorusElement:
        """Inverse of a unit ``+-v^e X^a``; raises NotDivisible for anything else."""
        if len(f) != 1:
            raise NotDivisible("only monomials are invertible in the torus")
        (a, c), = f.items()
        if not c.is_unit():
            raise NotDivisible("coefficient is not a unit")
        (e, s), = c.items()
        # X^a X^{-a} = X^0, so (c X^a)^{-1} = c^{-1} X^{-a}
        return TorusElement.monomial(tuple(-x for x in a), QInt.vpow(-e, s))

    def divide_left(self, f: TorusElement, g: TorusElement) -> TorusElement:
        """Return ``h`` with ``g * h == f``; raise NotDivisible if none exists.

        Lex-leading terms are cancelled one by one.  Since the Newton polytope
        of ``g*h`` is the Minkowski sum of those of ``g`` and ``h``, any
        candidate quotient exponent outside the box
        ``[min f - min g, max f - max g]`` proves non-divisibility.
        """
        if not g:
            raise ZeroDivisionError("division by zero torus element")
        if not f:
            return TorusElement()
        n = self.rank
        fs, gs = f.support(), g.support()
        lo = [min(a[i] for a in fs) - min(b[i] for b in gs) for i in range(n)]
        hi = [max(a[i] for a in fs) - max(b[i] for b in gs) for i in range(n)]
        g_lead = gs[-1]
        g_lead_c = g.coeff(g_lead)
        g_items = list(g.items())
        rem = f.terms
        quot: dict[Exp, QInt] = {}
        while rem:
            r_lead = max(rem)
            e = tuple(x - y for x, y in zip(r_lead, g_lead))
            if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
                raise NotDivisible("remainder left outside the quotient's Newton box")
            c = divide_exact(rem[r_lead], g_lead_c).shift(-self.pairing(g_lead, e))
            quot[e] = c
            for b, cb in g_items:
                t = tuple(x + y for x, y in zip(b, e))
                sub = (cb * c).shift(self.pairing(b, e))
                x = rem[t] - sub if t in rem else -sub
                if x:
                    rem[t] = x
                else:
                    rem.pop(t, None)
        return TorusElement(quot)


def monomial_product_exponent(L, a, b) -> Fraction:
    return QuantumTorus(L).product_exponent(a, b)


def mul(L, f: TorusElement, g: TorusElement) -> TorusElement:
    return QuantumTorus(L).mul(f, g)


def divide_left_exact(L, f: TorusElement, g: TorusElement) -> TorusElement:
    return QuantumTorus(L).divide_left(f, g)


def bar(f: TorusElement) -> TorusElement:
    return f.bar()


def specialize_q1(f: TorusElement) -> dict[Exp, int]:
    return f.specialize_q1()
