"""Commutative (q = 1) cluster mutation, used as an independent oracle.

Nothing here touches the quantum torus or matrix-mutation code: Laurent
polynomials are plain ``{exponent tuple: int}`` dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Poly = dict[tuple[int, ...], int]


class ClassicalLaurentFailure(ArithmeticError):
    pass


def pmul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for a, x in f.items():
        for b, y in g.items():
            e = tuple(p + r for p, r in zip(a, b))
            out[e] = out.get(e, 0) + x * y
    return {e: c for e, c in out.items() if c}


def padd(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def monomial(e: Sequence[int], c: int = 1) -> Poly:
    return {tuple(e): c}


def ppow(f: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative power of a polynomial")
    out = monomial((0,) * len(next(iter(f))))
    for _ in range(n):
        out = pmul(out, f)
    return out


def pdiv(f: Poly, g: Poly) -> Poly:
    """Exact quotient ``f / g`` of commutative Laurent polynomials over Z."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return {}
    n = len(next(iter(g)))
    # graded-reverse order would do as well; any monomial order works
    key = lambda e: (sum(e), e)
    glead = max(g, key=key)
    gc = g[glead]
    lo = [min(e[i] for e in f) - min(e[i] for e in g) for i in range(n)]
    hi = [max(e[i] for e in f) - max(e[i] for e in g) for i in range(n)]
    rem = dict(f)
    quot: Poly = {}
    while rem:
        r = max(rem, key=key)
        e = tuple(x - y for x, y in zip(r, glead))
        if any(not l <= x <= h for x, l, h in zip(e, lo, hi)) or rem[r] % gc:
            raise ClassicalLaurentFailure("not exactly divisible")
        c = rem[r] // gc
        quot[e] = c
        for b, y in g.items():
            t = tuple(p + s for p, s in zip(b, e))
            v = rem.get(t, 0) - c * y
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return quot


@dataclass(frozen=True)
class ClassicalSeed:
    exchangeable: tuple[int, ...]
    B: tuple[tuple[int, ...], ...]       # K x Kex, columns in exchangeable order
    cluster: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]  # frozen polys

    @classmethod
    def initial(cls, exchangeable: Sequence[int], B) -> "ClassicalSeed":
        n = len(B)
        xs = tuple(
            tuple(sorted(monomial(tuple(1 if j == i else 0 for j in range(n))).items())) for i in range(n)
        )
        return cls(tuple(exchangeable), tuple(tuple(r) for r in B), xs)

    def poly(self, i: int) -> Poly:
        return dict(self.cluster[i - 1])


def _mutate_matrix(B, exchangeable, k):
    kc = exchangeable.index(k)
    out = []
    for i in range(len(B)):
        row = []
        for j in range(len(exchangeable)):
            if i == k - 1 or j == kc:
                row.append(-B[i][j])
            else:
                # b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
                bik, bkj = B[i][kc], B[k - 1][j]
                row.append(B[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(row))
    return tuple(out)


def classical_oracle_mutate(seed: ClassicalSeed, k: int) -> ClassicalSeed:
    """``x'_k = (prod x_i^[b_ik]_+ + prod x_i^[-b_ik]_+) / x_k``."""
    if k not in seed.exchangeable:
        raise ValueError(f"index {k} is not exchangeable")
    kc = seed.exchangeable.index(k)
    n = len(seed.B)
    one = monomial((0,) * n)
    pos, negm = one, one
    for i in range(n):
        b = seed.B[i][kc]
        if b > 0:
            pos = pmul(pos, ppow(seed.poly(i + 1), b))
        elif b < 0:
            negm = pmul(negm, ppow(seed.poly(i + 1), -b))
    try:
        new = pdiv(padd(pos, negm), seed.poly(k))
    except ClassicalLaurentFailure as exc:
        raise ClassicalLaurentFailure(f"classical exchange at {k} failed") from exc
    cluster = list(seed.cluster)
    cluster[k - 1] = tuple(sorted(new.items()))
    return ClassicalSeed(seed.exchangeable, _mutate_matrix(seed.B, seed.exchangeable, k), tuple(cluster))
