"""Symmetric Cartan data, weights, and the Weyl group action on them.

A weight is carried as a pair ``(fund, root)`` meaning
``sum fund[i] * varpi_i + sum root[i] * alpha_i``.  Simple reflections only
ever subtract multiples of simple roots, so the fundamental-weight part of
a weight is never touched by the Weyl group and no rationals are needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence


class NotReduced(ValueError):
    """The word is not a reduced expression."""


class MixedWeightPair(ValueError):
    """Both arguments of the bilinear form have a fundamental-weight part."""


class CartanError(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    """A symmetric generalized Cartan matrix indexed by ``1..n``."""

    cartan: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.cartan)
        object.__setattr__(self, "cartan", a)
        n = len(a)
        for i, row in enumerate(a):
            if len(row) != n:
                raise CartanError("Cartan matrix must be square")
            if row[i] != 2:
                raise CartanError(f"diagonal entry a_{i + 1}{i + 1} must be 2")
            for j, x in enumerate(row):
                if i != j and x > 0:
                    raise CartanError("off-diagonal entries must be <= 0")
                if a[j][i] != x:
                    raise CartanError("only symmetric Cartan matrices are supported")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def a(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def simple_root(self, i: int) -> "Weight":
        return Weight.from_root([1 if t == i else 0 for t in self.index_set])

    def fundamental_weight(self, i: int) -> "Weight":
        return Weight.from_fund([1 if t == i else 0 for t in self.index_set])

    def zero(self) -> "Weight":
        return Weight.from_root([0] * self.rank)


@dataclass(frozen=True)
class Weight:
    """``sum fund_i varpi_i + sum root_i alpha_i`` with integer coordinates."""

    fund: tuple[int, ...]
    root: tuple[int, ...]

    @classmethod
    def from_root(cls, coords: Sequence[int]) -> "Weight":
        coords = tuple(int(x) for x in coords)
        return cls((0,) * len(coords), coords)

    @classmethod
    def from_fund(cls, coords: Sequence[int]) -> "Weight":
        coords = tuple(int(x) for x in coords)
        return cls(coords, (0,) * len(coords))

    @property
    def is_root(self) -> bool:
        """True when the weight lies in the root lattice (no varpi part)."""
        return not any(self.fund)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(x + y for x, y in zip(self.fund, other.fund)),
            tuple(x + y for x, y in zip(self.root, other.root)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.fund), tuple(-x for x in self.root))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def scale(self, c: int) -> "Weight":
        return Weight(tuple(c * x for x in self.fund), tuple(c * x for x in self.root))


def coroot_pairing(cd: CartanDatum, i: int, lam: Weight) -> int:
    """``<h_i, lam>`` using ``<h_i, varpi_j> = delta_ij`` and ``<h_i, alpha_j> = a_ij``."""
    row = cd.cartan[i - 1]
    return lam.fund[i - 1] + sum(a * r for a, r in zip(row, lam.root))


def reflect(cd: CartanDatum, i: int, lam: Weight) -> Weight:
    """Simple reflection ``r_i(lam) = lam - <h_i, lam> alpha_i``."""
    if i not in cd.index_set:
        raise ValueError(f"index {i} not in I = {cd.index_set}")
    c = coroot_pairing(cd, i, lam)
    if c == 0:
        return lam
    root = list(lam.root)
    root[i - 1] -= c
    return Weight(lam.fund, tuple(root))


def weyl_apply(cd: CartanDatum, word: Sequence[int], lam: Weight) -> Weight:
    """Apply ``w = s_{i_1} ... s_{i_l}`` to ``lam`` (rightmost letter acts first)."""
    for i in reversed(tuple(word)):
        lam = reflect(cd, i, lam)
    return lam


def beta_sequence(cd: CartanDatum, word: Sequence[int]) -> list[Weight]:
    """Roots ``beta_k = w_{<k}(alpha_{i_k})``; raises NotReduced unless they are
    pairwise distinct positive roots."""
    word = tuple(word)
    betas: list[Weight] = []
    seen = set()
    for k, i in enumerate(word):
        if i not in cd.index_set:
            raise ValueError(f"letter {i} not in I = {cd.index_set}")
        beta = weyl_apply(cd, word[:k], cd.simple_root(i))
        if any(x < 0 for x in beta.root) or not any(beta.root):
            raise NotReduced(f"word {word} is not reduced: beta_{k + 1} = {beta.root} is not positive")
        if beta.root in seen:
            raise NotReduced(f"word {word} is not reduced: beta_{k + 1} repeats")
        seen.add(beta.root)
        betas.append(beta)
    return betas


def bilinear(cd: CartanDatum, x: Weight, y: Weight) -> int:
    """The symmetric form with ``(alpha_i, alpha_j) = a_ij``, ``(alpha_i, varpi_j) = delta_ij``."""
    if not x.is_root:
        if not y.is_root:
            raise MixedWeightPair("at least one argument must lie in the root lattice")
        x, y = y, x
    # x = sum x_i alpha_i, so (x, y) = sum_i x_i <h_i, y>
    return sum(xi * coroot_pairing(cd, i, y) for i, xi in zip(cd.index_set, x.root) if xi)


def weight_of_var(cd: CartanDatum, word: Sequence[int], k: int) -> Weight:
    """``w_{<=k} varpi_{i_k} - varpi_{i_k}`` in root coordinates (``1 <= k <= l``)."""
    word = tuple(word)
    if not 1 <= k <= len(word):
        raise IndexError(f"k = {k} out of range 1..{len(word)}")
    i = word[k - 1]
    varpi = cd.fundamental_weight(i)
    return weyl_apply(cd, word[:k], varpi) - varpi


# ---------------------------------------------------------------------------
# construction from text

def _type_a(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def _from_edges(n: int, edges) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a


def named_cartan(name: str) -> CartanDatum:
    """Finite simply-laced types ``An``, ``Dn`` (n >= 4), ``E6``-``E8``."""
    m = re.fullmatch(r"\s*([ADEade])\s*_?(\d+)\s*", name)
    if not m:
        raise CartanError(f"unrecognised Cartan type {name!r}")
    letter, n = m.group(1).upper(), int(m.group(2))
    if letter == "A" and n >= 1:
        return CartanDatum(_type_a(n))
    if letter == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        return CartanDatum(_from_edges(n, edges))
    if letter == "E" and n in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-6-..., 2 attached to 4
        edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]
        return CartanDatum(_from_edges(n, edges))
    raise CartanError(f"unsupported Cartan type {name!r}")


def parse_matrix(text: str) -> CartanDatum:
    """Parse ``"2,-1;-1,2"`` (rows separated by ``;``)."""
    rows = [r for r in text.strip().split(";") if r.strip()]
    try:
        return CartanDatum(tuple(tuple(int(x) for x in r.split(",")) for r in rows))
    except ValueError as exc:
        if isinstance(exc, CartanError):
            raise
        raise CartanError(f"malformed matrix {text!r}") from exc


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))
