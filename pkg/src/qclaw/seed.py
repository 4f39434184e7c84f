"""Quantum seeds and their mutation.

A seed carries its cluster as Laurent expansions in a fixed ambient
("initial") torus P(L_init).  Indices are ``1..K``; exponent vectors are
dense tuples in that order and the columns of ``Btilde`` follow the
exchangeable indices in increasing order.

The commutation matrix ``L`` of a seed is minus the matrix of Lambda-values
of its cluster, so a compatible pair satisfies ``L . Btilde = 2 [I; 0]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .qring import NotDivisible, QInt
from .qtorus import Exp, QuantumTorus, TorusElement
from .rootdata import CartanDatum, Weight, bilinear

SCHEMA = "qclaw/1"


class SeedError(ValueError):
    pass


class FrozenMutation(SeedError):
    """Mutation requested at a frozen (or unknown) index."""


class NegativeExchangeableExponent(SeedError):
    pass


class LaurentFailure(ArithmeticError):
    """Exact division failed while computing a mutated variable."""


class IncompatibleSeed(SeedError):
    """A seed invariant (compatibility, weight relation, skewness) is violated."""


Matrix = tuple[tuple[int, ...], ...]


def _mat(m) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def mutate_B(Btilde: Matrix, exchangeable: Sequence[int], k: int) -> Matrix:
    """Matrix mutation of the K x Kex matrix ``Btilde`` at index ``k``."""
    exchangeable = tuple(exchangeable)
    if k not in exchangeable:
        raise FrozenMutation(f"index {k} is not exchangeable")
    kc = exchangeable.index(k)
    kr = k - 1
    out = []
    for i, row in enumerate(Btilde):
        new = []
        for jc, bij in enumerate(row):
            if i == kr or jc == kc:
                new.append(-bij)
            else:
                bik, bkj = row[kc], Btilde[kr][jc]
                sign = -1 if bik < 0 else 1
                new.append(bij + sign * max(bik * bkj, 0))
        out.append(tuple(new))
    return tuple(out)


def mutate_L(L: Matrix, Btilde: Matrix, exchangeable: Sequence[int], k: int) -> Matrix:
    """Mutation of the commutation matrix at ``k`` (needs the unmutated ``Btilde``)."""
    exchangeable = tuple(exchangeable)
    if k not in exchangeable:
        raise FrozenMutation(f"index {k} is not exchangeable")
    kc = exchangeable.index(k)
    kr = k - 1
    n = len(L)
    neg = [max(0, -Btilde[t][kc]) for t in range(n)]
    row_k = [-L[kr][j] + sum(neg[t] * L[t][j] for t in range(n) if neg[t]) for j in range(n)]
    out = [list(r) for r in L]
    for j in range(n):
        if j == kr:
            continue
        out[kr][j] = row_k[j]
        out[j][kr] = -row_k[j]
    out[kr][kr] = 0
    return _mat(out)


def _flip_label(label: str) -> str:
    return label[:-1] if label.endswith("'") else label + "'"


@dataclass(frozen=True)
class QuantumSeed:
    cartan: CartanDatum
    exchangeable: tuple[int, ...]
    L: Matrix
    Btilde: Matrix
    weights: tuple[tuple[int, ...], ...]
    expansions: tuple[TorusElement, ...]
    L_init: Matrix
    labels: tuple[str, ...] = ()
    word: tuple[int, ...] = ()
    _torus: QuantumTorus = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "exchangeable", tuple(sorted(int(k) for k in self.exchangeable)))
        object.__setattr__(self, "L", _mat(self.L))
        object.__setattr__(self, "Btilde", _mat(self.Btilde))
        object.__setattr__(self, "L_init", _mat(self.L_init))
        object.__setattr__(self, "weights", _mat(self.weights))
        object.__setattr__(self, "expansions", tuple(self.expansions))
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        n = len(self.L)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i}" for i in range(1, n + 1)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self._torus is None:
            object.__setattr__(self, "_torus", QuantumTorus(self.L_init))
        if not (len(self.Btilde) == len(self.weights) == len(self.expansions) == len(self.labels) == n):
            raise SeedError("seed data have inconsistent sizes")
        if any(len(r) != len(self.exchangeable) for r in self.Btilde):
            raise SeedError("Btilde must have one column per exchangeable index")
        if any(not 1 <= k <= n for k in self.exchangeable):
            raise SeedError("exchangeable indices must lie in 1..K")

    # -- basic structure -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.L)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1))

    @property
    def frozen(self) -> tuple[int, ...]:
        ex = set(self.exchangeable)
        return tuple(i for i in self.indices if i not in ex)

    @property
    def torus(self) -> QuantumTorus:
        """The ambient initial torus in which the expansions live."""
        return self._torus

    def b(self, i: int, j: int) -> int:
        """Entry ``b_ij`` of ``Btilde`` for ``j`` exchangeable; for ``i`` exchangeable
        and ``j`` frozen the convention ``b_ij = -b_ji`` is used."""
        if j in self.exchangeable:
            return self.Btilde[i - 1][self.exchangeable.index(j)]
        if i in self.exchangeable:
            return -self.Btilde[j - 1][self.exchangeable.index(i)]
        raise KeyError(f"b_{i}{j} undefined for two frozen indices")

    def column(self, k: int) -> tuple[int, ...]:
        kc = self.exchangeable.index(k)
        return tuple(row[kc] for row in self.Btilde)

    def weight(self, i: int) -> Weight:
        return Weight.from_root(self.weights[i - 1])

    def weight_of(self, a: Sequence[int]) -> Weight:
        acc = [0] * self.cartan.rank
        for ai, w in zip(a, self.weights):
            if ai:
                for t, x in enumerate(w):
                    acc[t] += ai * x
        return Weight.from_root(acc)

    def variable(self, i: int) -> TorusElement:
        return self.expansions[i - 1]

    def core(self):
        """Everything mutation acts on (labels excluded)."""
        return (self.exchangeable, self.L, self.Btilde, self.weights, self.expansions)

    # -- pairings ------------------------------------------------------------

    def lambda_pair(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``Lambda(M(a), M(b)) = -sum a_i b_j L_ij``."""
        total = 0
        for i, ai in enumerate(a):
            if ai:
                total += ai * sum(self.L[i][j] * bj for j, bj in enumerate(b) if bj)
        return -total

    def lambda_tilde(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return Fraction(self.lambda_pair(a, b) + bilinear(self.cartan, self.weight_of(a), self.weight_of(b)), 2)

    def weighted_normalization_exponent(self, b: Sequence[int]) -> Fraction:
        """The q-power ``-(wt M(b), wt M(b)) / 4``."""
        mu = self.weight_of(b)
        return Fraction(-bilinear(self.cartan, mu, mu), 4)

    # -- monomials -----------------------------------------------------------

    def normalized_monomial(self, c: Sequence[int], order: Sequence[int] | None = None) -> TorusElement:
        """``X^c = q^{1/2 sum_{i>j} c_i c_j lambda_ij} x_{i_1}^{c_{i_1}} ... `` in the initial torus.

        ``order`` is the total order of the indices used for the ordered
        product (default ``1..K``); the result does not depend on it.
        """
        c = tuple(int(x) for x in c)
        if len(c) != self.size:
            raise SeedError("exponent vector has wrong length")
        for k in self.exchangeable:
            if c[k - 1] < 0:
                raise NegativeExchangeableExponent(f"exponent at exchangeable index {k} is negative")
        order = tuple(order) if order is not None else self.indices
        T = self.torus
        out = TorusElement.one(T.rank)
        active = [i for i in order if c[i - 1]]
        for i in active:
            out = T.mul(out, T.power(self.expansions[i - 1], c[i - 1]))
        # v-exponent: sum over pairs with i after j in the order
        e = 0
        for p, i in enumerate(active):
            for j in active[:p]:
                e += c[i - 1] * c[j - 1] * self.L[i - 1][j - 1]
        return out.shift(e)

    # -- mutation ------------------------------------------------------------

    def exchange_exponents(self, k: int) -> tuple[Exp, Exp]:
        """The exponents ``a'`` and ``a''`` of the exchange relation at ``k``."""
        col = self.column(k)
        a1 = tuple(-1 if i == k - 1 else max(0, b) for i, b in enumerate(col))
        a2 = tuple(-1 if i == k - 1 else max(0, -b) for i, b in enumerate(col))
        return a1, a2

    def exchange_rhs(self, k: int) -> TorusElement:
        """``x_k * (X^{a'} + X^{a''})`` written with nonnegative exponents only."""
        ek = tuple(1 if i == k - 1 else 0 for i in range(self.size))
        total = TorusElement()
        for a in self.exchange_exponents(k):
            s = sum(self.L[k - 1][j] * aj for j, aj in enumerate(a))
            p = tuple(x + y for x, y in zip(a, ek))
            total = total + self.normalized_monomial(p).shift(s)
        return total

    def mutate(self, k: int) -> "QuantumSeed":
        if k not in self.exchangeable:
            raise FrozenMutation(f"cannot mutate at non-exchangeable index {k}")
        rhs = self.exchange_rhs(k)
        try:
            new_var = self.torus.divide_left(rhs, self.expansions[k - 1])
        except NotDivisible as exc:
            raise LaurentFailure(f"exchange relation at {k} is not divisible by x_{k}") from exc
        col = self.column(k)
        new_wt = -self.weight(k)
        for i, b in enumerate(col):
            if b > 0:
                new_wt = new_wt + self.weight(i + 1).scale(b)
        weights = list(self.weights)
        weights[k - 1] = new_wt.root
        expansions = list(self.expansions)
        expansions[k - 1] = new_var
        labels = list(self.labels)
        labels[k - 1] = _flip_label(labels[k - 1])
        out = replace(
            self,
            L=mutate_L(self.L, self.Btilde, self.exchangeable, k),
            Btilde=mutate_B(self.Btilde, self.exchangeable, k),
            weights=tuple(weights),
            expansions=tuple(expansions),
            labels=tuple(labels),
        )
        out.assert_compatible()
        out.assert_weight_relation()
        return out

    def mutate_path(self, ks: Sequence[int]) -> "QuantumSeed":
        s = self
        for k in ks:
            s = s.mutate(k)
        return s

    def as_initial(self) -> "QuantumSeed":
        """The same seed with its own torus as ambient torus (unit-monomial cluster)."""
        n = self.size
        units = tuple(TorusElement.monomial(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
        return replace(self, expansions=units, L_init=self.L, _torus=QuantumTorus(self.L))

    # -- invariants ----------------------------------------------------------

    def compatibility_defects(self) -> list[tuple[int, int, int]]:
        """Entries ``(i, j, value)`` where ``(L Btilde)_ij != 2 delta_ij``."""
        bad = []
        for i in range(self.size):
            for jc, j in enumerate(self.exchangeable):
                v = sum(self.L[i][t] * self.Btilde[t][jc] for t in range(self.size))
                want = 2 if i == j - 1 else 0
                if v != want:
                    bad.append((i + 1, j, v))
        return bad

    def assert_compatible(self):
        for i in range(self.size):
            for j in range(self.size):
                if self.L[i][j] != -self.L[j][i]:
                    raise IncompatibleSeed("L is not skew-symmetric")
        ex = self.exchangeable
        for a, i in enumerate(ex):
            for b, j in enumerate(ex):
                if self.Btilde[i - 1][b] != -self.Btilde[j - 1][a]:
                    raise IncompatibleSeed("principal part of Btilde is not skew-symmetric")
        bad = self.compatibility_defects()
        if bad:
            raise IncompatibleSeed(f"L . Btilde != 2[I;0] at {bad[:3]}")

    def weight_relation_defects(self) -> list[int]:
        bad = []
        for jc, j in enumerate(self.exchangeable):
            acc = [0] * self.cartan.rank
            for i, w in enumerate(self.weights):
                b = self.Btilde[i][jc]
                if b:
                    for t, x in enumerate(w):
                        acc[t] += b * x
            if any(acc):
                bad.append(j)
        return bad

    def assert_weight_relation(self):
        bad = self.weight_relation_defects()
        if bad:
            raise IncompatibleSeed(f"D . Btilde != 0 in columns {bad}")

    def q_commutation_defects(self) -> list[tuple[int, int]]:
        T = self.torus
        bad = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                xi, xj = self.expansions[i], self.expansions[j]
                if T.mul(xi, xj) != T.mul(xj, xi).shift(2 * self.L[i][j]):
                    bad.append((i + 1, j + 1))
        return bad

    # -- JSON ----------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "seed",
            "cartan": [list(r) for r in self.cartan.cartan],
            "indices": list(self.indices),
            "exchangeable": list(self.exchangeable),
            "frozen": list(self.frozen),
            "labels": list(self.labels),
            "L": [list(r) for r in self.L],
            "Btilde": [list(r) for r in self.Btilde],
            "weights": [list(w) for w in self.weights],
            "L_init": [list(r) for r in self.L_init],
            "expansions": [x.to_json_obj() for x in self.expansions],
            "word": list(self.word),
        }

    def to_json(self, indent: int | None = 1) -> str:
        return json.dumps(self.to_json_obj(), indent=indent, sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QuantumSeed":
        if obj.get("schema") != SCHEMA or obj.get("kind", "seed") != "seed":
            raise SeedError(f"expected a {SCHEMA} seed document")
        try:
            n = len(obj["L"])
            if list(obj.get("indices", range(1, n + 1))) != list(range(1, n + 1)):
                raise SeedError("indices must be 1..K")
            seed = cls(
                cartan=CartanDatum(obj["cartan"]),
                exchangeable=tuple(obj["exchangeable"]),
                L=obj["L"],
                Btilde=obj["Btilde"],
                weights=obj["weights"],
                expansions=tuple(TorusElement.from_json_obj(e) for e in obj["expansions"]),
                L_init=obj["L_init"],
                labels=tuple(obj.get("labels", ())),
                word=tuple(obj.get("word", ())),
            )
        except (KeyError, TypeError) as exc:
            raise SeedError(f"malformed seed document: {exc}") from exc
        if set(obj.get("frozen", seed.frozen)) != set(seed.frozen):
            raise SeedError("frozen set inconsistent with exchangeable set")
        seed.assert_compatible()
        seed.assert_weight_relation()
        return seed

    @classmethod
    def from_json(cls, text: str) -> "QuantumSeed":
        return cls.from_json_obj(json.loads(text))


def mutate(seed: QuantumSeed, k: int) -> QuantumSeed:
    return seed.mutate(k)


def normalized_monomial(seed: QuantumSeed, c: Sequence[int]) -> TorusElement:
    return seed.normalized_monomial(c)


def lambda_pair(seed: QuantumSeed, a, b) -> int:
    return seed.lambda_pair(a, b)


def lambda_tilde(seed: QuantumSeed, a, b) -> Fraction:
    return seed.lambda_tilde(a, b)


def weighted_normalization_exponent(seed: QuantumSeed, b) -> Fraction:
    return seed.weighted_normalization_exponent(b)
