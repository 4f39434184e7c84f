"""The initial quantum seed attached to a reduced word.

Both the exchange matrix and the Lambda matrix are certified at construction:
``Lambda . Btilde = [-2I; 0]`` and ``D . Btilde = 0`` must hold exactly, and
``Btilde`` must also be recovered by inverting the stacked matrix ``[Lambda'; D]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .qtorus import TorusElement
from .rootdata import CartanDatum, Weight, beta_sequence, bilinear, weight_of_var, weyl_apply
from .seed import Matrix, QuantumSeed


class ConventionMismatch(ValueError):
    """Certification of the initial exchange/commutation data failed."""


class SupportLeak(ValueError):
    pass


class Singular(ArithmeticError):
    pass


class NonIntegral(ArithmeticError):
    pass


def kplus(word: Sequence[int], k: int) -> int:
    """Next position ``s > k`` carrying the same letter, or ``l + 1``."""
    word = tuple(word)
    for s in range(k + 1, len(word) + 1):
        if word[s - 1] == word[k - 1]:
            return s
    return len(word) + 1


def kminus(word: Sequence[int], k: int) -> int:
    """Previous position ``s < k`` carrying the same letter, or ``0``."""
    word = tuple(word)
    for s in range(k - 1, 0, -1):
        if word[s - 1] == word[k - 1]:
            return s
    return 0


def frozen_indices(word: Sequence[int]) -> tuple[int, ...]:
    l = len(word)
    return tuple(k for k in range(1, l + 1) if kplus(word, k) == l + 1)


def exchangeable_indices(word: Sequence[int]) -> tuple[int, ...]:
    l = len(word)
    return tuple(k for k in range(1, l + 1) if kplus(word, k) != l + 1)


def letters(word: Sequence[int]) -> tuple[int, ...]:
    """The set I' of letters occurring in the word, sorted."""
    return tuple(sorted(set(word)))


def initial_lambda(cd: CartanDatum, word: Sequence[int]) -> Matrix:
    """``Lambda_st = (w_{<=t} varpi_{i_t} + varpi_{i_t}, wt M_s)`` for ``s <= t``, skew-extended."""
    word = tuple(word)
    l = len(word)
    wts = [weight_of_var(cd, word, s) for s in range(1, l + 1)]
    lam = [[0] * l for _ in range(l)]
    for t in range(1, l + 1):
        varpi = cd.fundamental_weight(word[t - 1])
        u = weyl_apply(cd, word[:t], varpi) + varpi
        for s in range(1, t):
            v = bilinear(cd, wts[s - 1], u)
            lam[s - 1][t - 1] = v
            lam[t - 1][s - 1] = -v
    return tuple(tuple(r) for r in lam)


def weight_matrix(cd: CartanDatum, word: Sequence[int]) -> Matrix:
    """``D``: rows indexed by I', columns by positions; column j is wt(M_j) in alpha-coordinates."""
    word = tuple(word)
    rows = letters(word)
    cols = [weight_of_var(cd, word, j).root for j in range(1, len(word) + 1)]
    for j, c in enumerate(cols, 1):
        for i, x in enumerate(c, 1):
            if x and i not in rows:
                raise SupportLeak(f"wt(M_{j}) has alpha_{i} outside I'")
    return tuple(tuple(c[t - 1] for c in cols) for t in rows)


def _raw_exchange_matrix(cd: CartanDatum, word: Sequence[int]) -> Matrix:
    word = tuple(word)
    l = len(word)
    kp = [kplus(word, k) for k in range(1, l + 1)]
    ex = exchangeable_indices(word)
    out = []
    for s in range(1, l + 1):
        sp = kp[s - 1]
        row = []
        for t in ex:
            tp = kp[t - 1]
            a = cd.a(word[s - 1], word[t - 1])
            if s == tp:
                b = 1
            elif t == sp:
                b = -1
            elif t < s < tp < sp:
                b = a
            elif s < t < sp < tp:
                b = -a
            else:
                b = 0
            row.append(b)
        out.append(tuple(row))
    return tuple(out)


def _matmul(A, B) -> list[list[int]]:
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]) if B else 0)] for i in range(len(A))]


def certify(cd: CartanDatum, word: Sequence[int], Btilde: Matrix, lam: Matrix | None = None) -> None:
    """Raise ConventionMismatch unless ``Lambda Btilde = [-2I;0]`` and ``D Btilde = 0``."""
    word = tuple(word)
    ex = exchangeable_indices(word)
    if not ex:
        return
    lam = lam if lam is not None else initial_lambda(cd, word)
    prod = _matmul(lam, Btilde)
    for i in range(len(word)):
        for jc, j in enumerate(ex):
            want = -2 if i + 1 == j else 0
            if prod[i][jc] != want:
                raise ConventionMismatch(f"(Lambda Btilde)[{i + 1},{j}] = {prod[i][jc]}, expected {want}")
    D = weight_matrix(cd, word)
    if any(any(r) for r in _matmul(D, Btilde)):
        raise ConventionMismatch("D . Btilde != 0")


def initial_exchange_matrix(cd: CartanDatum, word: Sequence[int]) -> Matrix:
    """Exchange matrix of the initial seed, certified against Lambda and D."""
    beta_sequence(cd, word)
    B = _raw_exchange_matrix(cd, word)
    certify(cd, word, B)
    return B


def stacked_matrix(lam: Matrix, D: Matrix, exchangeable: Sequence[int]) -> list[list[int]]:
    """``[Lambda'; D]`` with Lambda' the rows of Lambda at exchangeable indices."""
    return [list(lam[k - 1]) for k in exchangeable] + [list(r) for r in D]


def btilde_from_lambda(lam_prime: Sequence[Sequence[int]], D: Sequence[Sequence[int]]) -> Matrix:
    """Solve ``[Lambda'; D] Btilde = [-2I; 0]`` exactly."""
    m = len(lam_prime)
    stack = sympy.Matrix([list(r) for r in lam_prime] + [list(r) for r in D])
    if stack.rows != stack.cols:
        raise Singular(f"stacked matrix is {stack.rows}x{stack.cols}, not square")
    if stack.rows == 0 or m == 0:
        return tuple(() for _ in range(stack.cols))
    if stack.det() == 0:
        raise Singular("[Lambda'; D] is not invertible")
    rhs = sympy.zeros(stack.rows, m)
    for i in range(m):
        rhs[i, i] = -2
    sol = stack.LUsolve(rhs)
    out = []
    for i in range(sol.rows):
        row = []
        for j in range(sol.cols):
            x = sympy.Rational(sol[i, j])
            if x.q != 1:
                raise NonIntegral(f"entry ({i + 1},{j + 1}) = {x} is not an integer")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def matrix_rank(M: Sequence[Sequence[int]]) -> int:
    if not M or not M[0]:
        return 0
    return sympy.Matrix([list(r) for r in M]).rank()


@dataclass(frozen=True)
class InitialSeedData:
    word: tuple[int, ...]
    kplus: tuple[int, ...]
    frozen: tuple[int, ...]
    Iprime: tuple[int, ...]
    D: Matrix
    Lambda: Matrix
    seed: QuantumSeed


def initial_seed(cd: CartanDatum, word: Sequence[int]) -> QuantumSeed:
    return initial_seed_data(cd, word).seed


def initial_seed_data(cd: CartanDatum, word: Sequence[int]) -> InitialSeedData:
    word = tuple(int(i) for i in word)
    beta_sequence(cd, word)
    l = len(word)
    lam = initial_lambda(cd, word)
    B = _raw_exchange_matrix(cd, word)
    certify(cd, word, B, lam)
    D = weight_matrix(cd, word)
    ex = exchangeable_indices(word)
    if ex and btilde_from_lambda([lam[k - 1] for k in ex], D) != B:
        raise ConventionMismatch("Btilde disagrees with the inversion of [Lambda'; D]")
    L = tuple(tuple(-x for x in r) for r in lam)
    weights = tuple(weight_of_var(cd, word, k).root for k in range(1, l + 1))
    units = tuple(TorusElement.monomial(tuple(1 if j == i else 0 for j in range(l))) for i in range(l))
    seed = QuantumSeed(
        cartan=cd,
        exchangeable=ex,
        L=L,
        Btilde=B,
        weights=weights,
        expansions=units,
        L_init=L,
        labels=tuple(f"x{k}" for k in range(1, l + 1)),
        word=word,
    )
    seed.assert_compatible()
    seed.assert_weight_relation()
    return InitialSeedData(
        word=word,
        kplus=tuple(kplus(word, k) for k in range(1, l + 1)),
        frozen=frozen_indices(word),
        Iprime=letters(word),
        D=D,
        Lambda=lam,
        seed=seed,
    )
