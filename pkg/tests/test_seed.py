import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from qclaw.glsinit import initial_seed
from qclaw.qring import QInt
from qclaw.qtorus import TorusElement
from qclaw.rootdata import named_cartan
from qclaw.seed import (
    FrozenMutation,
    NegativeExchangeableExponent,
    QuantumSeed,
    SeedError,
    mutate_B,
    mutate_L,
)

X = TorusElement.monomial
A2 = initial_seed(named_cartan("A2"), (1, 2, 1))
A3 = initial_seed(named_cartan("A3"), (1, 2, 1, 3, 2, 1))


def test_mutate_B_examples():
    B = ((0, 1), (-1, 0))
    assert mutate_B(B, (1, 2), 1) == ((0, -1), (1, 0))
    assert mutate_B(A2.Btilde, (1,), 1) == ((0,), (1,), (-1,))
    assert mutate_B(mutate_B(A3.Btilde, A3.exchangeable, 2), A3.exchangeable, 2) == A3.Btilde
    with pytest.raises(FrozenMutation):
        mutate_B(A2.Btilde, (1,), 2)


def test_mutate_L_examples():
    L1 = mutate_L(A2.L, A2.Btilde, (1,), 1)
    B1 = mutate_B(A2.Btilde, (1,), 1)
    assert all(L1[i][j] == -L1[j][i] for i in range(3) for j in range(3))
    assert [sum(L1[i][t] * B1[t][0] for t in range(3)) for i in range(3)] == [2, 0, 0]
    assert mutate_L(L1, B1, (1,), 1) == A2.L
    # zero column: row and column k just negate
    L = ((0, 1, 2), (-1, 0, 3), (-2, -3, 0))
    assert mutate_L(L, ((0,), (0,), (0,)), (1,), 1) == ((0, -1, -2), (1, 0, 3), (2, -3, 0))


def test_a2_mutation():
    s = A2.mutate(1)
    assert A2.exchange_exponents(1) == ((-1, 0, 1), (-1, 1, 0))
    assert s.variable(1) == X((-1, 0, 1)) + X((-1, 1, 0))
    assert s.variable(1).specialize_q1() == {(-1, 0, 1): 1, (-1, 1, 0): 1}
    assert s.weights[0] == (0, -1)
    assert s.labels == ("x1'", "x2", "x3")
    assert s.mutate(1) == A2
    assert s.mutate(1).labels == A2.labels


def test_frozen_mutation_rejected():
    with pytest.raises(FrozenMutation):
        A2.mutate(2)
    with pytest.raises(FrozenMutation):
        A3.mutate(7)


def test_pairings_examples():
    e = lambda i: tuple(1 if j == i else 0 for j in range(1, 4))
    assert A2.lambda_pair(e(1), e(1)) == 0
    assert A2.lambda_pair(e(1), e(2)) == 1
    assert A2.lambda_tilde(e(1), e(2)) == 1
    assert A2.lambda_tilde(e(2), e(2)) == 1
    assert A2.weighted_normalization_exponent((0, 0, 0)) == 0
    assert A2.weighted_normalization_exponent(e(1)) == Fraction(-1, 2)
    assert A2.weighted_normalization_exponent(e(2)) == Fraction(-1, 2)


def test_normalized_monomial_examples():
    assert A2.normalized_monomial((0, 1, 0)) == A2.variable(2)
    assert A2.normalized_monomial((0, 0, 0)) == TorusElement.one(3)
    assert A3.normalized_monomial((1, 2, 0, 1, 0, 3)) == X((1, 2, 0, 1, 0, 3))
    assert A2.normalized_monomial((0, -1, 2)) == X((0, -1, 2))
    with pytest.raises(NegativeExchangeableExponent):
        A2.normalized_monomial((-1, 0, 0))


def test_exchange_identity_after_division():
    for k in A3.exchangeable:
        s = A3.mutate(k)
        assert A3.torus.mul(A3.variable(k), s.variable(k)) == A3.exchange_rhs(k)


@pytest.mark.parametrize("path", [(1,), (2, 1), (1, 3, 2), (3, 2, 1, 2)])
def test_invariants_along_paths(path):
    s = A3.mutate_path(path)
    assert s.compatibility_defects() == []
    assert s.weight_relation_defects() == []
    assert s.q_commutation_defects() == []
    assert all(x.is_nonneg() for x in s.expansions)


def test_json_roundtrip_and_validation():
    s = A3.mutate_path((1, 2))
    text = s.to_json()
    back = QuantumSeed.from_json(text)
    assert back == s and back.to_json() == text
    assert back.word == (1, 2, 1, 3, 2, 1)
    obj = json.loads(text)
    obj["L"][0][1] += 1
    with pytest.raises(SeedError):
        QuantumSeed.from_json_obj(obj)
    with pytest.raises(SeedError):
        QuantumSeed.from_json_obj({"schema": "other"})


seqs = st.lists(st.sampled_from(A3.exchangeable), max_size=6)


@settings(max_examples=40, deadline=None)
@given(seqs, st.sampled_from(A3.exchangeable))
def test_involution_random(seq, k):
    s = A3.mutate_path(seq)
    assert s.mutate(k).mutate(k).to_json() == s.to_json()


@settings(max_examples=40, deadline=None)
@given(seqs, st.lists(st.integers(0, 2), min_size=6, max_size=6))
def test_normalized_monomial_order_independent(seq, c):
    s = A3.mutate_path(seq)
    base = s.normalized_monomial(c)
    for order in list(permutations(s.indices))[::97]:
        assert s.normalized_monomial(c, order=order) == base


@settings(max_examples=40, deadline=None)
@given(*[st.lists(st.integers(-3, 3), min_size=6, max_size=6)] * 3)
def test_lambda_pair_bilinear(a, ap, b):
    s = A3.mutate(2)
    sa = [x + y for x, y in zip(a, ap)]
    assert s.lambda_pair(sa, b) == s.lambda_pair(a, b) + s.lambda_pair(ap, b)
    assert s.lambda_pair(a, b) == -s.lambda_pair(b, a)
