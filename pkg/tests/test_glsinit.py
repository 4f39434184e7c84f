import pytest

from qclaw.glsinit import (
    ConventionMismatch,
    btilde_from_lambda,
    certify,
    exchangeable_indices,
    frozen_indices,
    initial_exchange_matrix,
    initial_lambda,
    initial_seed,
    initial_seed_data,
    kminus,
    kplus,
    letters,
    matrix_rank,
    weight_matrix,
)
from qclaw.rootdata import NotReduced, bilinear, named_cartan, weight_of_var, weyl_apply

A1, A2, A3 = (named_cartan(f"A{n}") for n in (1, 2, 3))

WORDS = [
    (A2, (1, 2, 1)),
    (A2, (2, 1, 2)),
    (A3, (1, 2, 1, 3, 2, 1)),
    (A3, (1, 2, 3, 1, 2, 1)),
    (A3, (2, 1, 3, 2)),
    (named_cartan("A4"), (1, 2, 1, 3, 2, 4)),
    (named_cartan("D4"), (1, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4, 2)),
]


def test_kplus_kminus():
    w = (1, 2, 1)
    assert [kplus(w, k) for k in (1, 2, 3)] == [3, 4, 4]
    assert [kminus(w, k) for k in (1, 2, 3)] == [0, 0, 1]
    assert kplus((1,), 1) == 2 and frozen_indices((1,)) == (1,)
    w = (1, 2, 1, 3, 2, 1)
    for k in range(1, 7):
        if kminus(w, k):
            assert kplus(w, kminus(w, k)) == k
    assert exchangeable_indices(w) == (1, 2, 3)
    assert frozen_indices(w) == (4, 5, 6)


def test_a2_data():
    w = (1, 2, 1)
    assert initial_exchange_matrix(A2, w) == ((0,), (-1,), (1,))
    lam = initial_lambda(A2, w)
    assert (lam[0][1], lam[0][2], lam[1][2]) == (1, -1, 0)
    assert weight_matrix(A2, w) == ((-1, -1, -1), (0, -1, -1))
    assert btilde_from_lambda([lam[0]], weight_matrix(A2, w)) == ((0,), (-1,), (1,))
    s = initial_seed(A2, w)
    assert s.exchangeable == (1,) and s.frozen == (2, 3)
    assert s.L == ((0, -1, 1), (1, 0, 0), (-1, 0, 0))


def test_a1_data():
    assert initial_exchange_matrix(A1, (1,)) == ((),)
    assert weight_matrix(A1, (1,)) == ((-1,),)
    s = initial_seed(A1, (1,))
    assert s.exchangeable == () and s.frozen == (1,)
    with pytest.raises(NotReduced):
        initial_seed(A1, (1, 1))


def test_certification_catches_sign_flip():
    w = (1, 2, 1, 3, 2, 1)
    B = initial_exchange_matrix(A3, w)
    flipped = tuple(tuple(-x for x in r) for r in B)
    with pytest.raises(ConventionMismatch):
        certify(A3, w, flipped)


@pytest.mark.parametrize("cd,word", WORDS)
def test_two_constructions_agree(cd, word):
    data = initial_seed_data(cd, word)
    ex = exchangeable_indices(word)
    lam = data.Lambda
    assert all(lam[i][i] == 0 and lam[i][j] == -lam[j][i] for i in range(len(word)) for j in range(len(word)))
    assert btilde_from_lambda([lam[k - 1] for k in ex], data.D) == data.seed.Btilde
    assert matrix_rank(data.D) == len(letters(word))
    B = data.seed.Btilde
    for i in range(len(word)):
        for jc, j in enumerate(ex):
            assert sum(lam[i][t] * B[t][jc] for t in range(len(word))) == (-2 if i + 1 == j else 0)
    for t, row in zip(data.Iprime, data.D):
        for j, x in enumerate(row, 1):
            assert weight_of_var(cd, word, j).root[t - 1] == x


@pytest.mark.parametrize("cd,word", WORDS)
def test_frozen_columns_of_lambda(cd, word):
    # for frozen t the formula with the full word holds for every s, above or below t
    lam = initial_lambda(cd, word)
    for t in frozen_indices(word):
        varpi = cd.fundamental_weight(word[t - 1])
        u = weyl_apply(cd, word, varpi) + varpi
        for s in range(1, len(word) + 1):
            assert lam[s - 1][t - 1] == bilinear(cd, weight_of_var(cd, word, s), u)


def test_commutation_move():
    # 1,2,1,3,2,1 and 1,2,3,1,2,1 differ by swapping positions 3 and 4 (letters 1 and 3 commute)
    w1, w2 = (1, 2, 1, 3, 2, 1), (1, 2, 3, 1, 2, 1)
    s1, s2 = initial_seed(A3, w1), initial_seed(A3, w2)
    perm = {1: 1, 2: 2, 3: 4, 4: 3, 5: 5, 6: 6}
    n = 6
    for i in range(1, n + 1):
        assert s1.weights[i - 1] == s2.weights[perm[i] - 1]
        for j in range(1, n + 1):
            assert s1.L[i - 1][j - 1] == s2.L[perm[i] - 1][perm[j] - 1]
    for i in range(1, n + 1):
        for j in s1.exchangeable:
            assert s1.b(i, j) == s2.b(perm[i], perm[j])
