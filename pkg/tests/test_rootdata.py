import pytest
from hypothesis import given, strategies as st

from qclaw.rootdata import (
    CartanDatum,
    CartanError,
    NotReduced,
    Weight,
    beta_sequence,
    bilinear,
    named_cartan,
    parse_matrix,
    parse_word,
    reflect,
    weight_of_var,
    weyl_apply,
)

A2 = named_cartan("A2")
A3 = named_cartan("A3")


def R(*c):
    return Weight.from_root(c)


def test_cartan_validation():
    with pytest.raises(CartanError):
        CartanDatum(((2, -1), (0, 2)))
    with pytest.raises(CartanError):
        CartanDatum(((1, 0), (0, 2)))
    with pytest.raises(CartanError):
        CartanDatum(((2, 1), (1, 2)))
    assert parse_matrix("2,-1;-1,2") == A2


def test_named_types():
    assert named_cartan("D4").a(2, 4) == -1
    assert named_cartan("E6").a(2, 4) == -1
    assert named_cartan("E6").a(1, 2) == 0
    with pytest.raises(CartanError):
        named_cartan("B3")
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("") == ()


def test_reflect_examples():
    w1 = A2.fundamental_weight(1)
    assert reflect(A2, 1, w1) == w1 - A2.simple_root(1)
    assert reflect(A2, 1, R(0, 1)) == R(1, 1)


def test_weyl_apply_examples():
    # s1 s2 alpha_1 = s1(alpha_1 + alpha_2) = alpha_2
    assert weyl_apply(A2, (1, 2), R(1, 0)) == R(0, 1)
    assert weyl_apply(A2, (), R(1, 0)) == R(1, 0)
    w1 = A2.fundamental_weight(1)
    img = weyl_apply(A2, (1, 2, 1), w1)
    assert img == w1 - R(1, 1)
    assert img == weyl_apply(A2, (2, 1, 2), w1)


def test_beta_sequence():
    assert beta_sequence(A2, (1, 2, 1)) == [R(1, 0), R(1, 1), R(0, 1)]
    assert beta_sequence(named_cartan("A1"), (1,)) == [R(1)]
    with pytest.raises(NotReduced):
        beta_sequence(named_cartan("A1"), (1, 1))
    with pytest.raises(NotReduced):
        beta_sequence(A3, (1, 2, 1, 2))


def test_bilinear_examples():
    assert bilinear(A2, R(1, 0), R(1, 0)) == 2
    assert bilinear(A2, R(1, 0), R(0, 1)) == -1
    assert bilinear(A2, R(1, 1), R(1, 1)) == 2
    assert bilinear(A2, R(1, 0), A2.fundamental_weight(1)) == 1


def test_weight_of_var_examples():
    w = (1, 2, 1)
    assert weight_of_var(A2, w, 1) == R(-1, 0)
    assert weight_of_var(A2, w, 2) == R(-1, -1)
    assert weight_of_var(A2, w, 3) == R(-1, -1)


WORDS = [(A2, (1, 2, 1)), (A3, (1, 2, 1, 3, 2, 1)), (A3, (1, 2, 3, 1, 2, 1)), (A3, (2, 1, 3, 2)),
         (named_cartan("D4"), (1, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4, 2))]


@pytest.mark.parametrize("cd,word", WORDS)
def test_beta_positive_distinct_and_weights_nonpositive(cd, word):
    betas = beta_sequence(cd, word)
    assert len(set(betas)) == len(word)
    assert all(b.is_root and all(x >= 0 for x in b.root) for b in betas)
    for k in range(1, len(word) + 1):
        wt = weight_of_var(cd, word, k)
        assert wt.is_root and all(x <= 0 for x in wt.root)


roots3 = st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(tuple)
words3 = st.lists(st.integers(1, 3), max_size=6).map(tuple)


@given(roots3, roots3, words3)
def test_weyl_action_preserves_form(x, y, w):
    a, b = R(*x), R(*y)
    assert bilinear(A3, weyl_apply(A3, w, a), weyl_apply(A3, w, b)) == bilinear(A3, a, b)


@given(roots3, st.integers(1, 3))
def test_reflect_is_involution(x, i):
    lam = R(*x) + A3.fundamental_weight(2)
    assert reflect(A3, i, reflect(A3, i, lam)) == lam
