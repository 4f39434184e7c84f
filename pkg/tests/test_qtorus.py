from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qclaw.qring import NotDivisible, QInt
from qclaw.qtorus import (
    QuantumTorus,
    TorusElement,
    bar,
    divide_left_exact,
    monomial_product_exponent,
    mul,
    specialize_q1,
)

L_A2 = ((0, -1, 1), (1, 0, 0), (-1, 0, 0))
T = QuantumTorus(L_A2)
X = TorusElement.monomial
v = QInt.vpow


def test_rejects_non_skew():
    with pytest.raises(ValueError):
        QuantumTorus(((0, 1), (1, 0)))


def test_product_exponent_examples():
    assert monomial_product_exponent(L_A2, (1, 2, 0), (1, 2, 0)) == 0
    assert monomial_product_exponent(L_A2, (1, 0, 0), (0, 1, 0)) == Fraction(-1, 2)
    assert monomial_product_exponent(L_A2, (0, 0, 0), (3, -1, 2)) == 0


def test_mul_examples():
    assert mul(L_A2, X((1, 0, 0)), X((0, 1, 0))) == X((1, 1, 0), v(-1))
    f = X((1, 0, 0), v(2)) + X((0, -1, 3))
    assert T.mul(f, TorusElement.one(3)) == f
    assert T.mul(X((1, 0, 0)), X((-1, 0, 0))) == TorusElement.one(3)


def test_bar_examples():
    a = (1, -2, 0)
    assert bar(X(a)) == X(a)
    assert bar(X(a, v(1) + v(-1))) == X(a, v(1) + v(-1))
    assert bar(X(a, v(1))) == X(a, v(-1))


def test_divide_examples():
    a, b = (1, 0, 2), (0, -1, 1)
    prod = X(tuple(x + y for x, y in zip(a, b)), v(T.pairing(a, b)))
    assert divide_left_exact(L_A2, prod, X(a)) == X(b)
    # the A2 exchange relation: x1 x1' = v X^(0,0,1) + v^-1 X^(0,1,0)
    rhs = X((0, 0, 1), v(1)) + X((0, 1, 0), v(-1))
    new = T.divide_left(rhs, X((1, 0, 0)))
    assert new == X((-1, 0, 1)) + X((-1, 1, 0))
    assert T.mul(X((1, 0, 0)), new) == rhs


def test_divide_failure():
    g = X((1, 0, 0)) + X((0, 1, 0))
    with pytest.raises(NotDivisible):
        T.divide_left(X((0, 0, 1)), g)
    with pytest.raises(NotDivisible):
        T.divide_left(X((0, 0, 0)), X((0, 0, 0), 2))


def test_specialize_examples():
    a = (2, 0, -1)
    assert specialize_q1(X(a, v(3))) == {a: 1}
    assert specialize_q1(X(a) + X(a, v(1) - 1)) == {a: 1}
    assert specialize_q1(TorusElement()) == {}


def test_json_roundtrip():
    f = X((1, 0, 0), v(2) + 3) + X((-1, 2, 0), v(-1))
    assert TorusElement.from_json_obj(f.to_json_obj()) == f
    assert f.to_json() == TorusElement.from_json_obj(f.to_json_obj()).to_json()


# random elements in a 3-variable torus with a random skew form
exps = st.tuples(*[st.integers(-2, 2)] * 3)
coeffs = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), min_size=1, max_size=2).map(QInt)
elements = st.dictionaries(exps, coeffs, max_size=3).map(TorusElement)
skew = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)).map(
    lambda t: ((0, t[0], t[1]), (-t[0], 0, t[2]), (-t[1], -t[2], 0))
)


@given(skew, elements, elements, elements)
def test_associativity(L, f, g, h):
    T = QuantumTorus(L)
    assert T.mul(T.mul(f, g), h) == T.mul(f, T.mul(g, h))


@given(skew, exps, exps)
def test_monomial_commutation(L, a, b):
    T = QuantumTorus(L)
    ab, ba = T.mul(X(a), X(b)), T.mul(X(b), X(a))
    assert ab.support() == ba.support()
    assert ab == ba.shift(2 * T.pairing(a, b))


@given(elements)
def test_bar_is_additive_involution(f):
    assert f.bar().bar() == f
    assert (f + f.shift(1)).bar() == f.bar() + f.shift(1).bar()


@settings(max_examples=60)
@given(skew, elements, elements.filter(bool))
def test_divide_undoes_left_multiplication(L, h, g):
    T = QuantumTorus(L)
    assert T.divide_left(T.mul(g, h), g) == h


@given(skew, elements, elements)
def test_specialize_is_homomorphism(L, f, g):
    T = QuantumTorus(L)
    lhs = specialize_q1(T.mul(f, g))
    rhs: dict = {}
    for a, x in specialize_q1(f).items():
        for b, y in specialize_q1(g).items():
            e = tuple(p + q for p, q in zip(a, b))
            rhs[e] = rhs.get(e, 0) + x * y
    assert lhs == {e: c for e, c in rhs.items() if c}
