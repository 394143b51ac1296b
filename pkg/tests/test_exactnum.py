from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from twistedzhu.exactnum import (
    CycloScalar,
    ZeroDivisorError,
    cyclotomic_polynomial,
    eta_power,
    rational_binomial,
)

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


def cyclo(k):
    n = len(cyclotomic_polynomial(k)) - 1
    return st.lists(fractions, min_size=n, max_size=n).map(lambda cs: CycloScalar(k, cs))


ks = st.integers(min_value=1, max_value=8)


@pytest.mark.parametrize("k", range(1, 13))
def test_cyclotomic_polynomial_matches_sympy(k):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(k, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(k)) == [Fraction(int(c)) for c in expected]


@pytest.mark.parametrize("k", range(1, 9))
def test_eta_is_primitive_root(k):
    assert eta_power(k, k) == 1
    for e in range(1, k):
        assert eta_power(k, e) != 1
    assert eta_power(k, -1) * eta_power(k, 1) == 1


@pytest.mark.parametrize("k", range(2, 9))
def test_sum_of_roots_vanishes(k):
    total = sum((eta_power(k, e) for e in range(k)), CycloScalar(k))
    assert total == 0


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms(data):
    k = data.draw(ks)
    a, b, c = (data.draw(cyclo(k)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_rational_embedding(data):
    k = data.draw(ks)
    x, y = data.draw(fractions), data.draw(fractions)
    cx = CycloScalar.from_rational(k, x)
    assert cx.is_rational() and cx.to_fraction() == x
    assert cx + y == x + y
    assert cx * y == x * y
    assert hash(cx) == hash(x)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycloScalar(3).inverse()
    assert issubclass(ZeroDivisorError, ZeroDivisionError)


def test_immutable():
    a = eta_power(5, 1)
    with pytest.raises(AttributeError):
        a.coeffs = ()


def test_str():
    assert str(CycloScalar(3, [Fraction(1, 2), Fraction(-1, 2)])) == "1/2 - 1/2*eta"


@given(fractions, st.integers(min_value=0, max_value=8))
def test_rational_binomial_matches_sympy(alpha, m):
    expected = sympy.binomial(sympy.Rational(alpha.numerator, alpha.denominator), m)
    assert rational_binomial(alpha, m) == Fraction(str(sympy.nsimplify(expected)))
