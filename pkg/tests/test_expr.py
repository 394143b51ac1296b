from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistedzhu.expr import ParseError, parse_tensor, parse_vector
from twistedzhu.tensor import pure_tensor
from twistedzhu.voa import Vector, alpha, basis_upto, vacuum

monos = st.sampled_from(basis_upto(4))
coeffs = st.builds(Fraction, st.integers(-7, 7), st.integers(1, 5))
vectors = st.lists(st.tuples(monos, coeffs), max_size=4).map(
    lambda ts: sum((v * c for v, c in ts), Vector())
).filter(lambda v: not v.is_zero())


def test_examples():
    assert parse_vector("|0>") == vacuum()
    assert parse_vector("a(-1)|0>") == alpha(1)
    assert parse_vector("3/2 * a(-2)a(-1)^2|0> - |0>") == alpha(2, 1, 1) * Fraction(3, 2) - vacuum()
    assert parse_vector(" a( -1 ) a(-1) |0> ") == alpha(1, 1)


@given(vectors)
def test_vector_roundtrip(v):
    assert parse_vector(str(v)) == v


@given(vectors, vectors)
def test_tensor_roundtrip(u, v):
    t = pure_tensor([u, v])
    assert parse_tensor(str(t)) == t


@pytest.mark.parametrize(
    "text,pos",
    [("", 0), ("a(1)|0>", 0), ("a(-1)", 5), ("1/0 |0>", 2), ("|0> $", 4), ("a(-0)|0>", 0)],
)
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_vector(text)
    assert info.value.pos == pos


def test_tensor_arity_checked():
    with pytest.raises(ParseError):
        parse_tensor("[|0> | |0>]", k=3)
