import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twistedzhu.voa import (
    HEISENBERG,
    Vector,
    alpha,
    basis,
    basis_upto,
    generator_mode,
    l_action,
    mode_action,
    omega,
    partitions,
    vacuum,
)

F = Fraction
SMALL = basis_upto(3)


def sugawara(n, v):
    """L(n) v = 1/2 sum_m :a(m) a(n-m): v, built from generator modes only."""
    out = Vector()
    bound = v.max_weight() + abs(n) + 2
    for m in range(-bound, bound + 1):
        # normal order: creation (negative) modes to the left
        a, b = sorted((m, n - m))
        out = out + generator_mode(a, generator_mode(b, v))
    return out / 2


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_str_forms():
    assert str(alpha(2, 1, 1)) == "a(-2)a(-1)^2|0>"
    assert str(omega() * 4 - vacuum() / 8) == "-1/8*|0> + 2*a(-1)^2|0>"


def test_weights():
    v = alpha(3, 1)
    assert v.weight() == 4 and v.is_homogeneous()
    with pytest.raises(ValueError):
        (alpha(1) + vacuum()).weight()


@pytest.mark.parametrize("v", SMALL, ids=str)
def test_generator_field_is_alpha(v):
    for n in range(-3, 5):
        assert mode_action(alpha(1), n, v) == generator_mode(n, v)


@pytest.mark.parametrize("v", SMALL, ids=str)
def test_virasoro_from_sugawara(v):
    for n in range(-2, 4):
        assert l_action(n, v) == sugawara(n, v)


@pytest.mark.parametrize("v", SMALL, ids=str)
def test_virasoro_relations(v):
    for m in range(-2, 3):
        for n in range(-2, 3):
            lhs = l_action(m, l_action(n, v)) - l_action(n, l_action(m, v))
            rhs = l_action(m + n, v) * (m - n)
            if m + n == 0:
                rhs = rhs + v * F(m**3 - m, 12)
            assert lhs == rhs


def test_omega_values():
    om = omega()
    assert mode_action(om, 1, om) == om * 2
    assert mode_action(om, 3, om) == vacuum() / 2
    assert l_action(1, om).is_zero()
    assert generator_mode(1, alpha(1)) == vacuum()


@pytest.mark.parametrize("u", SMALL, ids=str)
def test_creation_property(u):
    assert mode_action(u, -1, vacuum()) == u
    for n in range(0, 4):
        assert mode_action(u, n, vacuum()).is_zero()
    assert mode_action(vacuum(), -1, u) == u
    assert mode_action(u, -2, vacuum()) == l_action(-1, u)


@pytest.mark.parametrize("u", basis_upto(2), ids=str)
def test_translation_covariance(u):
    du = l_action(-1, u)
    for v in basis_upto(2):
        for n in range(-2, 4):
            assert mode_action(du, n, v) == mode_action(u, n - 1, v) * (-n)


@pytest.mark.parametrize("u", basis_upto(2), ids=str)
def test_l0_grading(u):
    for v in basis_upto(2):
        for n in range(-2, 3):
            out = mode_action(u, n, v)
            if not out.is_zero():
                assert out.weight() == u.weight() + v.weight() - n - 1


def _commutator_case(u, v, w, m, n):
    lhs = mode_action(u, m, mode_action(v, n, w)) - mode_action(v, n, mode_action(u, m, w))
    rhs = Vector()
    for i in range(0, u.weight() + v.weight() + 1):
        c = math.comb(m, i) if m >= 0 else (-1) ** i * math.comb(i - m - 1, i)
        rhs = rhs + mode_action(mode_action(u, i, v), m + n - i, w) * c
    return lhs, rhs


@given(
    st.sampled_from(basis_upto(2)),
    st.sampled_from(basis_upto(2)),
    st.sampled_from(basis_upto(2)),
    st.integers(-2, 2),
    st.integers(-2, 2),
)
@settings(max_examples=80, deadline=None)
def test_commutator_formula(u, v, w, m, n):
    lhs, rhs = _commutator_case(u, v, w, m, n)
    assert lhs == rhs


@given(st.sampled_from(basis_upto(2)), st.sampled_from(basis_upto(2)), st.integers(-2, 3))
@settings(max_examples=60, deadline=None)
def test_skew_symmetry(u, v, n):
    # u_n v = sum_i (-1)^(n+i+1) L(-1)^i/i! v_{n+i} u
    rhs = Vector()
    for i in range(0, u.weight() + v.weight() + 2):
        x = mode_action(v, n + i, u)
        for _ in range(i):
            x = l_action(-1, x)
        rhs = rhs + x * F(-1 if (n + i) % 2 == 0 else 1, math.factorial(i))
    assert mode_action(u, n, v) == rhs


def test_vertex_series_window():
    s = HEISENBERG.vertex_series(alpha(1), alpha(1), (-3, 2))
    assert s.coefficient(-2) == vacuum()
    assert s.coefficient(0) == alpha(1, 1)
    assert s.coefficient(1) == alpha(2, 1)


def test_fractional_mode_rejected():
    with pytest.raises(ValueError):
        mode_action(alpha(1), F(1, 2), vacuum())


def test_basis_sizes():
    assert [len(basis(w)) for w in range(5)] == [1, 1, 2, 3, 5]
