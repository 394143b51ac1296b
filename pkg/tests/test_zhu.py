from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twistedzhu.series import binomial_series, residue
from twistedzhu.voa import HEISENBERG, alpha, basis_upto, l_action, omega, vacuum
from twistedzhu.zhu import (
    OvWitness,
    circ,
    omega_commutator_witness,
    residue_product,
    skew_witness,
    star,
    witness_eval,
)

F = Fraction
SMALL = basis_upto(3)
PAIRS = [(u, v) for u in basis_upto(2) for v in basis_upto(2)]


def series_residue(u, v, gamma, p):
    """Res_z Y(u,z) v (1+z)^gamma z^-p through the series module."""
    lo = -(u.weight() + v.weight()) - 1
    y = HEISENBERG.vertex_series(u, v, (lo, p + 1))
    return residue((y * binomial_series(gamma, p + 1 - lo)).shift(-p))


def test_examples():
    a = alpha(1)
    assert circ(a, vacuum()) == alpha(1) + alpha(2)
    assert circ(a, a) == alpha(1, 1) + alpha(2, 1)
    assert star(a, a) == alpha(1, 1)
    assert star(omega(), vacuum()) == omega()
    assert star(vacuum(), alpha(3)) == alpha(3)


@pytest.mark.parametrize("u,v", PAIRS, ids=str)
def test_products_match_series_residue(u, v):
    w = u.weight()
    assert circ(u, v) == series_residue(u, v, w, 2)
    assert star(u, v) == series_residue(u, v, w, 1)
    assert residue_product(u, v, F(1, 3), 1) == series_residue(u, v, F(1, 3), 1)


@pytest.mark.parametrize("u", SMALL, ids=str)
def test_circ_with_vacuum(u):
    assert circ(u, vacuum()) == l_action(-1, u) + l_action(0, u)
    assert star(vacuum(), u) == u


vectors = st.lists(
    st.tuples(st.sampled_from(basis_upto(2)), st.integers(-3, 3)), min_size=1, max_size=3
).map(lambda ts: sum((v * c for v, c in ts), vacuum() * 0))


@given(vectors, vectors, vectors, st.integers(-4, 4))
@settings(max_examples=40, deadline=None)
def test_bilinear(u1, u2, v, c):
    assert star(u1 + u2 * c, v) == star(u1, v) + star(u2, v) * c
    assert circ(v, u1 + u2 * c) == circ(v, u1) + circ(v, u2) * c


@pytest.mark.parametrize("u,v", PAIRS, ids=str)
def test_skew_witness(u, v):
    target = star(v, u) - residue_product(u, v, u.weight() - 1, 1)
    assert witness_eval(skew_witness(u, v)) == target


@pytest.mark.parametrize("v", SMALL, ids=str)
def test_omega_central_mod_o(v):
    w = omega_commutator_witness(v, omega())
    assert witness_eval(w) == star(omega(), v) - star(v, omega())


def test_witness_requires_homogeneous_left():
    with pytest.raises(ValueError):
        OvWitness(((alpha(1) + vacuum(), vacuum(), 1),))


def test_witness_algebra():
    w = OvWitness(((alpha(1), vacuum(), F(2)),))
    assert len(w + w) == 2
    assert witness_eval(w.scaled(F(1, 2))) == circ(alpha(1), vacuum())
