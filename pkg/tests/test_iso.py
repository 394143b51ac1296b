from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twistedzhu.delta import solve_aj
from twistedzhu.exactnum import CycloScalar
from twistedzhu.iso import (
    circ_reduction_witness,
    eigen_pair_relation,
    orbit_representative,
    phi,
    phi_tensor,
    psi,
    reduce_circ,
    reduce_star,
    solve_eta_system,
    star_reduction_witness,
    verify_circ_chain,
    verify_star_chain,
)
from twistedzhu.tensor import circ_g, n_tensor, orbit_sum, star_g, tensor_vacuum
from twistedzhu.voa import alpha, basis_upto, omega, vacuum
from twistedzhu.zhu import star

F = Fraction
TABLES = {k: solve_aj(k, 8) for k in (2, 3)}


@given(st.integers(2, 7), st.data())
@settings(max_examples=30, deadline=None)
def test_eta_system_numeric(k, data):
    us = [
        CycloScalar(k, [F(data.draw(st.integers(-9, 9)), data.draw(st.integers(1, 5)))])
        for _ in range(k - 1)
    ]
    sol = solve_eta_system(us, k)
    assert sol.satisfies(us)


def test_eta_system_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_eta_system([], 1)
    with pytest.raises(ValueError):
        solve_eta_system([1, 2], 2)


def test_eta_system_k2():
    # x_1 * eta = u_1 with eta = -1
    sol = solve_eta_system([F(3)], 2)
    assert sol.x[0] == -3


def test_reductions():
    assert reduce_star(alpha(1), alpha(1), 2).representative == alpha(1, 1) * 2 - vacuum() / 8
    assert reduce_star(vacuum(), alpha(2), 3).representative == alpha(2) * 3
    assert reduce_circ(vacuum(), alpha(2), 3).representative.is_zero()


@pytest.mark.parametrize("k", [2, 3])
def test_reduction_witnesses(k):
    for u in basis_upto(2):
        for v in basis_upto(2):
            ub, vb = orbit_sum(u, k), orbit_sum(v, k)
            ws = orbit_sum(reduce_star(u, v, k).representative, k)
            assert star_g(ub, vb) - ws == star_reduction_witness(u, v, k)
            wc = orbit_sum(reduce_circ(u, v, k).representative, k)
            assert circ_g(ub, vb) - wc == circ_reduction_witness(u, v, k)


@pytest.mark.parametrize("k", [2, 3])
def test_eigen_pair_relation(k):
    for u in basis_upto(2):
        for v in basis_upto(2):
            for s in range(1, k):
                lhs, rhs = eigen_pair_relation(u, v, k, s)
                assert lhs == rhs


def test_orbit_representative():
    assert orbit_representative(orbit_sum(alpha(2, 1), 3)) == alpha(2, 1)
    assert orbit_representative(tensor_vacuum(2)) == vacuum() / 2
    with pytest.raises(ValueError):
        orbit_representative(n_tensor([alpha(1)], [1], 2))


def test_phi_known_values():
    assert phi(omega(), 2, TABLES[2]) == alpha(1, 1) / 4 + vacuum() / 16
    assert phi(omega(), 3, TABLES[3]) == alpha(1, 1) / 6 + vacuum() / 9
    for k, t in TABLES.items():
        assert phi_tensor(tensor_vacuum(k), t) == vacuum()


@pytest.mark.parametrize("k", [2, 3])
def test_roundtrips(k):
    t = TABLES[k]
    for u in basis_upto(4):
        assert phi_tensor(psi(u, k, t), t) == u
        assert psi(phi_tensor(orbit_sum(u, k), t), k, t) == orbit_sum(u, k)


@pytest.mark.parametrize("k", [2, 3])
def test_product_chains(k):
    t = TABLES[k]
    for u in basis_upto(2):
        for v in basis_upto(2):
            ok, witness = verify_circ_chain(u, v, k, t)
            assert ok
            assert verify_star_chain(u, v, k, t)


def test_chains_detect_corruption():
    t = TABLES[2].corrupted(2)
    bad = [
        (u, v)
        for u in basis_upto(2)
        for v in basis_upto(2)
        if not verify_star_chain(u, v, 2, t)
    ]
    assert bad


def test_phi_is_multiplicative_on_a_sample():
    # [a] *_g [a] maps to (k Delta a) * (k Delta a)
    k, t = 2, TABLES[2]
    w = reduce_star(alpha(1), alpha(1), k).representative
    assert phi(w, k, t) == star(phi(alpha(1), k, t), phi(alpha(1), k, t))
