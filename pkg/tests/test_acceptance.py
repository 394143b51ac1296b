"""Acceptance gate: one test per criterion, all comparisons exact.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import functools
import io
import json
import math
import random
from fractions import Fraction

from twistedzhu.cli import main
from twistedzhu.delta import conjugation_check, recompose_exponential, recompose_flow, solve_aj
from twistedzhu.exactnum import CycloScalar
from twistedzhu.iso import (
    phi_tensor,
    psi,
    solve_eta_system,
    star_chain_sides,
    verify_circ_chain,
)
from twistedzhu.lincomb import LinComb
from twistedzhu.series import change_of_var_residues, geometric_identity_check, circ_chain_rational_check
from twistedzhu.suites import random_change_of_var_case
from twistedzhu.tensor import circ_g, eigen_one_tensor, orbit_sum, tensor_vacuum
from twistedzhu.voa import basis, basis_upto, omega, vacuum

F = Fraction
KS = (2, 3)


@functools.lru_cache(maxsize=None)
def table(k):
    return solve_aj(k, 12)


def pairs(max_weight=3):
    vecs = basis_upto(max_weight)
    return [(u, v) for u in vecs for v in vecs]


def test_criterion_01_aj_solver():
    for k in range(1, 7):
        a = solve_aj(k, 12).a
        target = [F(0)] + [F(math.comb(k, m), k) for m in range(1, 14)]
        assert recompose_exponential(a, 13) == target
        assert recompose_flow(a, 13) == target
    for k in range(1, 9):
        t = solve_aj(k, 2)
        assert t.coefficient(1) == F(-(k - 1), 2)
        assert t.coefficient(2) == F(k * k - 1, 12)


def test_criterion_02_rational_identity():
    assert all(circ_chain_rational_check(k) for k in range(1, 9))


def test_criterion_03_geometric_sum():
    assert all(geometric_identity_check(k) for k in range(1, 9))


def test_criterion_04_root_of_unity_system():
    for k in range(2, 8):
        one = CycloScalar.from_rational(k, 1)
        us = [LinComb({f"u{t}": one}) for t in range(1, k)]
        assert solve_eta_system(us, k).satisfies(us)


def test_criterion_05_change_of_variables():
    rng = random.Random(0)
    for _ in range(100):
        g, f = random_change_of_var_case(rng)
        left, right = change_of_var_residues(g, f)
        assert left == right


def test_criterion_06_conjugation_formula():
    bad = [(k, str(u), str(v)) for k in KS for u, v in pairs() if not conjugation_check(u, v, k, table(k), 6)]
    assert not bad


def test_criterion_07_circ_chain():
    bad = [(k, str(u), str(v)) for k in KS for u, v in pairs() if not verify_circ_chain(u, v, k, table(k))[0]]
    assert not bad


def test_criterion_08_star_chain():
    for k in KS:
        for u, v in pairs():
            lhs, rhs = star_chain_sides(u, v, k, table(k))
            assert lhs == rhs, (k, str(u), str(v))
    shifts = {2: F(1, 16), 3: F(1, 9)}
    for k, shift in shifts.items():
        got = phi_tensor(orbit_sum(omega(), k), table(k))
        assert got == omega() / k + vacuum() * shift
        a2 = table(k).coefficient(2)
        assert a2 / (2 * k) == shift == F(k * k - 1, 24 * k)


def test_criterion_09_inverse_maps():
    for k in KS:
        t = table(k)
        for u in basis_upto(4):
            assert phi_tensor(psi(u, k, t), t) == u
            w = orbit_sum(u, k)
            assert psi(phi_tensor(w, t), k, t) == w


def test_criterion_10_twisted_eigenspace():
    for k in KS:
        vac = tensor_vacuum(k)
        for w in range(1, 4):
            for u in basis(w):
                for r in range(1, k):
                    U = eigen_one_tensor(u, r, k)
                    assert circ_g(U, vac) == U


def _verify(*argv):
    out = io.StringIO()
    code = main(["verify", "--k", "2", "3", "--max-weight", "3", "--order", "6", "--json", *argv], out=out)
    return code, json.loads(out.getvalue())


def _failing(doc, prefix):
    return [r["id"] for r in doc["records"] if r["status"] == "fail" and r["id"].startswith(prefix)]


def test_criterion_11_fault_injection():
    code, doc = _verify("--suite", "conjugation", "--corrupt-aj", "2")
    assert code == 1
    assert _failing(doc, "conjugation.")
    code, doc = _verify("--suite", "main", "--corrupt-aj", "2")
    assert code == 1
    failing = _failing(doc, "main.")
    assert any(".circ." in i for i in failing)
    assert any(".star." in i for i in failing)
