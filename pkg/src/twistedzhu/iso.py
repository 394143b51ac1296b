"""The isomorphism A_g(V^{(x)k}) -> A(V), [sum_a u^a] -> [k Delta_k(1) u].

Orbit sums ``ubar = sum_a u^a`` span A_g(V^{(x)k}).  A product of two orbit
sums is reduced to a single orbit sum ``sum_a w^a`` modulo O_g(V^{(x)k}); the
congruences come from the eigenvector products

    (sum_a eta^{-(a-1)s} u^a) o_g (sum_b eta^{(b-1)s} v^b)
        = sum_i eta^{is} x_i - u_s,

with ``x_i = sum_m x_{u,v}^{m,m+i}`` and ``u_s = -sum_b (v'_s)^b``, solved for
the ``x_i`` by the closed-form inverse of the root-of-unity system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .delta import AjTable, delta1, delta1_inv, exp_weighted_l
from .exactnum import eta_power
from .tensor import (
    TensorVector,
    circ_g,
    eigen_one_tensor,
    n_tensor,
    orbit_sum,
    slot_vector,
)
from .voa import Vector, l_action
from .zhu import OvWitness, circ, residue_product, star, witness_eval

__all__ = [
    "EtaSystemSolution",
    "ReductionResult",
    "solve_eta_system",
    "eigen_pair_relation",
    "reduce_star",
    "reduce_circ",
    "star_reduction_witness",
    "circ_reduction_witness",
    "orbit_representative",
    "phi",
    "phi_tensor",
    "psi",
    "circ_chain_sides",
    "verify_circ_chain",
    "star_chain_sides",
    "verify_star_chain",
]


@dataclass(frozen=True)
class EtaSystemSolution:
    """x_1..x_{k-1} with sum_i eta^{is} x_i = u_s for s = 1..k-1."""

    k: int
    x: tuple

    def substitute(self) -> list:
        """Left-hand sides sum_i eta^{is} x_i for s = 1..k-1."""
        out = []
        for s in range(1, self.k):
            acc = 0
            for i, xi in enumerate(self.x, start=1):
                acc = acc + xi * eta_power(self.k, i * s)
            out.append(acc)
        return out

    def satisfies(self, rhs) -> bool:
        return all(a == b for a, b in zip(self.substitute(), rhs, strict=True))


def solve_eta_system(us, k: int) -> EtaSystemSolution:
    """Closed-form x_i = sum_t (1/k)(eta^{-it} - 1) u_t.

    ``us`` holds u_1..u_{k-1}; entries may be anything that supports
    addition and multiplication by elements of Q(eta_k).
    """
    if k < 2:
        raise ValueError("the system needs k >= 2")
    us = list(us)
    if len(us) != k - 1:
        raise ValueError(f"expected {k - 1} right-hand sides, got {len(us)}")
    inv_k = Fraction(1, k)
    xs = []
    for i in range(1, k):
        acc = 0
        for t, ut in enumerate(us, start=1):
            c = (eta_power(k, -i * t) - 1) * inv_k
            acc = acc + ut * c
        xs.append(acc)
    return EtaSystemSolution(k, tuple(xs))


@dataclass(frozen=True)
class ReductionResult:
    """One-tensor representative w with [product of orbit sums] = [sum_a w^a]."""

    representative: Vector
    corrections: dict = field(default_factory=dict)


def _gamma(u: Vector, t: int, k: int, shift: int = -1) -> Fraction:
    return Fraction(u.weight() + shift) + Fraction(t, k)


def eigen_pair_relation(u: Vector, v: Vector, k: int, s: int):
    """Both sides of U_s o_g V_s = sum_i eta^{is} x_i - u_s.

    U_s = sum_a eta^{-(a-1)s} u^a, V_s = sum_b eta^{(b-1)s} v^b.  The left
    side is computed with :func:`circ_g`; the right side is assembled from
    two-tensor vectors x_{u,v}^{m,m+i} and one-tensor corrections.
    """
    U = eigen_one_tensor(u, s, k)
    V = eigen_one_tensor(v, -s, k)
    lhs = circ_g(U, V)
    rhs = TensorVector(k)
    for i in range(1, k):
        xi = TensorVector(k)
        for m in range(1, k + 1):
            xi = xi + n_tensor([u, v], [m, (m + i - 1) % k + 1], k)
        rhs = rhs + xi * eta_power(k, i * s)
    vprime = residue_product(u, v, _gamma(u, s, k), 1)
    rhs = rhs + orbit_sum(vprime, k)
    return lhs, rhs


def reduce_star(u: Vector, v: Vector, k: int, table: AjTable | None = None) -> ReductionResult:
    """Representative of ubar *_g vbar:

        w = u*v + sum_{t=1}^{k-1} Res_z Y(u,z) v (1+z)^{wt u - 1 + t/k} / z.
    """
    if u.is_zero() or v.is_zero():
        return ReductionResult(Vector())
    w = star(u, v)
    corr = {}
    for t in range(1, k):
        c = residue_product(u, v, _gamma(u, t, k), 1)
        corr[t] = c
        w = w + c
    return ReductionResult(w, corr)


def reduce_circ(u: Vector, v: Vector, k: int, table: AjTable | None = None) -> ReductionResult:
    """Representative of ubar o_g vbar:

        w = u o v - sum_t Res_z Y(u,z) v [(t/k)(1+z)^{wt u-1+t/k}/z - (1+z)^{wt u+t/k}/z^2].

    The y_i cross terms carry u_{-2}1 = L(-1)u, folded in through
    Res Y(L(-1)u, z) v s(z) = -Res Y(u, z) v s'(z).
    """
    if u.is_zero() or v.is_zero():
        return ReductionResult(Vector())
    w = circ(u, v)
    corr = {}
    for t in range(1, k):
        first = residue_product(u, v, _gamma(u, t, k), 1) * Fraction(t, k)
        second = residue_product(u, v, _gamma(u, t, k, 0), 2)
        c = second - first
        corr[t] = c
        w = w + c
    return ReductionResult(w, corr)


def _eigen_circ_sum(u: Vector, v: Vector, k: int) -> TensorVector:
    """sum_t U_t o_g V_t, an element of O_g(V^{(x)k})."""
    out = TensorVector(k)
    if u.is_zero() or v.is_zero():
        return out
    for t in range(1, k):
        out = out + circ_g(eigen_one_tensor(u, t, k), eigen_one_tensor(v, -t, k))
    return out


def star_reduction_witness(u: Vector, v: Vector, k: int) -> TensorVector:
    """ubar *_g vbar - sum_a w^a, written as an explicit element of O_g.

    Equals -sum_t U_t o_g V_t; returns that combination (computed by circ_g),
    so callers can compare it with the direct difference.
    """
    return -_eigen_circ_sum(u, v, k)


def circ_reduction_witness(u: Vector, v: Vector, k: int) -> TensorVector:
    """ubar o_g vbar - sum_a w^a as -wt(u) sum_t U_t o_g V_t - sum_t (L(-1)U)_t o_g V_t."""
    if u.is_zero() or v.is_zero():
        return TensorVector(k)
    out = _eigen_circ_sum(u, v, k) * (-u.weight())
    return out - _eigen_circ_sum(l_action(-1, u), v, k)


def orbit_representative(t: TensorVector) -> Vector:
    """w with t = sum_a w^a; ValueError if t is not such an orbit sum."""
    k = t.k
    w = slot_vector(t, 1)
    vac_key = ((),) * k
    vac = t.coefficient(vac_key)
    # the all-vacuum monomial is shared by every slot
    w = w - Vector({(): w.coefficient(())}) + Vector({(): Fraction(1, k) * vac if vac else 0})
    if orbit_sum(w, k) != t:
        raise ValueError("tensor vector is not an orbit sum of one-tensor vectors")
    return w


def phi(w: Vector, k: int, table: AjTable) -> Vector:
    """phi on a one-tensor representative: k Delta_k(1) w."""
    return delta1(w, k, table) * k


def phi_tensor(t: TensorVector, table: AjTable) -> Vector:
    return phi(orbit_representative(t), t.k, table)


def psi(u: Vector, k: int, table: AjTable) -> TensorVector:
    """(1/k) sum_a (Delta_k(1)^{-1} u)^a."""
    return orbit_sum(delta1_inv(u, k, table), k) * Fraction(1, k)


def circ_chain_sides(u: Vector, v: Vector, k: int, table: AjTable):
    """(A, B, witness) for the circ product chain.

    A = phi(representative of ubar o_g vbar).
    B = k^{1 - wt u} sum_p Res_z Y(vec_p, z) Delta v (1+z)^{wt u - m_p} / z^2
    over the parts of e^{sum a_j (1+z)^{-j} L(j)} u.  Each summand is
    vec_p o Delta v because wt vec_p = wt u - m_p, which is what the witness
    records.
    """
    A = phi(reduce_circ(u, v, k, table).representative, k, table)
    if u.is_zero() or v.is_zero():
        return A, Vector(), OvWitness()
    wu = u.weight()
    dv = delta1(v, k, table)
    scale = Fraction(k) ** (1 - wu)
    B = Vector()
    triples = []
    for vec, m in exp_weighted_l(u, table):
        B = B + residue_product(vec, dv, wu - m, 2) * scale
        if vec.max_weight() > 0:
            triples.append((vec, dv, scale))
    return A, B, OvWitness(tuple(triples))


def verify_circ_chain(u: Vector, v: Vector, k: int, table: AjTable):
    """(ok, witness): phi(ubar o_g vbar) equals the closed form and the
    witness re-evaluates to it, so it lies in O(V)."""
    A, B, witness = circ_chain_sides(u, v, k, table)
    ok = A == B and witness_eval(witness) == A
    return ok, witness


def star_chain_sides(u: Vector, v: Vector, k: int, table: AjTable):
    """(phi(ubar *_g vbar), (k Delta u) * (k Delta v))."""
    lhs = phi(reduce_star(u, v, k, table).representative, k, table)
    rhs = star(phi(u, k, table), phi(v, k, table))
    return lhs, rhs


def verify_star_chain(u: Vector, v: Vector, k: int, table: AjTable) -> bool:
    lhs, rhs = star_chain_sides(u, v, k, table)
    return lhs == rhs
