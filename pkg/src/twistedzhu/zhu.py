"""Zhu's products on V and constructive certificates of membership in O(V)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import rational_binomial
from .voa import Vector, l_action, mode_action, vacuum

__all__ = [
    "OvWitness",
    "residue_product",
    "circ",
    "star",
    "witness_eval",
    "skew_witness",
    "omega_commutator_witness",
]


def residue_product(u: Vector, v: Vector, gamma, p: int) -> Vector:
    """Res_z Y(u, z) v (1+z)^gamma z^(-p) = sum_j C(gamma, j) u_{j-p} v.

    ``gamma`` is applied to every component of ``u``; callers that need a
    weight-dependent exponent split ``u`` first.
    """
    if u.is_zero() or v.is_zero():
        return Vector()
    top = u.max_weight() + v.max_weight() - 1
    out = Vector()
    for j in range(0, top + p + 1):
        b = rational_binomial(gamma, j)
        if b:
            out = out + mode_action(u, j - p, v) * b
    return out


def circ(u: Vector, v: Vector) -> Vector:
    """u o v = Res_z Y(u,z) v (1+z)^wt(u) / z^2, extended linearly in u."""
    out = Vector()
    for w, comp in u.components().items():
        out = out + residue_product(comp, v, w, 2)
    return out


def star(u: Vector, v: Vector) -> Vector:
    """u * v = Res_z Y(u,z) v (1+z)^wt(u) / z, each weight component of u
    using its own weight."""
    out = Vector()
    for w, comp in u.components().items():
        out = out + residue_product(comp, v, w, 1)
    return out


@dataclass(frozen=True)
class OvWitness:
    """Certificate sum_i c_i (left_i o right_i) for a vector of O(V)."""

    triples: tuple = ()

    def __post_init__(self):
        for left, _, _ in self.triples:
            if not left.is_homogeneous():
                raise ValueError("witness left factors must be homogeneous")

    def __add__(self, other: "OvWitness") -> "OvWitness":
        return OvWitness(self.triples + other.triples)

    def scaled(self, c) -> "OvWitness":
        return OvWitness(tuple((a, b, x * c) for a, b, x in self.triples if x * c))

    def __len__(self):
        return len(self.triples)


def witness_eval(w: OvWitness) -> Vector:
    out = Vector()
    for left, right, c in w.triples:
        out = out + circ(left, right) * c
    return out


def _translation_witness(x: Vector, i: int) -> OvWitness:
    """Witness for L(-1)^i x / i! - C(-wt x, i) x, x homogeneous.

    Uses (L(-1) + L(0)) y = y o 1 repeatedly.
    """
    if i == 0 or x.is_zero():
        return OvWitness()
    wt = x.weight()
    one = vacuum()
    triples = []
    y = x
    # E_l = (L(-1)^(l-1) x o 1)/l! - ((wt+l-1)/l) E_(l-1); unroll into triples
    factors = []
    for l in range(1, i + 1):
        factors.append((y, Fraction(1, math.factorial(l))))
        y = l_action(-1, y)
    scale = Fraction(1)
    for l in range(i, 0, -1):
        vec, c = factors[l - 1]
        if not vec.is_zero():
            triples.append((vec, one, c * scale))
        scale *= -Fraction(wt + l - 1, l)
    return OvWitness(tuple(triples))


def skew_witness(u: Vector, v: Vector) -> OvWitness:
    """Witness that v*u - Res_z Y(u,z)v (1+z)^(wt u - 1)/z lies in O(V).

    Follows from skew symmetry Y(v,z)u = e^{zL(-1)} Y(u,-z) v together with
    L(-1)^i x / i! = C(-wt x, i) x mod O(V).  ``u`` and ``v`` homogeneous.
    """
    if u.is_zero() or v.is_zero():
        return OvWitness()
    wu, wv = u.weight(), v.weight()
    out = OvWitness()
    for n in range(-1, wu + wv):
        x = mode_action(u, n, v)
        if x.is_zero():
            continue
        for i in range(0, n + 2):
            c = math.comb(wv, n + 1 - i) if n + 1 - i <= wv else 0
            if not c:
                continue
            sign = -1 if n % 2 == 0 else 1
            out = out + _translation_witness(x, i).scaled(Fraction(sign * c))
    return out


def omega_commutator_witness(v: Vector, omega_vec: Vector) -> OvWitness:
    """Witness for omega*v - v*omega in O(V), v homogeneous.

    omega*v - Res Y(omega,z)v (1+z)/z = (L(-1)+L(0))v = v o 1, and the
    remaining v*omega term is handled by :func:`skew_witness`.
    """
    if v.is_zero():
        return OvWitness()
    return OvWitness(((v, vacuum(), Fraction(1)),)) + skew_witness(
        omega_vec, v
    ).scaled(Fraction(-1))
