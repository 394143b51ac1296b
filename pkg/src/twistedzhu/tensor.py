"""V^{(x)k} with the k-cycle automorphism g and the twisted products.

Convention: g moves the factor in slot a to slot a+1 (mod k), so that
``sum_a eta^{-(a-1)s} u^a`` spans the eta^s eigenspace.  Slots are
1-based in the public API and 0-based inside keys.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .exactnum import CycloScalar, eta_power, rational_binomial
from .lincomb import LinComb
from .voa import Vector, _mono_mode, format_terms, format_monomial, monomial_weight

__all__ = [
    "TensorVector",
    "tensor_vacuum",
    "one_tensor",
    "n_tensor",
    "pure_tensor",
    "orbit_sum",
    "eigen_one_tensor",
    "cycle_apply",
    "eigencomponent",
    "eigen_decomposition",
    "tensor_mode",
    "circ_g",
    "star_g",
    "slot_vector",
]


class TensorVector(LinComb):
    """Finite combination of k-tuples of Fock monomials."""

    __slots__ = ("k",)

    def __init__(self, k: int, terms=None):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        super().__init__(terms)
        for key in self.keys():
            if len(key) != k:
                raise ValueError(f"tensor monomial {key!r} does not have {k} factors")

    @classmethod
    def _check_key(cls, key):
        return tuple(tuple(sorted(p, reverse=True)) for p in key)

    def _like(self, terms):
        obj = TensorVector.__new__(TensorVector)
        obj._terms = terms
        obj._hash = None
        obj.k = self.k
        return obj

    def _compatible(self, other):
        return self.k == other.k

    @staticmethod
    def sort_key(key):
        return (
            sum(monomial_weight(p) for p in key),
            tuple(Vector.sort_key(p) for p in key),
        )

    def components(self) -> dict[int, "TensorVector"]:
        out: dict[int, dict] = {}
        for b, c in self.items():
            out.setdefault(sum(map(monomial_weight, b)), {})[b] = c
        return {w: self._like(t) for w, t in sorted(out.items())}

    def max_weight(self) -> int:
        return max((sum(map(monomial_weight, b)) for b in self.keys()), default=0)

    def weight(self) -> int:
        ws = {sum(map(monomial_weight, b)) for b in self.keys()}
        if len(ws) != 1:
            raise ValueError("wt is only defined for nonzero homogeneous vectors")
        return ws.pop()

    def __str__(self):
        return format_terms(
            self.sorted_items(),
            lambda key: "[" + " | ".join(format_monomial(p) for p in key) + "]",
        )

    def __repr__(self):
        return f"TensorVector(k={self.k}, {self})"


def tensor_vacuum(k: int) -> TensorVector:
    return TensorVector(k, {((),) * k: 1})


def pure_tensor(factors) -> TensorVector:
    """x_1 (x) x_2 (x) ... (x) x_k for Vectors x_i (multilinear expansion)."""
    k = len(factors)
    terms = {(): 1}
    for vec in factors:
        nxt = {}
        for key, c in terms.items():
            for p, d in vec.items():
                nk = key + (p,)
                nxt[nk] = nxt.get(nk, 0) + c * d
        terms = nxt
    return TensorVector(k, terms)


def n_tensor(vectors, slots, k: int) -> TensorVector:
    """The n-tensor vector with ``vectors[j]`` in slot ``slots[j]`` (1-based)
    and the vacuum elsewhere."""
    if len(set(slots)) != len(slots):
        raise ValueError("slots must be distinct")
    factors = [Vector.monomial(()) for _ in range(k)]
    for vec, a in zip(vectors, slots):
        if not 1 <= a <= k:
            raise ValueError(f"slot {a} out of range 1..{k}")
        factors[a - 1] = vec
    return pure_tensor(factors)


def one_tensor(u: Vector, a: int, k: int) -> TensorVector:
    """u^a: u in slot a, vacuum elsewhere."""
    return n_tensor([u], [a], k)


def orbit_sum(u: Vector, k: int) -> TensorVector:
    """sum_a u^a."""
    out = TensorVector(k)
    for a in range(1, k + 1):
        out = out + one_tensor(u, a, k)
    return out


def eigen_one_tensor(u: Vector, s: int, k: int) -> TensorVector:
    """sum_a eta^{-(a-1)s} u^a, an eta^s eigenvector of g."""
    out = TensorVector(k)
    for a in range(1, k + 1):
        out = out + one_tensor(u, a, k) * eta_power(k, -(a - 1) * s)
    return out


def slot_vector(w: TensorVector, a: int) -> Vector:
    """Vector in slot a of the terms of w that are vacuum in every other slot."""
    out = {}
    for key, c in w.items():
        if all(not p for i, p in enumerate(key) if i != a - 1):
            out[key[a - 1]] = c
    return Vector(out)


def cycle_apply(w: TensorVector, times: int = 1) -> TensorVector:
    """g^times applied to w."""
    k = w.k
    s = times % k
    if s == 0:
        return w
    return w._like({key[-s:] + key[:-s]: c for key, c in w.items()})


def eigencomponent(w: TensorVector, r: int) -> TensorVector:
    """(1/k) sum_m eta^{-rm} g^m w, the projection onto the eta^r eigenspace."""
    k = w.k
    out = TensorVector(k)
    for m in range(k):
        out = out + cycle_apply(w, m) * eta_power(k, -r * m)
    return out * CycloScalar(k, [Fraction(1, k)])


def eigen_decomposition(w: TensorVector) -> dict[int, TensorVector]:
    return {r: eigencomponent(w, r) for r in range(w.k)}


# -- vertex operators on the tensor product ---------------------------------

def _slot_choices(bounds, total):
    """All tuples (n_i) with n_i <= bounds[i] and sum == total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_max = sum(bounds[1:])
    for n0 in range(total - rest_max, bounds[0] + 1):
        for tail in _slot_choices(bounds[1:], total - n0):
            yield (n0,) + tail


@functools.lru_cache(maxsize=None)
def _tensor_mono_mode(u: tuple, n: int, v: tuple) -> tuple:
    """(u_1 (x) ... (x) u_k)_n (v_1 (x) ... (x) v_k) on monomial keys.

    The coefficient of z^{-n-1} in prod_i Y(u_i, z) v_i; vacuum slots
    contribute only their (-1)-mode.
    """
    active = [i for i, p in enumerate(u) if p]
    total = n + 1 - len(active)
    bounds = [monomial_weight(u[i]) + monomial_weight(v[i]) - 1 for i in active]
    out: dict = {}
    for choice in _slot_choices(bounds, total):
        partial = {tuple(v): Fraction(1)}
        for idx, ni in zip(active, choice):
            res = _mono_mode(u[idx], ni, v[idx])
            if not res:
                partial = {}
                break
            nxt = {}
            for key, c in partial.items():
                for mono, d in res:
                    nk = key[:idx] + (mono,) + key[idx + 1:]
                    nxt[nk] = nxt.get(nk, 0) + c * d
            partial = nxt
        for key, c in partial.items():
            out[key] = out.get(key, 0) + c
    return tuple((key, c) for key, c in out.items() if c)


def tensor_mode(u: TensorVector, n: int, v: TensorVector) -> TensorVector:
    """u_n v for the tensor product vertex operator Y(u,z) = (x)_a Y(u_a, z)."""
    out: dict = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            cc = cu * cv
            for key, c in _tensor_mono_mode(ku, n, kv):
                out[key] = out.get(key, 0) + cc * c
    return TensorVector(u.k, out)


def _residue_product(u: TensorVector, v: TensorVector, gamma, p: int) -> TensorVector:
    out = TensorVector(u.k)
    if u.is_zero() or v.is_zero():
        return out
    top = u.max_weight() + v.max_weight() - 1
    for j in range(0, top + p + 1):
        b = rational_binomial(gamma, j)
        if b:
            out = out + tensor_mode(u, j - p, v) * b
    return out


def _split(u: TensorVector):
    """Yield (r, weight, component) over eigenspaces and weights."""
    k = u.k
    invariant = cycle_apply(u) == u
    for r in range(k):
        if invariant:
            part = u if r == 0 else TensorVector(k)
        else:
            part = eigencomponent(u, r)
        for w, comp in part.components().items():
            yield r, w, comp


def circ_g(u: TensorVector, v: TensorVector) -> TensorVector:
    """u o_g v, summed over the eigenspace and weight components of u."""
    k = u.k
    out = TensorVector(k)
    for r, w, comp in _split(u):
        if r == 0:
            out = out + _residue_product(comp, v, w, 2)
        else:
            out = out + _residue_product(comp, v, Fraction(w - 1) + Fraction(r, k), 1)
    return out


def star_g(u: TensorVector, v: TensorVector) -> TensorVector:
    """u *_g v; components of u outside the invariant eigenspace contribute 0."""
    k = u.k
    out = TensorVector(k)
    for r, w, comp in _split(u):
        if r == 0:
            out = out + _residue_product(comp, v, w, 1)
    return out
