"""The rank-1 Heisenberg (free boson) vertex operator algebra.

Basis vectors are monomials ``a(-n1)...a(-nr)|0>`` stored as weakly
decreasing tuples of positive integers; the empty tuple is the vacuum.
Modes ``u_n v`` are computed by structural recursion on ``u`` using the
iterate formula

    (a(-m)w)_n = sum_{i>=0} (-1)^i C(-m, i) (a(-m-i) w_{n+i} - (-1)^m w_{n-m-i} a(i))

which terminates because ``w_p v`` vanishes for ``p > wt w + wt v - 1`` and
``a(i) v`` vanishes for ``i > wt v``.
"""

from __future__ import annotations

import abc
import functools
from fractions import Fraction
from typing import Iterable

from .exactnum import CycloScalar, rational_binomial
from .lincomb import LinComb
from .series import Series

Monomial = tuple

__all__ = [
    "Vector",
    "VertexAlgebraModel",
    "Heisenberg",
    "HEISENBERG",
    "vacuum",
    "omega",
    "alpha",
    "monomial_weight",
    "partitions",
    "basis",
    "basis_upto",
    "generator_mode",
    "mode_action",
    "vertex_series",
    "l_action",
    "format_coefficient",
]


def monomial_weight(parts: Monomial) -> int:
    return sum(parts)


def _canon(parts: Iterable[int]) -> Monomial:
    return tuple(sorted(parts, reverse=True))


def format_coefficient(c) -> str:
    if isinstance(c, CycloScalar):
        if c.is_rational():
            return str(c.to_fraction())
        return f"({c})"
    return str(Fraction(c))


def format_monomial(parts: Monomial) -> str:
    if not parts:
        return "|0>"
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        power = j - i
        out.append(f"a(-{parts[i]})" + (f"^{power}" if power > 1 else ""))
        i = j
    return "".join(out) + "|0>"


def format_terms(items, fmt_key) -> str:
    if not items:
        return "0"
    pieces = []
    for key, c in items:
        body = fmt_key(key)
        text = format_coefficient(c)
        if text == "1":
            term = body
        elif text == "-1":
            term = "-" + body
        else:
            term = f"{text}*{body}"
        pieces.append(term)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class Vector(LinComb):
    """Finite linear combination of Fock monomials."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = tuple(key)
        if any((not isinstance(n, int)) or n < 1 for n in key):
            raise ValueError(f"monomial parts must be positive integers: {key!r}")
        return _canon(key)

    @classmethod
    def monomial(cls, parts: Iterable[int] = (), coeff=1) -> "Vector":
        return cls({tuple(parts): coeff})

    @staticmethod
    def sort_key(key):
        return (sum(key), tuple(-p for p in key))

    def components(self) -> dict[int, "Vector"]:
        """Homogeneous components keyed by weight."""
        out: dict[int, dict] = {}
        for b, c in self.items():
            out.setdefault(monomial_weight(b), {})[b] = c
        return {w: Vector._from_clean(t) for w, t in sorted(out.items())}

    def is_homogeneous(self) -> bool:
        return len({monomial_weight(b) for b in self.keys()}) <= 1

    def weight(self) -> int:
        ws = {monomial_weight(b) for b in self.keys()}
        if len(ws) != 1:
            raise ValueError("wt is only defined for nonzero homogeneous vectors")
        return ws.pop()

    def max_weight(self) -> int:
        return max((monomial_weight(b) for b in self.keys()), default=0)

    def __str__(self):
        return format_terms(self.sorted_items(), format_monomial)

    def __repr__(self):
        return f"Vector({self})"


def vacuum() -> Vector:
    return Vector.monomial(())


def alpha(*parts: int) -> Vector:
    """``a(-p1)a(-p2)...|0>`` for positive ``parts``."""
    return Vector.monomial(parts)


def omega() -> Vector:
    """Conformal vector 1/2 a(-1)^2|0>."""
    return Vector.monomial((1, 1), Fraction(1, 2))


@functools.lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Monomial, ...]:
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        return ((),)

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return tuple(gen(n, n))


def basis(weight: int) -> list[Vector]:
    return [Vector.monomial(p) for p in partitions(weight)]


def basis_upto(max_weight: int) -> list[Vector]:
    return [v for w in range(max_weight + 1) for v in basis(w)]


# -- mode calculus on monomials ----------------------------------------------

def _creation(m: int, parts: Monomial) -> Monomial:
    return _canon(parts + (m,))


def _annihilate(m: int, parts: Monomial):
    """a(m) on a monomial for m > 0: returns (coefficient, monomial) or None."""
    mult = parts.count(m)
    if not mult:
        return None
    lst = list(parts)
    lst.remove(m)
    return m * mult, tuple(lst)


@functools.lru_cache(maxsize=None)
def _mono_mode(u: Monomial, n: int, v: Monomial) -> tuple:
    """u_n v for monomials, as a tuple of (monomial, Fraction) pairs."""
    if not u:
        return ((v, Fraction(1)),) if n == -1 else ()
    wu, wv = monomial_weight(u), monomial_weight(v)
    if n > wu + wv - 1:
        return ()
    m, w = u[0], u[1:]
    ww = wu - m
    out: dict[Monomial, Fraction] = {}

    def acc(key, c):
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    sign_m = -1 if m % 2 else 1
    top = ww + wv - 1 - n
    for i in range(0, max(top, -1) + 1):
        b = rational_binomial(-m, i)
        if i % 2:
            b = -b
        for mono, c in _mono_mode(w, n + i, v):
            acc(_creation(m + i, mono), b * c)
    for i in range(1, wv + 1):
        hit = _annihilate(i, v)
        if hit is None:
            continue
        factor, v2 = hit
        b = rational_binomial(-m, i)
        if i % 2:
            b = -b
        coef = -sign_m * b * factor
        for mono, c in _mono_mode(w, n - m - i, v2):
            acc(mono, coef * c)
    return tuple(out.items())


class VertexAlgebraModel(abc.ABC):
    """Contract for a graded vertex operator algebra plugged into the harness."""

    central_charge: Fraction

    @abc.abstractmethod
    def vacuum(self) -> Vector: ...

    @abc.abstractmethod
    def conformal_vector(self) -> Vector: ...

    @abc.abstractmethod
    def generator_mode(self, m: int, v: Vector) -> Vector: ...

    @abc.abstractmethod
    def mode_action(self, u: Vector, n: int, v: Vector) -> Vector: ...

    @abc.abstractmethod
    def basis(self, weight: int) -> list[Vector]: ...

    def weight(self, v: Vector) -> int:
        return v.weight()

    def l_action(self, n: int, v: Vector) -> Vector:
        return self.mode_action(self.conformal_vector(), n + 1, v)

    def vertex_series(self, u: Vector, v: Vector, window) -> Series:
        """Y(u, z)v as a Vector-valued Series exact on ``window``."""
        lo, hi = window
        if u.is_zero() or v.is_zero():
            return Series({}, (lo, hi))
        natural = -(u.max_weight() + v.max_weight())
        lo = min(lo, natural)
        coeffs = {}
        for e in range(lo, hi + 1):
            c = self.mode_action(u, -e - 1, v)
            if c:
                coeffs[e] = c
        return Series(coeffs, (lo, hi))


class Heisenberg(VertexAlgebraModel):
    """Rank-1 free boson with conformal vector 1/2 a(-1)^2|0>, c = 1."""

    central_charge = Fraction(1)

    def vacuum(self) -> Vector:
        return vacuum()

    def conformal_vector(self) -> Vector:
        return omega()

    def basis(self, weight: int) -> list[Vector]:
        return basis(weight)

    def generator_mode(self, m: int, v: Vector) -> Vector:
        if m == 0:
            return Vector()
        out: dict[Monomial, object] = {}
        for parts, c in v.items():
            if m < 0:
                key, f = _creation(-m, parts), 1
            else:
                hit = _annihilate(m, parts)
                if hit is None:
                    continue
                f, key = hit
            out[key] = out.get(key, 0) + f * c
        return Vector(out)

    def mode_action(self, u: Vector, n: int, v: Vector) -> Vector:
        if isinstance(n, Fraction):
            if n.denominator != 1:
                raise ValueError("untwisted modes take integer indices")
            n = int(n)
        out: dict[Monomial, object] = {}
        for pu, cu in u.items():
            for pv, cv in v.items():
                cc = cu * cv
                for mono, c in _mono_mode(pu, n, pv):
                    out[mono] = out.get(mono, 0) + cc * c
        return Vector(out)


HEISENBERG = Heisenberg()


def generator_mode(m: int, v: Vector) -> Vector:
    """a(m) applied to ``v``."""
    return HEISENBERG.generator_mode(m, v)


def mode_action(u: Vector, n: int, v: Vector) -> Vector:
    """u_n v in the Heisenberg model."""
    return HEISENBERG.mode_action(u, n, v)


def vertex_series(u: Vector, v: Vector, window) -> Series:
    return HEISENBERG.vertex_series(u, v, window)


def l_action(n: int, v: Vector) -> Vector:
    """L(n)v = omega_{n+1} v."""
    return HEISENBERG.l_action(n, v)


def l_minus_one_power(m: int, v: Vector) -> Vector:
    for _ in range(m):
        v = l_action(-1, v)
    return v
