"""Exact scalars: rationals and the cyclotomic field Q(eta_k).

Rationals are plain :class:`fractions.Fraction` values.  An element of
Q(eta_k) is stored as the coefficient vector of a polynomial in eta of
degree < phi(k), reduced modulo the k-th cyclotomic polynomial, so two
elements are equal exactly when their coefficient vectors are.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from numbers import Rational

Scalar = Fraction

__all__ = [
    "Scalar",
    "CycloScalar",
    "ZeroDivisorError",
    "cyclotomic_polynomial",
    "eta_power",
    "rational_binomial",
    "as_fraction",
]


class ZeroDivisorError(ZeroDivisionError):
    """Raised when inverting the zero element of Q(eta_k)."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_binomial(alpha, m: int) -> Fraction:
    """Generalized binomial coefficient binom(alpha, m) for rational alpha."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    alpha = as_fraction(alpha)
    out = Fraction(1)
    for i in range(m):
        out = out * (alpha - i) / (i + 1)
    return out


# -- dense polynomial helpers over Q (lists, low degree first) ---------------

def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return poly_trim(out)


def poly_divmod(a, b):
    a = poly_trim(a)
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = poly_trim(r)
    return poly_trim(q), r


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (k - 1) + [Fraction(1)]
    for d in range(1, k):
        if k % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


def _reduce(k, p):
    _, r = poly_divmod(p, list(cyclotomic_polynomial(k)))
    deg = len(cyclotomic_polynomial(k)) - 1
    return tuple(r + [Fraction(0)] * (deg - len(r)))


class CycloScalar:
    """Element of Q(eta_k), eta_k = exp(2 pi i / k)."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs=()):
        if k < 1:
            raise ValueError("conductor k must be positive")
        object.__setattr__(self, "k", k)
        object.__setattr__(
            self, "coeffs", _reduce(k, poly_trim(as_fraction(c) for c in coeffs))
        )

    def __setattr__(self, name, value):
        raise AttributeError("CycloScalar is immutable")

    @classmethod
    def from_rational(cls, k: int, x) -> "CycloScalar":
        return cls(k, [as_fraction(x)])

    # -- coercion --
    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other.k != self.k:
                raise ValueError(f"mixing Q(eta_{self.k}) with Q(eta_{other.k})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.k, [other])
        return None

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic --
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.k, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.k, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.k, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.k, poly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        """Inverse via the extended Euclidean algorithm against Phi_k."""
        a = poly_trim(self.coeffs)
        if not a:
            raise ZeroDivisorError(f"zero has no inverse in Q(eta_{self.k})")
        # invariant: s*a == r (mod Phi_k)
        r0, r1 = list(cyclotomic_polynomial(self.k)), a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        # r0 is a nonzero constant since Phi_k is irreducible
        assert len(r0) == 1
        return CycloScalar(self.k, [c / r0[0] for c in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        out = CycloScalar(self.k, [1])
        for _ in range(abs(e)):
            out = out * base
        return out

    # -- comparison --
    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CycloScalar) else other
        if o is None:
            return NotImplemented
        return self.k == o.k and self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycloScalar({self.k}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mon = "eta" if i == 1 else f"eta^{i}"
            if c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append(f"-{mon}")
            else:
                terms.append(f"{c}*{mon}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def eta_power(k: int, e: int) -> CycloScalar:
    """eta_k ** e in canonical form."""
    if k < 1:
        raise ValueError("k must be positive")
    e %= k
    return CycloScalar(k, [0] * e + [1])
