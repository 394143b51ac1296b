"""Truncated formal Laurent series in one variable.

A :class:`Series` carries a window ``(lo, hi)``: every coefficient below
``lo`` is known to vanish and every coefficient up to ``hi`` is exact.
Coefficients above ``hi`` are unknown.  ``hi`` may be ``math.inf`` for
exact Laurent polynomials.  Arithmetic narrows windows so that a
coefficient outside the window can never be read by accident; reading one
raises :class:`TruncationError`.

Fractional powers only ever attach to ``(1 + z)`` and are expanded with
:func:`binomial_series`, so exponents stay integral.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactnum import (
    as_fraction,
    poly_divmod,
    poly_mul,
    poly_sub,
    poly_trim,
    rational_binomial,
)

__all__ = [
    "Series",
    "TruncationError",
    "InvalidSubstitutionError",
    "binomial_series",
    "residue",
    "compose",
    "change_of_var_residues",
    "RationalFn",
    "circ_chain_rational_check",
    "geometric_identity_check",
]

INF = math.inf


class TruncationError(ArithmeticError):
    """A requested coefficient lies outside the exactness window."""


class InvalidSubstitutionError(ValueError):
    """Composition g(f(x)) needs f = a1*x + ... with a1 != 0."""


class Series:
    """Laurent series with integer exponents and an exactness window."""

    __slots__ = ("_coeffs", "lo", "hi")

    def __init__(self, coeffs=None, window=(0, INF)):
        lo, hi = window
        if hi != INF:
            hi = int(hi)
        lo = int(lo)
        clean = {}
        for e, c in (coeffs or {}).items():
            if not c:
                continue
            if e < lo:
                raise ValueError(f"exponent {e} below window lower bound {lo}")
            if e <= hi:
                clean[int(e)] = c
        self._coeffs = clean
        self.lo = lo
        self.hi = hi

    @classmethod
    def monomial(cls, c, e: int) -> "Series":
        """Exact series ``c * z**e``."""
        return cls({e: c}, (e, INF))

    @classmethod
    def polynomial(cls, coeffs: dict) -> "Series":
        """Exact Laurent polynomial from ``{exponent: coefficient}``."""
        exps = [e for e, c in coeffs.items() if c]
        return cls(coeffs, (min(exps, default=0), INF))

    @property
    def window(self):
        return (self.lo, self.hi)

    def items(self):
        return sorted(self._coeffs.items())

    def exponents(self):
        return sorted(self._coeffs)

    def valuation(self):
        return min(self._coeffs, default=None)

    def coefficient(self, e: int, zero=0):
        if e > self.hi:
            raise TruncationError(
                f"coefficient of z^{e} requested but series is exact only through z^{self.hi}"
            )
        return self._coeffs.get(e, zero)

    def truncate(self, hi) -> "Series":
        return Series(self._coeffs, (self.lo, min(self.hi, hi)))

    def is_zero_through(self, hi) -> bool:
        if hi > self.hi:
            raise TruncationError(f"cannot decide beyond z^{self.hi}")
        return all(e > hi for e in self._coeffs)

    # -- arithmetic --
    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        lo, hi = min(self.lo, other.lo), min(self.hi, other.hi)
        out = {e: c for e, c in self._coeffs.items() if e <= hi}
        for e, c in other._coeffs.items():
            if e <= hi:
                out[e] = out[e] + c if e in out else c
        return Series(out, (lo, hi))

    def __neg__(self):
        return Series({e: -c for e, c in self._coeffs.items()}, self.window)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            out = {e: c * other for e, c in self._coeffs.items()}
            return Series(out, self.window)
        lo = self.lo + other.lo
        hi = min(self.hi + other.lo, other.hi + self.lo)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if e > hi:
                    continue
                p = _times(c1, c2)
                out[e] = out[e] + p if e in out else p
        return Series(out, (lo, hi))

    def __rmul__(self, other):
        if isinstance(other, Series):
            return NotImplemented
        return Series({e: other * c for e, c in self._coeffs.items()}, self.window)

    def shift(self, p: int) -> "Series":
        """Multiply by z**p."""
        return Series(
            {e + p: c for e, c in self._coeffs.items()}, (self.lo + p, self.hi + p)
        )

    def derivative(self) -> "Series":
        out = {e - 1: c * e for e, c in self._coeffs.items() if e != 0}
        return Series(out, (self.lo - 1, self.hi - 1))

    def map(self, fn) -> "Series":
        return Series({e: fn(c) for e, c in self._coeffs.items()}, self.window)

    def agrees_with(self, other: "Series", hi=None) -> bool:
        """Exact equality on the common window (optionally capped at ``hi``)."""
        top = min(self.hi, other.hi)
        if hi is not None:
            if hi > top:
                raise TruncationError(
                    f"comparison through z^{hi} needs windows up to z^{hi}, have z^{top}"
                )
            top = hi
        for e in set(self._coeffs) | set(other._coeffs):
            if e > top:
                continue
            if self._coeffs.get(e, 0) != other._coeffs.get(e, 0):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.window == other.window and self._coeffs == other._coeffs

    def __repr__(self):
        body = ", ".join(f"z^{e}: {c}" for e, c in self.items())
        return f"Series({{{body}}}, window={self.window})"


def _times(a, b):
    try:
        r = a * b
    except TypeError:
        r = NotImplemented
    if r is NotImplemented:
        r = b * a
    return r


def binomial_series(gamma, order: int) -> Series:
    """(1 + z)**gamma through z**order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    gamma = as_fraction(gamma)
    coeffs = {m: rational_binomial(gamma, m) for m in range(order + 1)}
    if gamma.denominator == 1 and 0 <= gamma <= order:
        return Series(coeffs, (0, INF))
    return Series(coeffs, (0, order))


def residue(s: Series):
    """Coefficient of z^-1."""
    if s.hi < -1:
        raise TruncationError(
            f"residue needs the series exact through z^-1, window is {s.window}; enlarge the order"
        )
    return s.coefficient(-1)


def _power_of_one_plus(h: Series, m: int, top: int) -> Series:
    """(1 + h)**m through x**top, for h of valuation >= 1."""
    result = Series({0: Fraction(1)}, (0, INF))
    hp = Series.monomial(Fraction(1), 0)
    for j in range(1, top + 1):
        b = rational_binomial(m, j)
        if not b:
            break  # m is a nonnegative integer below j
        hp = (hp * h).truncate(top)
        result = result + hp * b
    return result.truncate(top)


def compose(g: Series, f: Series, order=None) -> Series:
    """g(f(x)) by the double-sum expansion

        sum_m v_m (a1 x)^m sum_j C(m, j) (sum_{i>=2} (a_i/a1) x^(i-1))^j.

    ``order`` caps the highest exponent computed; it is required whenever
    the result would otherwise be an infinite series.
    """
    if any(e < 1 for e in f.exponents()) or f.lo < 0:
        raise InvalidSubstitutionError("inner series must have zero constant term")
    if f.hi < 1:
        raise TruncationError("inner series must be exact through its linear term")
    a1 = f.coefficient(1)
    if not a1:
        raise InvalidSubstitutionError("inner series needs a nonzero linear coefficient")
    a1 = as_fraction(a1) if not hasattr(a1, "inverse") else a1
    g_exps = g.exponents()
    low = g_exps[0] if g_exps else g.lo
    # h = sum_{i>=2} (a_i/a1) x^(i-1), exact through x^(f.hi - 1)
    h = Series(
        {e - 1: c / a1 for e, c in f.items() if e >= 2},
        (0, f.hi - 1 if f.hi != INF else INF),
    )
    top = min(g.hi, low + h.hi)
    if order is not None:
        top = min(top, order)
    exact_poly = top == INF
    if exact_poly:
        if h.exponents() and any(e < 0 for e in g_exps):
            raise ValueError("negative powers of a nonlinear series need a finite order")
        deg_h = max(h.exponents(), default=0)
        top = max((m + m * deg_h for m in g_exps), default=0)
    out = Series({}, (low, top))
    for m in g_exps:
        if m > top:
            continue
        vm = g.coefficient(m)
        term = _power_of_one_plus(h, m, top - m)
        term = term.shift(m) * (a1 ** m)
        out = out + term.map(lambda c, vm=vm: _times(c, vm))
    out = Series(dict(out.items()), (min(low, out.lo), INF if exact_poly else top))
    return out


def change_of_var_residues(g: Series, f: Series):
    """(Res_z g(z), Res_x g(f(x)) f'(x))."""
    left = residue(g)
    gf = compose(g, f, order=0)
    right = residue(gf * f.derivative())
    return left, right


# -- exact rational functions in y = (1 + z) ----------------------------------

class RationalFn:
    """Quotient of two dense polynomials in y = 1 + z with rational coefficients."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = poly_trim(as_fraction(c) for c in num)
        den = poly_trim(as_fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def y_power(cls, n: int) -> "RationalFn":
        """(1 + z)**n for any integer n."""
        mono = [0] * abs(n) + [1]
        return cls(mono) if n >= 0 else cls([1], mono)

    @classmethod
    def constant(cls, c) -> "RationalFn":
        return cls([c])

    @classmethod
    def z(cls) -> "RationalFn":
        return cls([-1, 1])

    def __add__(self, other):
        other = _as_rfn(other)
        num = _padd(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return RationalFn(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFn([-c for c in self.num], self.den)

    def __sub__(self, other):
        return self + (-_as_rfn(other))

    def __rsub__(self, other):
        return _as_rfn(other) - self

    def __mul__(self, other):
        other = _as_rfn(other)
        return RationalFn(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rfn(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def __pow__(self, e: int):
        out = RationalFn([1])
        base = self if e >= 0 else RationalFn([1]) / self
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other):
        other = _as_rfn(other)
        return poly_mul(self.num, other.den) == poly_mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("RationalFn is unhashable")

    def reduced(self) -> "RationalFn":
        """Cancel the polynomial gcd and normalize the denominator to be monic."""
        a, b = list(self.den), list(self.num)
        while b:
            _, r = poly_divmod(a, b)
            a, b = b, r
        g = a
        num, _ = poly_divmod(self.num, g)
        den, _ = poly_divmod(self.den, g)
        lead = den[-1]
        return RationalFn([c / lead for c in num], [c / lead for c in den])

    def __repr__(self):
        return f"RationalFn(num={[str(c) for c in self.num]}, den={[str(c) for c in self.den]})"


def _padd(a, b):
    return poly_sub(a, [-c for c in b])


def _as_rfn(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    return RationalFn.constant(x)


def circ_chain_rational_sides(k: int) -> tuple[RationalFn, RationalFn]:
    """Both sides of the (1+z)-rational identity behind the circ product chain.

    Left: (1/(y^k-1)^2 + sum_t [(t/k) y^(t-k) + (1-t/k) y^t]/(y^k-1)^2) * k y^(k-1),
    right: 1/z^2, with y = 1 + z.
    """
    if k < 1:
        raise ValueError("k must be positive")
    y = RationalFn.y_power
    d = (y(k) - 1) ** 2
    acc = RationalFn.constant(1) / d
    for t in range(1, k):
        frac = Fraction(t, k)
        acc = acc + (frac * y(t - k) + (1 - frac) * y(t)) / d
    left = acc * (k * y(k - 1))
    right = RationalFn.constant(1) / (RationalFn.z() ** 2)
    return left, right


def circ_chain_rational_check(k: int) -> bool:
    left, right = circ_chain_rational_sides(k)
    return left == right


def geometric_identity_check(k: int) -> bool:
    """z * sum_{t<k} (1+z)^t == (1+z)^k - 1 as exact polynomials."""
    if k < 1:
        raise ValueError("k must be positive")
    total = RationalFn.constant(0)
    for t in range(k):
        total = total + RationalFn.y_power(t)
    return total * RationalFn.z() == RationalFn.y_power(k) - 1
