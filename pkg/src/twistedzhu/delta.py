"""The Delta_k operator: coefficients a_j, Delta_k(1), its inverse, and the
z = 1 specialization of the conjugation formula

    Delta_k(1) Y(u, x) Delta_k(1)^{-1} = Y(Delta_k(1+x) u, (1+x)^{1/k} - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .series import Series, binomial_series, compose
from .voa import HEISENBERG, Vector, l_action, mode_action

__all__ = [
    "AjTable",
    "AjValidationError",
    "TableTooShortError",
    "WeightedVector",
    "solve_aj",
    "recompose_exponential",
    "recompose_flow",
    "delta1",
    "delta1_inv",
    "exp_weighted_l",
    "delta_at_one_plus_x",
    "conjugation_sides",
    "conjugation_check",
]


class AjValidationError(RuntimeError):
    """The solved coefficients failed independent recomposition."""


class TableTooShortError(ValueError):
    """An AjTable does not reach the weights being acted on."""


def _target(k: int, top: int) -> list[Fraction]:
    """Coefficients of (1/k)((1+x)^k - 1) through x^top."""
    return [Fraction(0)] + [Fraction(math.comb(k, m), k) for m in range(1, top + 1)]


# -- dense univariate helpers on lists truncated at a fixed degree -----------

def _apply_d(a, p, top):
    """D p with D = sum_j a_j x^{j+1} d/dx, truncated at x^top."""
    out = [Fraction(0)] * (top + 1)
    for deg in range(1, len(p)):
        c = p[deg]
        if not c:
            continue
        for j, aj in enumerate(a, start=1):
            e = deg + j
            if e > top:
                break
            out[e] += aj * deg * c
    return out


def recompose_exponential(a, top: int) -> list[Fraction]:
    """e^{-D} x through x^top by summing the operator exponential."""
    result = [Fraction(0)] * (top + 1)
    if top >= 1:
        result[1] = Fraction(1)
    term = list(result)
    n = 0
    while any(term):
        n += 1
        term = [-c / n for c in _apply_d(a, term, top)]
        result = [r + t for r, t in zip(result, term)]
    return result


def recompose_flow(a, top: int) -> list[Fraction]:
    """e^{-D} x through x^top as the time-1 flow of -sum_j a_j y^{j+1}.

    Picard iteration y <- x - int_0^t v(y) ds in Q[t][[x]], then t = 1.
    Independent of :func:`recompose_exponential`.  The coefficient of x^d in
    the flow has t-degree < d, so higher t-powers are dropped as they appear.
    """
    # y[deg] is a polynomial in t (list, low degree first)
    def padd(p, q):
        n = max(len(p), len(q))
        return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]

    def pmul(p, q):
        if not p or not q:
            return []
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            if x:
                for j, y in enumerate(q):
                    out[i + j] += x * y
        return out

    def smul(s, t):
        out = [[] for _ in range(top + 1)]
        for i, p in enumerate(s):
            if not p:
                continue
            for j in range(0, top + 1 - i):
                if t[j]:
                    out[i + j] = padd(out[i + j], pmul(p, t[j]))[: i + j]
        return out

    x = [[] for _ in range(top + 1)]
    if top >= 1:
        x[1] = [Fraction(1)]
    y = [list(p) for p in x]
    for _ in range(top + 1):
        vy = [[] for _ in range(top + 1)]
        power = y
        for aj in a:
            power = smul(power, y)  # y^{j+1}
            if not any(power):
                break
            for d in range(top + 1):
                if power[d]:
                    vy[d] = padd(vy[d], [aj * c for c in power[d]])
        nxt = []
        for d in range(top + 1):
            integral = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(vy[d])]
            nxt.append(padd(x[d], [-c for c in integral])[:d])
        y = nxt
    return [sum(p, Fraction(0)) for p in y]


@dataclass(frozen=True)
class AjTable:
    """Solved coefficients a_1..a_N for a given k."""

    k: int
    order: int
    a: tuple = field(default=())

    def coefficient(self, j: int) -> Fraction:
        if not 1 <= j <= self.order:
            raise TableTooShortError(f"a_{j} requested but table has order {self.order}")
        return self.a[j - 1]

    def corrupted(self, j: int, delta=1) -> "AjTable":
        """Copy with a_j shifted by ``delta``; fault injection only."""
        a = list(self.a)
        a[j - 1] += Fraction(delta)
        return replace(self, a=tuple(a))

    def check(self) -> bool:
        """Recomposition through x^(N+1) reproduces (1/k)((1+x)^k - 1)."""
        top = self.order + 1
        return recompose_flow(self.a, top) == _target(self.k, top)


def solve_aj(k: int, order: int) -> AjTable:
    """Solve e^{-sum a_j x^{j+1} d/dx} x = (1/k)((1+x)^k - 1) for a_1..a_order.

    The coefficient of x^{m+1} depends on a_m only through the term -a_m,
    so the system is triangular.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if order < 1:
        raise ValueError("order must be at least 1")
    target = _target(k, order + 1)
    a: list[Fraction] = []
    for m in range(1, order + 1):
        got = recompose_exponential(a + [Fraction(0)], m + 1)[m + 1]
        a.append(got - target[m + 1])
    table = AjTable(k, order, tuple(a))
    if not table.check():
        raise AjValidationError(f"a_j for k={k} failed recomposition")
    return table


# -- Delta_k(1) and its inverse ----------------------------------------------

def _require(table: AjTable, u: Vector):
    if u.max_weight() > table.order:
        raise TableTooShortError(
            f"table of order {table.order} cannot act on weight {u.max_weight()}"
        )


def _lowering(table: AjTable, v: Vector, sign=1) -> Vector:
    """sign * sum_j a_j L(j) v."""
    out = Vector()
    for j in range(1, min(table.order, v.max_weight()) + 1):
        aj = table.coefficient(j)
        if aj:
            out = out + l_action(j, v) * (sign * aj)
    return out


def _exp_lowering(table: AjTable, v: Vector, sign=1) -> Vector:
    result, term, n = v, v, 0
    while not term.is_zero():
        n += 1
        term = _lowering(table, term, sign) / n
        result = result + term
    return result


def _k_power_l0(v: Vector, k: int, sign: int) -> Vector:
    out = Vector()
    for w, comp in v.components().items():
        out = out + comp * (Fraction(k) ** (sign * w))
    return out


def delta1(u: Vector, k: int, table: AjTable) -> Vector:
    """Delta_k(1) u = e^{sum_j a_j L(j)} k^{-L(0)} u."""
    _require(table, u)
    return _exp_lowering(table, _k_power_l0(u, k, -1))


def delta1_inv(u: Vector, k: int, table: AjTable) -> Vector:
    """k^{L(0)} e^{-sum_j a_j L(j)} u, the two-sided inverse of delta1."""
    _require(table, u)
    return _k_power_l0(_exp_lowering(table, u, -1), k, 1)


@dataclass(frozen=True)
class WeightedVector:
    """sum_p vec_p (1+z)^{-m_p}; each vec_p has weight wt(source) - m_p."""

    parts: tuple = ()

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def exp_weighted_l(u: Vector, table: AjTable) -> WeightedVector:
    """e^{sum_j a_j (1+z)^{-j} L(j)} u grouped by the total drop sum_i j_i."""
    _require(table, u)
    if u.is_zero():
        return WeightedVector()
    grouped: dict[int, Vector] = {0: u}
    power = {0: u}  # sequences of length n, keyed by drop
    n = 0
    while power:
        n += 1
        nxt: dict[int, Vector] = {}
        for d, vec in power.items():
            for j in range(1, min(table.order, vec.max_weight()) + 1):
                aj = table.coefficient(j)
                if not aj:
                    continue
                img = l_action(j, vec) * aj
                if img.is_zero():
                    continue
                nxt[d + j] = nxt[d + j] + img if d + j in nxt else img
        power = {d: v for d, v in nxt.items() if not v.is_zero()}
        for d, vec in power.items():
            term = vec / math.factorial(n)
            grouped[d] = grouped[d] + term if d in grouped else term
    return WeightedVector(
        tuple((vec, d) for d, vec in sorted(grouped.items()) if not vec.is_zero())
    )


def delta_at_one_plus_x(u: Vector, k: int, table: AjTable, order: int) -> Series:
    """Delta_k(1+x) u through x^order.

    For homogeneous u of weight w this is
    k^{-w} sum_d vec_d (1+x)^{(1/k - 1) w - d/k}, with vec_d from
    :func:`exp_weighted_l`.
    """
    out = Series({}, (0, order))
    for w, comp in u.components().items():
        scale = Fraction(k) ** (-w)
        for vec, d in exp_weighted_l(comp, table):
            gamma = Fraction(w, k) - w - Fraction(d, k)
            out = out + binomial_series(gamma, order) * (vec * scale)
    return out.truncate(order)


def conjugation_sides(u: Vector, v: Vector, k: int, table: AjTable, order: int):
    """Both sides of the conjugation formula at z = 1, through x^order.

    Left:  Delta_k(1) Y(u, x) Delta_k(1)^{-1} v.
    Right: Y(Delta_k(1+x) u, (1+x)^{1/k} - 1) v.
    """
    _require(table, u)
    _require(table, v)
    lo = -(u.max_weight() + v.max_weight())
    vinv = delta1_inv(v, k, table)
    left = {}
    for e in range(lo, order + 1):
        c = delta1(mode_action(u, -e - 1, vinv), k, table)
        if c:
            left[e] = c
    lhs = Series(left, (lo, order))

    f = binomial_series(Fraction(1, k), order - lo + 1) - Series.monomial(Fraction(1), 0)
    rhs = Series({}, (lo, order))
    for w, comp in u.components().items():
        scale = Fraction(k) ** (-w)
        for vec, d in exp_weighted_l(comp, table):
            g = HEISENBERG.vertex_series(vec, v, (lo, order))
            gf = compose(g, f, order=order)
            gamma = Fraction(w, k) - w - Fraction(d, k)
            coeff = binomial_series(gamma, order - lo) * scale
            rhs = rhs + coeff * gf
    return lhs, rhs


def conjugation_check(u: Vector, v: Vector, k: int, table: AjTable, order: int) -> bool:
    lhs, rhs = conjugation_sides(u, v, k, table, order)
    return lhs.agrees_with(rhs, hi=order)
