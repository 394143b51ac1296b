"""Finite formal linear combinations over an exact coefficient ring."""

from __future__ import annotations

from fractions import Fraction


def is_scalar(x) -> bool:
    from .exactnum import CycloScalar

    return isinstance(x, (int, Fraction, CycloScalar))


class LinComb:
    """Immutable finite combination ``sum c_b * b`` over hashable basis keys.

    Zero coefficients are never stored, so equality of two combinations is
    equality of their term dictionaries.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if c:
                    key = self._check_key(key)
                    clean[key] = clean.get(key, 0) + c
            clean = {b: c for b, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _check_key(cls, key):
        return key

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _same(self, other):
        return type(other) is type(self) and self._compatible(other)

    def _compatible(self, other):
        return True

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not self._same(other):
            return NotImplemented
        out = dict(self._terms)
        for b, c in other._terms.items():
            s = out.get(b, 0) + c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not is_scalar(scalar):
            return NotImplemented
        if not scalar:
            return self._like({})
        out = {}
        for b, c in self._terms.items():
            p = c * scalar
            if p:
                out[b] = p
        return self._like(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not is_scalar(scalar):
            return NotImplemented
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return self * (1 / scalar)

    def _like(self, terms):
        return self._from_clean(terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb) or type(other) is not type(self):
            return NotImplemented
        return self._compatible(other) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_coefficients(self, fn):
        out = {}
        for b, c in self._terms.items():
            c = fn(c)
            if c:
                out[b] = c
        return self._like(out)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda bc: self.sort_key(bc[0]))

    @staticmethod
    def sort_key(key):
        return key
