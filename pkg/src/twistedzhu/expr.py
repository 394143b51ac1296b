"""Parser for Vector and tensor literals.

Grammar (whitespace is ignored)::

    vector  := term (('+' | '-') term)*        leading sign allowed
    term    := [coeff ['*']] monomial
    coeff   := INT ['/' INT]
    monomial:= ('a(-' INT ')' ['^' INT])* '|0>'
    tensor  := tterm (('+' | '-') tterm)*
    tterm   := [coeff ['*']] '[' vector ('|' vector)* ']'

``|0>`` alone is the vacuum.  The printed forms of :class:`Vector` and
:class:`TensorVector` with rational coefficients parse back to themselves.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .tensor import TensorVector, pure_tensor
from .voa import Vector

__all__ = ["ParseError", "parse_vector", "parse_tensor"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<vac>\|0>)
  | (?P<mode>a\(\s*(?P<sign>-?)\s*(?P<idx>\d+)\s*\))
  | (?P<int>\d+)
  | (?P<op>[-+*/^\[\]|])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        if m.group("mode"):
            if m.group("sign") != "-" or int(m.group("idx")) == 0:
                raise ParseError("only creation modes a(-n), n >= 1, are allowed", text, pos)
            out.append(("mode", int(m.group("idx")), pos))
        elif m.group("ws"):
            pass
        elif m.group("vac"):
            out.append(("vac", None, pos))
        elif m.group("int"):
            out.append(("int", int(m.group("int")), pos))
        else:
            out.append((m.group("op"), None, pos))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(msg, self.text, self.toks[self.i][2])

    def coeff(self) -> Fraction:
        c = Fraction(1)
        if self.peek() == "int":
            c = Fraction(self.take()[1])
            if self.peek() == "/":
                self.take()
                _, den, pos = self.take("int")
                if den == 0:
                    raise ParseError("zero denominator", self.text, pos)
                c /= den
            if self.peek() == "*":
                self.take()
        return c

    def monomial(self) -> tuple:
        parts = []
        while self.peek() == "mode":
            n = self.take()[1]
            power = 1
            if self.peek() == "^":
                self.take()
                power = self.take("int")[1]
            parts.extend([n] * power)
        self.take("vac")
        return tuple(parts)

    def signed_terms(self, term):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = acc + term() * sign
        return acc

    def vector(self) -> Vector:
        return self.signed_terms(lambda: Vector.monomial(*self._vterm()))

    def _vterm(self):
        c = self.coeff()
        return self.monomial(), c

    def tensor(self) -> TensorVector:
        return self.signed_terms(self._tterm)

    def _tterm(self) -> TensorVector:
        c = self.coeff()
        self.take("[")
        factors = [self.vector()]
        while self.peek() == "|":
            self.take()
            factors.append(self.vector())
        self.take("]")
        return pure_tensor(factors) * c


def parse_vector(text: str) -> Vector:
    p = _Parser(text)
    if p.peek() == "end":
        p.fail("empty expression")
    v = p.vector()
    if p.peek() != "end":
        p.fail("trailing input")
    return v


def parse_tensor(text: str, k: int | None = None) -> TensorVector:
    p = _Parser(text)
    if p.peek() == "end":
        p.fail("empty expression")
    t = p.tensor()
    if p.peek() != "end":
        p.fail("trailing input")
    if k is not None and t.k != k:
        raise ParseError(f"tensor literal has {t.k} factors, expected {k}", text, 0)
    return t
