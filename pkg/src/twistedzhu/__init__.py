"""Exact computations for twisted Zhu algebras of cyclic permutation orbifolds
of tensor powers of a vertex operator algebra."""

__version__ = "0.1.0"
