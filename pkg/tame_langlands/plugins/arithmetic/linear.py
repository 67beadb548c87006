"""
Linear algebra over prime fields

Small helpers around sympy's DomainMatrix over GF(p). Matrices enter and leave as nested
lists of integers in [0, p).
"""

from __future__ import annotations

from functools import lru_cache

from sympy import GF
from sympy.polys.matrices import DomainMatrix

Matrix = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def prime_field(p: int):
    return GF(p, symmetric=False)


def to_domain(rows, p: int) -> DomainMatrix:
    K = prime_field(p)
    rows = [list(r) for r in rows]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    return DomainMatrix([[K(int(x) % p) for x in r] for r in rows], (n_rows, n_cols), K)


def from_domain(dm: DomainMatrix, p: int) -> Matrix:
    return tuple(tuple(int(x) % p for x in row) for row in dm.to_list())


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    if not a:
        return a
    return from_domain(to_domain(a, p) * to_domain(b, p), p)


def matpow(a: Matrix, e: int, p: int) -> Matrix:
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        e >>= 1
    return result


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else a


def matvec(a: Matrix, v: tuple[int, ...], p: int) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def rank(a: Matrix, p: int) -> int:
    if not a:
        return 0
    return to_domain(a, p).rank()


def inverse(a: Matrix, p: int) -> Matrix:
    return from_domain(to_domain(a, p).inv(), p)


def nullspace(a: Matrix, p: int) -> list[tuple[int, ...]]:
    """Basis of {v : a v = 0}, as row vectors in reduced echelon form"""
    if not a:
        return []
    basis = to_domain(a, p).nullspace()
    if basis.shape[0] == 0:
        return []
    basis, _ = basis.rref()
    return [row for row in from_domain(basis, p) if any(row)]
