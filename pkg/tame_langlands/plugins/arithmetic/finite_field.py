"""
Finite Fields

Arithmetic context for F_{p^k}. Elements are integers encoding their coefficient vector in
base p (constant coefficient lowest), relative to the smallest monic irreducible polynomial
of degree k in lexicographic coefficient order, highest coefficient compared first. The
distinguished generator is the smallest element, in the same order, of multiplicative order
p^k - 1. Both choices are deterministic, so logarithms are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import Poly, Symbol, isprime, primefactors

from tame_langlands.exceptions import InputError

_X = Symbol("x")


def _digits(value: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(digits: list[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p, coefficients constant term first"""
    for code in range(p**k):
        low = _digits(code, p, k)
        coeffs = [*low, 1]
        if Poly(list(reversed(coeffs)), _X, modulus=p).is_irreducible:
            return tuple(coeffs)
    raise InputError(f"No irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


class FiniteField:
    """F_{p^k} with log/antilog tables against the distinguished generator"""

    def __init__(self, p: int, k: int = 1):
        if not isprime(p):
            raise InputError(f"Characteristic must be prime, got {p}")
        if k < 1:
            raise InputError(f"Degree must be positive, got {k}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = smallest_irreducible(p, k)
        self.generator = self._find_generator()
        self._exp = [1] * (self.order - 1)
        for i in range(1, self.order - 1):
            self._exp[i] = self._poly_mul(self._exp[i - 1], self.generator)
        self._log = {x: i for i, x in enumerate(self._exp)}

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.k})"

    # raw polynomial arithmetic, used only while building the tables

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * self.modulus[j]
            prod[i] = 0
        return _undigits([c % p for c in prod[:k]], p)

    def _poly_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        factors = primefactors(n)
        for candidate in range(1, self.order):
            if all(self._poly_pow(candidate, n // r) != 1 for r in factors):
                return candidate
        raise InputError(f"No generator found for F_{self.order}")  # pragma: no cover

    # field operations

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.k), _digits(b, self.p, self.k)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to the distinguished generator"""
        if a == 0:
            raise InputError("Discrete log of zero is undefined")
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % (self.order - 1)]

    def scalar(self, c: int) -> int:
        """Embed an integer as an element of the prime field"""
        return c % self.p

    def frobenius(self, a: int, i: int = 1) -> int:
        return self.pow(a, self.p**i)

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer mod p"""
        total = 0
        for i in range(self.k):
            total = self.add(total, self.frobenius(a, i))
        if total >= self.p:
            raise InputError("trace left the prime field")  # pragma: no cover
        return total

    def coefficients(self, a: int) -> list[int]:
        return _digits(a, self.p, self.k)

    def from_coefficients(self, coeffs: list[int]) -> int:
        if len(coeffs) > self.k:
            raise InputError(f"Too many coefficients for F_{self.order}")
        padded = [c % self.p for c in coeffs] + [0] * (self.k - len(coeffs))
        return _undigits(padded, self.p)

    def elements(self) -> range:
        return range(self.order)

    def element_of_order(self, n: int) -> int:
        """The canonical element generator^((p^k - 1)/n) of order n"""
        if (self.order - 1) % n:
            raise InputError(f"F_{self.order} has no element of order {n}")
        return self.exp((self.order - 1) // n)


@lru_cache(maxsize=None)
def ff_ops(p: int, k: int = 1) -> FiniteField:
    """Cached arithmetic context for F_{p^k}"""
    return FiniteField(p, k)


@dataclass(frozen=True)
class FiniteFieldElem:
    """A value of F_{p^k} carrying its field, for arithmetic outside hot loops"""

    p: int
    k: int
    coeffs: tuple[int, ...]

    @property
    def field(self) -> FiniteField:
        return ff_ops(self.p, self.k)

    @property
    def code(self) -> int:
        return self.field.from_coefficients(list(self.coeffs))

    @classmethod
    def from_code(cls, field: FiniteField, code: int) -> FiniteFieldElem:
        return cls(field.p, field.k, tuple(field.coefficients(code)))

    def _wrap(self, code: int) -> FiniteFieldElem:
        return FiniteFieldElem.from_code(self.field, code)

    def _check(self, other: FiniteFieldElem) -> None:
        if (self.p, self.k) != (other.p, other.k):
            raise InputError("Finite field elements from different fields")

    def __add__(self, other: FiniteFieldElem) -> FiniteFieldElem:
        self._check(other)
        return self._wrap(self.field.add(self.code, other.code))

    def __sub__(self, other: FiniteFieldElem) -> FiniteFieldElem:
        self._check(other)
        return self._wrap(self.field.sub(self.code, other.code))

    def __mul__(self, other: FiniteFieldElem) -> FiniteFieldElem:
        self._check(other)
        return self._wrap(self.field.mul(self.code, other.code))

    def __pow__(self, e: int) -> FiniteFieldElem:
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self) -> FiniteFieldElem:
        return self._wrap(self.field.inv(self.code))

    def log(self) -> int:
        return self.field.log(self.code)
