"""
Dixon-Schneider Character Tables

Exact character tables of small finite groups. The class-sum matrices are split into common
eigenspaces over a prime field F_l with l = 1 mod exp(G), and each character is lifted to
Z[zeta_exp] through its eigenvalue multiplicities on cyclic subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy import isprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, ValidationError
from tame_langlands.plugins.arithmetic import Cyclotomic, csum
from tame_langlands.plugins.arithmetic.linear import prime_field
from tame_langlands.utils.logger import get_logger

from .group_model import FiniteGroupModel

logger = get_logger(__name__)


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters as rows over the classes of `group_name`, trivial row first"""

    group_name: str
    order: int
    class_sizes: tuple[int, ...]
    conductor: int
    rows: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [row[0].to_int() for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def inner_product(self, chi: tuple[Cyclotomic, ...], psi: tuple[Cyclotomic, ...]) -> Fraction:
        """<chi, psi> = 1/|G| sum_g chi(g) conj(psi(g)); must be rational"""
        total = csum(size * (a * b.conjugate()) for size, a, b in zip(self.class_sizes, chi, psi))
        if not total.is_integer():
            raise ValidationError("inner product of class functions is not rational")
        return Fraction(total.to_int(), self.order)

    def decompose(self, values: tuple[Cyclotomic, ...]) -> list[Fraction]:
        """Multiplicities of each irreducible in a class function"""
        return [self.inner_product(values, row) for row in self.rows]

    def is_orthonormal(self) -> bool:
        for i, chi in enumerate(self.rows):
            for j, psi in enumerate(self.rows):
                if self.inner_product(chi, psi) != (1 if i == j else 0):
                    return False
        return sum(d * d for d in self.degrees) == self.order


def splitting_prime(G: FiniteGroupModel) -> int:
    """Smallest prime l = 1 mod exp(G) with l > 2 sqrt(|G|)"""
    exponent = G.exponent()
    floor = 2 * isqrt(G.order) + 2
    candidate = 1 + exponent * max(1, floor // exponent)
    while candidate <= floor or not isprime(candidate):
        candidate += exponent
    return candidate


def class_matrices(G: FiniteGroupModel) -> list[list[list[int]]]:
    """M_r[s][t] = #{x in C_r : x^-1 g_t in C_s}"""
    k = len(G.classes)
    reps = G.class_reps
    matrices = []
    for members in G.classes:
        M = [[0] * k for _ in range(k)]
        for x in members:
            x_inv = G.inv(x)
            for t, g in enumerate(reps):
                M[G.class_of(G.mul(x_inv, g))][t] += 1
        matrices.append(M)
    return matrices


def _rref_rows(rows: list[list[int]], ell: int) -> tuple[list[list[int]], list[int]]:
    K = prime_field(ell)
    dm = DomainMatrix([[K(x % ell) for x in r] for r in rows], (len(rows), len(rows[0])), K)
    reduced, pivots = dm.rref()
    out = [[int(x) % ell for x in r] for r in reduced.to_list()]
    return out[: len(pivots)], list(pivots)


def _eigenvalues(X: DomainMatrix, ell: int) -> list[int]:
    coeffs = [int(c) % ell for c in X.charpoly()]
    roots = []
    for lam in range(ell):
        acc = 0
        for c in coeffs:
            acc = (acc * lam + c) % ell
        if acc == 0:
            roots.append(lam)
    return roots


def _split(basis: list[list[int]], pivots: list[int], M: list[list[int]], ell: int) -> list[list[list[int]]]:
    """Eigenspaces of M (acting on columns) inside the row space of `basis`"""
    K = prime_field(ell)
    d, k = len(basis), len(M)
    B = DomainMatrix([[K(x) for x in row] for row in basis], (d, k), K)
    Mt = DomainMatrix([[K(M[j][i] % ell) for j in range(k)] for i in range(k)], (k, k), K)
    image = (B * Mt).to_list()
    X = DomainMatrix([[K(int(image[i][p]) % ell) for p in pivots] for i in range(d)], (d, d), K)
    entries = [[int(x) % ell for x in row] for row in X.to_list()]
    pieces = []
    for lam in _eigenvalues(X, ell):
        shifted = DomainMatrix(
            [[K((entries[j][i] - (lam if i == j else 0)) % ell) for j in range(d)] for i in range(d)], (d, d), K
        )
        null = shifted.nullspace()
        if null.shape[0] == 0:
            continue
        vectors = (null * B).to_list()
        pieces.append([[int(x) % ell for x in row] for row in vectors])
    return pieces


def _common_eigenvectors(G: FiniteGroupModel, ell: int) -> list[list[int]]:
    k = len(G.classes)
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for r, M in enumerate(class_matrices(G)):
        if r == 0 or all(len(s) == 1 for s in spaces):
            continue
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
                continue
            basis, pivots = _rref_rows(space, ell)
            refined.extend(_split(basis, pivots, M, ell))
        spaces = refined
        logger.debug("%s: class %d splits into %d spaces", G.name, r, len(spaces))
    if len(spaces) != k or any(len(s) != 1 for s in spaces):
        raise ValidationError(f"{G.name}: class sums do not split into {k} eigenlines")
    return [s[0] for s in spaces]


def _lift(values_mod: list[int], G: FiniteGroupModel, ell: int, exponent: int) -> tuple[Cyclotomic, ...]:
    """Lift F_l values to Z[zeta_exp] via eigenvalue multiplicities of each g_t"""
    big_root = pow(primitive_root(ell), (ell - 1) // exponent, ell)
    lifted = []
    for rep in G.class_reps:
        o = G.element_order(rep)
        step = exponent // o
        z = pow(big_root, step, ell)
        powers = [values_mod[G.class_of(G.power(rep, j))] for j in range(o)]
        o_inv = pow(o, -1, ell)
        terms = {}
        for m in range(o):
            acc = sum(powers[j] * pow(z, (-j * m) % o, ell) for j in range(o)) % ell
            multiplicity = acc * o_inv % ell
            if multiplicity:
                terms[m * step] = multiplicity
        lifted.append(Cyclotomic.from_exponents(exponent, terms))
    return tuple(lifted)


def dixon_character_table(G: FiniteGroupModel, bound: int | None = None) -> CharacterTable:
    """
    Exact character table of G

    Raises:
        BoundExceededError: if |G| is above the configured bound (bound_group_order)
        ValidationError: if the class sums fail to split
    """
    if bound is None:
        bound = int(get_config_value("bound_group_order", 2000))
    if G.order > bound:
        raise BoundExceededError(f"{G.name} has order {G.order} > {bound}")
    ell = splitting_prime(G)
    exponent = G.exponent()
    sizes = G.class_sizes
    inverse_classes = [G.inverse_class(c) for c in range(len(sizes))]
    rows = []
    for w in _common_eigenvectors(G, ell):
        w0_inv = pow(w[0], -1, ell)
        w = [x * w0_inv % ell for x in w]
        norm = sum(w[t] * w[inverse_classes[t]] * pow(sizes[t], -1, ell) for t in range(len(w))) % ell
        square = G.order * pow(norm, -1, ell) % ell
        root = sqrt_mod(square, ell)
        if root is None:
            raise ValidationError(f"{G.name}: degree square is not a square mod {ell}")
        degree = min(root, ell - root)
        values = [degree * w[t] * pow(sizes[t], -1, ell) % ell for t in range(len(w))]
        rows.append(_lift(values, G, ell, exponent))

    def sort_key(row):
        return (not all(v == 1 for v in row), row[0].to_int(), [v.coeffs for v in row])

    rows.sort(key=sort_key)
    logger.info("%s: %d irreducible characters over F_%d", G.name, len(rows), ell)
    return CharacterTable(G.name, G.order, tuple(sizes), exponent, tuple(rows))
