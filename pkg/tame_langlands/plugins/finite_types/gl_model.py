"""
GL_n over a finite field

GL_n(F_q) as a FiniteGroupModel of matrices with entries encoded as ff_ops codes, its
standard unipotent radicals, and the regular elliptic elements coming from F_{q^n}^x.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import InputError, ValidationError
from tame_langlands.plugins.arithmetic import ff_ops, smallest_irreducible
from tame_langlands.plugins.arithmetic.linear import inverse, matvec
from tame_langlands.plugins.finite_groups import FiniteGroupModel
from tame_langlands.plugins.tame_fields import FieldSkeleton

FqMatrix = tuple[tuple[int, ...], ...]


def _matmul(a: FqMatrix, b: FqMatrix, p: int, f0: int) -> FqMatrix:
    F = ff_ops(p, f0)
    n = len(a)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = F.add(acc, F.mul(a[i][k], b[k][j]))
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def identity_matrix(n: int) -> FqMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def gl_generators(n: int, F: FieldSkeleton) -> list[FqMatrix]:
    """Transvections I + b E_ij for b in an F_p-basis of F_q, and diag(g, 1, ..., 1)"""
    field = ff_ops(F.p, F.f0)
    gens = []
    diagonal = [list(row) for row in identity_matrix(n)]
    diagonal[0][0] = field.generator
    gens.append(tuple(tuple(row) for row in diagonal))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(F.f0):
                m = [list(row) for row in identity_matrix(n)]
                m[i][j] = F.p**k
                gens.append(tuple(tuple(row) for row in m))
    return gens


@lru_cache(maxsize=16)
def general_linear_group(n: int, F: FieldSkeleton) -> FiniteGroupModel:
    """
    GL_n(F_q) generated by elementary matrices

    Raises:
        InputError: if n < 1
        BoundExceededError: if the group is larger than bound_group_order
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    bound = get_config_value("bound_group_order", 2000)
    return FiniteGroupModel.generate(
        f"GL{n}(F{F.q})",
        gl_generators(n, F),
        lambda a, b: _matmul(a, b, F.p, F.f0),
        identity_matrix(n),
        bound,
    )


def gl_order(n: int, q: int) -> int:
    result = 1
    for i in range(n):
        result *= q**n - q**i
    return result


def compositions(n: int) -> list[tuple[int, ...]]:
    """Ordered partitions of n, the block shapes of standard parabolics"""
    if n == 0:
        return [()]
    found = []
    for first in range(1, n + 1):
        found.extend((first,) + rest for rest in compositions(n - first))
    return found


def unipotent_radical(n: int, F: FieldSkeleton, blocks: tuple[int, ...]) -> list[FqMatrix]:
    """Block upper unitriangular matrices for the given block shape"""
    if sum(blocks) != n:
        raise InputError(f"blocks {blocks} do not sum to {n}")
    owner = [b for b, size in enumerate(blocks) for _ in range(size)]
    slots = [(i, j) for i in range(n) for j in range(n) if owner[i] < owner[j]]
    elements = []
    for values in product(range(F.q), repeat=len(slots)):
        m = [list(row) for row in identity_matrix(n)]
        for (i, j), v in zip(slots, values):
            m[i][j] = v
        elements.append(tuple(tuple(row) for row in m))
    return elements


def proper_radicals(n: int, F: FieldSkeleton) -> list[list[FqMatrix]]:
    return [unipotent_radical(n, F, shape) for shape in compositions(n) if len(shape) > 1]


@lru_cache(maxsize=None)
def _subfield_root(p: int, f0: int, n: int) -> int:
    """A root in F_{q^n} of the defining polynomial of F_q, i.e. the image of its generator x"""
    big = ff_ops(p, f0 * n)
    poly = smallest_irreducible(p, f0)
    for candidate in big.elements():
        acc = 0
        for c in reversed(poly):
            acc = big.add(big.mul(acc, candidate), big.scalar(c))
        if acc == 0:
            return candidate
    raise ValidationError(f"F_{p}^{f0} does not embed in F_{p}^{f0 * n}")  # pragma: no cover


def embed_subfield(x: int, F: FieldSkeleton, n: int) -> int:
    """The image of x in F_q inside F_{q^n}"""
    small = ff_ops(F.p, F.f0)
    big = ff_ops(F.p, F.f0 * n)
    root = _subfield_root(F.p, F.f0, n)
    acc = 0
    power = 1
    for c in small.coefficients(x):
        acc = big.add(acc, big.mul(big.scalar(c), power))
        power = big.mul(power, root)
    return acc


@lru_cache(maxsize=None)
def _coordinate_inverse(p: int, f0: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of the F_p-linear map F_q^n -> F_{q^n}, (c_i) -> sum c_i theta^i"""
    F = FieldSkeleton(p, f0)
    big = ff_ops(p, f0 * n)
    theta = big.generator
    columns = []
    for i in range(n):
        theta_i = big.pow(theta, i)
        for k in range(f0):
            columns.append(big.coefficients(big.mul(embed_subfield(p**k, F, n), theta_i)))
    size = f0 * n
    matrix = tuple(tuple(columns[c][r] for c in range(size)) for r in range(size))
    return inverse(matrix, p)


def multiplication_matrix(zeta: int, F: FieldSkeleton, n: int) -> FqMatrix:
    """Matrix over F_q of x -> zeta x on F_{q^n}, in the basis theta^0..theta^(n-1)"""
    big = ff_ops(F.p, F.f0 * n)
    small = ff_ops(F.p, F.f0)
    inv = _coordinate_inverse(F.p, F.f0, n)
    theta = big.generator
    columns = []
    for j in range(n):
        image = big.mul(zeta, big.pow(theta, j))
        coords = matvec(inv, tuple(big.coefficients(image)), F.p)
        columns.append([small.from_coefficients(list(coords[i * F.f0 : (i + 1) * F.f0])) for i in range(n)])
    return tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))


def elliptic_element(exponent: int, F: FieldSkeleton, n: int) -> FqMatrix:
    """The matrix of multiplication by g^exponent, g the distinguished generator of F_{q^n}^x"""
    big = ff_ops(F.p, F.f0 * n)
    return multiplication_matrix(big.exp(exponent), F, n)
