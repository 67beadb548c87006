"""
C-Isometry Search

Bounded backtracking for a C-equivariant isometry T: X -> Y. A map is fixed by the images
of a set of C-module generators of X; each candidate image must satisfy every linear
relation of the orbit vectors it extends and reproduce their Gram matrix.
"""

from __future__ import annotations

from itertools import product

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, InputError
from tame_langlands.plugins.arithmetic.linear import Matrix, inverse, matmul, matvec, nullspace, rank, transpose
from tame_langlands.utils.logger import get_logger

from .concrete import ConcreteSymplecticSpace, isotypic_multiplicities

logger = get_logger(__name__)

ISOMETRY_STEP_BOUND = 500_000

Vector = tuple[int, ...]


def _orbit(space: ConcreteSymplecticSpace, v: Vector) -> list[Vector]:
    return [matvec(m, v, space.p) for m in space.element_matrices.values()]


def module_generators(space: ConcreteSymplecticSpace) -> list[Vector]:
    """Greedy C-module generators, standard basis vectors first"""
    n, p = space.dimension, space.p
    gens: list[Vector] = []
    spanned: list[Vector] = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if spanned and rank(tuple(spanned) + (e,), p) == rank(tuple(spanned), p):
            continue
        gens.append(e)
        spanned.extend(_orbit(space, e))
        if rank(tuple(spanned), p) == n:
            break
    return gens


def _gram(space: ConcreteSymplecticSpace, vectors: list[Vector]) -> list[list[int]]:
    return [[space.form(u, v) for v in vectors] for u in vectors]


def _satisfies(relations: list[Vector], vectors: list[Vector], p: int) -> bool:
    """Every relation sum r_i x_i = 0 of the source holds for the candidate vectors"""
    n = len(vectors[0]) if vectors else 0
    for r in relations:
        for coord in range(n):
            if sum(c * v[coord] for c, v in zip(r, vectors) if c) % p:
                return False
    return True


def _assemble(X: ConcreteSymplecticSpace, xs: list[Vector], ys: list[Vector]) -> Matrix:
    """T with T x = y on the orbit vectors, from a basis among the xs"""
    p = X.p
    basis_x: list[Vector] = []
    basis_y: list[Vector] = []
    for x, y in zip(xs, ys):
        if rank(tuple(basis_x) + (x,), p) > len(basis_x):
            basis_x.append(x)
            basis_y.append(y)
        if len(basis_x) == X.dimension:
            break
    return matmul(transpose(tuple(basis_y)), inverse(transpose(tuple(basis_x)), p), p)


def is_isometry(T: Matrix, X: ConcreteSymplecticSpace, Y: ConcreteSymplecticSpace) -> bool:
    p = X.p
    if matmul(matmul(transpose(T), Y.gram, p), T, p) != X.gram:
        return False
    return all(matmul(T, X.action_of(g), p) == matmul(Y.action_of(g), T, p) for g in X.group.generators())


def find_isometry(
    X: ConcreteSymplecticSpace, Y: ConcreteSymplecticSpace, bound: int = ISOMETRY_STEP_BOUND
) -> Matrix | None:
    """
    A C-equivariant isometry X -> Y, or None when none exists

    Raises:
        InputError: if the spaces live over different operator groups
        BoundExceededError: if the dimension exceeds bound_dim or the search exceeds bound steps
    """
    if (X.p, X.group) != (Y.p, Y.group):
        raise InputError("spaces over different operator groups")
    bound_dim = int(get_config_value("bound_dim", 8))
    if max(X.dimension, Y.dimension) > bound_dim:
        raise BoundExceededError(f"dimension exceeds bound {bound_dim}")
    if X.dimension != Y.dimension or isotypic_multiplicities(X) != isotypic_multiplicities(Y):
        return None
    if X.dimension == 0:
        return ()
    p, n = X.p, X.dimension
    gens = module_generators(X)
    orbits = [_orbit(X, g) for g in gens]
    steps = 0

    def search(level: int, xs: list[Vector], ys: list[Vector]) -> Matrix | None:
        nonlocal steps
        if level == len(gens):
            T = _assemble(X, xs, ys)
            return T if is_isometry(T, X, Y) else None
        new_xs = xs + orbits[level]
        relations = nullspace(transpose(tuple(new_xs)), p)
        target_gram = _gram(X, new_xs)
        for y in product(range(p), repeat=n):
            if not any(y):
                continue
            steps += 1
            if steps > bound:
                raise BoundExceededError(f"isometry search exceeded {bound} steps")
            new_ys = ys + _orbit(Y, y)
            if _gram(Y, new_ys) != target_gram:
                continue
            if not _satisfies(relations, new_ys, p):
                continue
            if rank(tuple(new_ys), p) != rank(tuple(new_xs), p):
                continue
            found = search(level + 1, new_xs, new_ys)
            if found is not None:
                return found
        return None

    result = search(0, [], [])
    logger.debug("isometry search: %d steps, found=%s", steps, result is not None)
    return result
