"""
Weil Model Signs

Glauberman signs on a Heisenberg group without building the group. The faithful
representation with central character z -> w^(kz) is realized over F_l on functions on a
Lagrangian complement (the Schrodinger model); a symplectic operator c lifts to an
intertwiner W_c, unique up to a scalar, and the canonical extension sends the generator of
A to the multiple of W_c with order dividing |A| and determinant 1. When c has no nonzero
fixed vector the fixed group is the center and the sign is the trace of that multiple.

Every W_{c^j} is known through one fixed vector of the Lagrangian c^j L, so traces and the
scalars relating W_c^j to W_{c^j} cost O(p^(dim/2)) each.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm

from sympy import isprime, primitive_root
from sympy.ntheory import is_nthpow_residue, nthroot_mod

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, CorrespondenceError, DegenerateFormError, InputError
from tame_langlands.plugins.arithmetic.linear import Matrix, identity, inverse, matmul, matvec, rank
from tame_langlands.plugins.symplectic import ConcreteSymplecticSpace
from tame_langlands.utils.logger import get_logger

logger = get_logger(__name__)

PRIME_ATTEMPTS = 64

Vector = tuple[int, ...]


def _project(space: ConcreteSymplecticSpace, x: Vector, e: Vector, f: Vector) -> Vector:
    """x - h(x, f) e + h(x, e) f, orthogonal to e and f when h(e, f) = 1"""
    p = space.p
    hf, he = space.form(x, f), space.form(x, e)
    return tuple((xi - hf * ei + he * fi) % p for xi, ei, fi in zip(x, e, f))


def symplectic_basis(space: ConcreteSymplecticSpace) -> Matrix:
    """
    Matrix whose columns are e_1..e_n, f_1..f_n with h(e_i, f_j) = delta_ij and
    h(e_i, e_j) = h(f_i, f_j) = 0

    Raises:
        DegenerateFormError: if some vector has no partner
    """
    p, dim = space.p, space.dimension
    rest = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    es: list[Vector] = []
    fs: list[Vector] = []
    while rest:
        u = rest[0]
        partner = next((i for i in range(1, len(rest)) if space.form(u, rest[i])), None)
        if partner is None:
            raise DegenerateFormError("form is degenerate")
        scale = pow(space.form(u, rest[partner]), -1, p)
        w = tuple(x * scale % p for x in rest[partner])
        es.append(u)
        fs.append(w)
        rest = [_project(space, x, u, w) for i, x in enumerate(rest) if i not in (0, partner)]
    columns = es + fs
    return tuple(tuple(col[i] for col in columns) for i in range(dim))


class SchroedingerModel:
    """
    The faithful representation of Heis(V) with central character z -> w^(kz) over F_l

    Basis vectors e_beta, beta in F_p^n, are the translates of the vector fixed by the
    Lagrangian L = <e_i>; V is handled in symplectic coordinates (a, b).
    """

    def __init__(self, space: ConcreteSymplecticSpace, ell: int, k: int):
        self.space = space
        self.p = p = space.p
        self.n = space.dimension // 2
        self.ell = ell
        self.half = (p + 1) // 2
        root = primitive_root(ell)
        omega = pow(root, (ell - 1) // p, ell)
        self.psi = [pow(omega, k * z % p, ell) for z in range(p)]
        self.points = [tuple(x) for x in product(range(p), repeat=self.n)]
        self.basis = symplectic_basis(space)
        self.basis_inv = inverse(self.basis, p)

    def operator(self, j: int) -> Matrix:
        """c^j in symplectic coordinates"""
        o = self.space.group.order
        return matmul(self.basis_inv, matmul(self.space.action_of((j % o,)), self.basis, self.p), self.p)

    def split(self, C: Matrix, a: Vector, b: Vector) -> tuple[Vector, Vector]:
        image = matvec(C, a + b, self.p)
        return image[: self.n], image[self.n :]

    def add(self, x: Vector, y: Vector) -> Vector:
        return tuple((s + t) % self.p for s, t in zip(x, y))

    def sub(self, x: Vector, y: Vector) -> Vector:
        return tuple((s - t) % self.p for s, t in zip(x, y))

    def phase(self, a: Vector, b: Vector, gamma: Vector) -> int:
        """psi(s) with ((a, b), 0) e_gamma = psi(s) e_(b + gamma)"""
        p = self.p
        dot = sum(x * (2 * g + y) for x, y, g in zip(a, b, gamma)) % p
        return self.psi[self.half * dot % p]

    def intertwiner(self, j: int) -> Intertwiner:
        C = self.operator(j)
        zero = tuple(0 for _ in range(self.n))
        lagrangian = [self.split(C, alpha, zero) for alpha in self.points]
        for seed in self.points:
            vector: dict[Vector, int] = {}
            for a, b in lagrangian:
                key = self.add(seed, b)
                vector[key] = (vector.get(key, 0) + self.phase(a, b, seed)) % self.ell
            vector = {key: value for key, value in vector.items() if value}
            if vector:
                images = {beta: self.split(C, zero, beta) for beta in self.points}
                return Intertwiner(self, vector, images)
        raise CorrespondenceError("no vector is fixed by the Lagrangian")  # pragma: no cover


@dataclass
class Intertwiner:
    """W with W e_beta = rho(c (0, beta)) w, w the vector fixed by c L"""

    model: SchroedingerModel
    fixed: dict[Vector, int]
    images: dict[Vector, tuple[Vector, Vector]]

    def entry(self, x: Vector, beta: Vector) -> int:
        m = self.model
        a, b = self.images[beta]
        gamma = m.sub(x, b)
        value = self.fixed.get(gamma)
        if not value:
            return 0
        return value * m.phase(a, b, gamma) % m.ell

    def column(self, beta: Vector) -> dict[Vector, int]:
        m = self.model
        a, b = self.images[beta]
        return {m.add(gamma, b): value * m.phase(a, b, gamma) % m.ell for gamma, value in self.fixed.items()}

    def trace(self) -> int:
        return sum(self.entry(beta, beta) for beta in self.model.points) % self.model.ell


def _check_space(space: ConcreteSymplecticSpace) -> None:
    if space.p == 2:
        raise InputError("the Weil model needs p odd")
    if space.group.rank != 1:
        raise InputError(f"operator group {space.group.literal()} is not given as a cyclic group")
    bound_dim = int(get_config_value("bound_dim", 8))
    if space.dimension > bound_dim:
        raise BoundExceededError(f"dim = {space.dimension} > {bound_dim}")
    c = space.action_of((1,))
    shifted = tuple(
        tuple((x - y) % space.p for x, y in zip(row, unit)) for row, unit in zip(c, identity(space.dimension))
    )
    if rank(shifted, space.p) != space.dimension:
        raise InputError("the generator of A fixes a nonzero vector")


def _splitting_primes(step: int, floor: int):
    candidate = step * (floor // step + 1) + 1
    while True:
        if isprime(candidate):
            yield candidate
        candidate += step


def _sign_mod(space: ConcreteSymplecticSpace, k: int, ell: int) -> int | None:
    """The sign computed over F_ell, or None when the scalar W_c^o has no o-th root there"""
    model = SchroedingerModel(space, ell, k)
    o = space.group.order
    N = model.p**model.n
    zero = tuple(0 for _ in range(model.n))
    W = {j: model.intertwiner(j) for j in range(1, o + 1)}
    # W_c^j = kappa[j] W_(c^j)
    kappa = {1: 1}
    for j in range(2, o + 1):
        target = W[j].column(zero)
        idx = next(iter(target))
        lhs = sum(W[1].entry(idx, beta) * value for beta, value in W[j - 1].column(zero).items()) % ell
        kappa[j] = kappa[j - 1] * lhs * pow(target[idx], -1, ell) % ell
    scalar = kappa[o] * W[o].entry(zero, zero) % ell
    if not is_nthpow_residue(scalar, o, ell):
        return None
    mu_inv = pow(int(nthroot_mod(scalar, o, ell)), -1, ell)
    traces = [N % ell] + [kappa[j] * W[j].trace() * pow(mu_inv, j, ell) % ell for j in range(1, o)]
    zeta = pow(primitive_root(ell), (ell - 1) // o, ell)
    o_inv = pow(o, -1, ell)
    multiplicities = []
    for m in range(o):
        acc = sum(t * pow(zeta, (-j * m) % o, ell) for j, t in enumerate(traces)) * o_inv % ell
        if acc > N:
            raise CorrespondenceError("eigenvalue multiplicities are not integral")
        multiplicities.append(acc)
    if sum(multiplicities) != N:
        raise CorrespondenceError("eigenvalue multiplicities do not add up to the degree")
    shift = -sum(m * mult for m, mult in enumerate(multiplicities)) * pow(N, -1, o) % o
    value = pow(zeta, shift, ell) * traces[1] % ell
    if value == 1:
        return 1
    if value == ell - 1:
        return -1
    raise CorrespondenceError(f"trace of the canonical extension is not a sign mod {ell}")


def weil_sign(space: ConcreteSymplecticSpace, k: int = 1) -> int:
    """
    Glauberman sign of the Heisenberg character with central character z -> zeta_p^(kz),
    for the generator of a cyclic A acting without nonzero fixed vectors

    Raises:
        InputError: for p = 2, a non-cyclic A or a generator with fixed vectors
        BoundExceededError: if dim V is above bound_dim
    """
    _check_space(space)
    if space.dimension == 0:
        return 1
    if k % space.p == 0:
        raise InputError("the central character must be nontrivial")
    o = space.group.order
    floor = 2 * space.p ** (space.dimension // 2) + 2
    for attempt, ell in enumerate(_splitting_primes(lcm(space.p, o), floor)):
        if attempt >= PRIME_ATTEMPTS:
            break
        sign = _sign_mod(space, k, ell)
        if sign is not None:
            logger.debug("weil sign %s k=%d over F_%d: %+d", space.literal(), k, ell, sign)
            return sign
    raise CorrespondenceError(f"no prime among the first {PRIME_ATTEMPTS} splits the intertwiner scalar")


def weil_signs(space: ConcreteSymplecticSpace) -> list[int]:
    """Signs for the central characters z -> zeta_p^(kz), k = 1..p-1"""
    return [weil_sign(space, k) for k in range(1, space.p)]
