"""
Concrete Symplectic Spaces

Matrix-level realization of a symplectic F_p C-module: an alternating Gram matrix G and one
action matrix per generator of C, acting on column vectors, with A^T G A = G.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, DegenerateFormError, InputError
from tame_langlands.plugins.arithmetic import ff_ops
from tame_langlands.plugins.arithmetic.linear import (
    Matrix,
    identity,
    inverse,
    matmul,
    matpow,
    rank,
    transpose,
)
from tame_langlands.utils.logger import get_logger

from .bar_character import BarCharacter, Element, OperatorGroup, frobenius_orbits
from .module import FormType, Summand, SymplecticModule

logger = get_logger(__name__)


def _negate(a: Matrix, p: int) -> Matrix:
    return tuple(tuple((-x) % p for x in row) for row in a)


def _block_diagonal(blocks: list[Matrix]) -> Matrix:
    size = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for row in b:
            rows.append((0,) * offset + tuple(row) + (0,) * (size - offset - len(row)))
        offset += len(b)
    return tuple(rows)


@dataclass(frozen=True)
class ConcreteSymplecticSpace:
    p: int
    group: OperatorGroup
    gram: Matrix
    actions: tuple[Matrix, ...]

    def __post_init__(self):
        p = self.p
        object.__setattr__(self, "gram", tuple(tuple(int(x) % p for x in row) for row in self.gram))
        object.__setattr__(
            self,
            "actions",
            tuple(tuple(tuple(int(x) % p for x in row) for row in a) for a in self.actions),
        )
        self._validate()

    def _validate(self) -> None:
        p, n, G = self.p, self.dimension, self.gram
        if self.group.order % p == 0:
            raise InputError(f"|C| = {self.group.order} is not prime to p = {p}")
        if any(len(row) != n for row in G):
            raise InputError("Gram matrix is not square")
        if len(self.actions) != self.group.rank:
            raise InputError(f"need {self.group.rank} action matrices, got {len(self.actions)}")
        for i in range(n):
            if G[i][i]:
                raise DegenerateFormError("form is not alternating")
            for j in range(i):
                if (G[i][j] + G[j][i]) % p:
                    raise DegenerateFormError("form is not alternating")
        if rank(G, p) != n:
            raise DegenerateFormError("form is degenerate")
        for a, order in zip(self.actions, self.group.orders):
            if len(a) != n or any(len(row) != n for row in a):
                raise InputError("action matrix has the wrong size")
            if n and matmul(matmul(transpose(a), G, p), a, p) != G:
                raise DegenerateFormError("action does not preserve the form")
            if n and matpow(a, order, p) != identity(n):
                raise InputError(f"action matrix does not have order dividing {order}")
        for a in self.actions:
            for b in self.actions:
                if n and matmul(a, b, p) != matmul(b, a, p):
                    raise InputError("action matrices do not commute")

    @property
    def dimension(self) -> int:
        return len(self.gram)

    def form(self, u, v) -> int:
        G, p = self.gram, self.p
        return sum(u[i] * G[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v))) % p

    @cached_property
    def element_matrices(self) -> dict[Element, Matrix]:
        """The matrix of every element of C"""
        p, n = self.p, self.dimension
        out = {}
        for x in self.group.elements():
            m = identity(n)
            for a, k in zip(self.actions, x):
                if k and n:
                    m = matmul(m, matpow(a, k, p), p)
            out[x] = m
        return out

    def action_of(self, x: Element) -> Matrix:
        return self.element_matrices[self.group.normalize(x)]

    def literal(self) -> str:
        def rows(m: Matrix) -> str:
            return ";".join(",".join(str(x) for x in row) for row in m) or "-"

        parts = [f"space p={self.p} C={self.group.literal()} dim={self.dimension} gram={rows(self.gram)}"]
        parts.extend(f"act={rows(a)}" for a in self.actions)
        return " ".join(parts)


def negate_form(space: ConcreteSymplecticSpace) -> ConcreteSymplecticSpace:
    """(M, -h)"""
    return ConcreteSymplecticSpace(space.p, space.group, _negate(space.gram, space.p), space.actions)


def orthogonal_sum(*spaces: ConcreteSymplecticSpace) -> ConcreteSymplecticSpace:
    if not spaces:
        raise InputError("orthogonal sum of nothing")
    first = spaces[0]
    if any((s.p, s.group) != (first.p, first.group) for s in spaces):
        raise InputError("spaces over different operator groups")
    actions = tuple(_block_diagonal([s.actions[i] for s in spaces]) for i in range(first.group.rank))
    return ConcreteSymplecticSpace(first.p, first.group, _block_diagonal([s.gram for s in spaces]), actions)


def _hyperbolic_gram(n: int, p: int) -> Matrix:
    rows = []
    for i in range(2 * n):
        row = [0] * (2 * n)
        if i < n:
            row[n + i] = 1
        else:
            row[i - n] = p - 1
        rows.append(tuple(row))
    return tuple(rows)


def _hyperbolic_actions(actions: list[Matrix], p: int) -> tuple[Matrix, ...]:
    """a -> diag(a, a^-T)"""
    return tuple(_block_diagonal([a, transpose(inverse(a, p))]) for a in actions)


def hyperbolic_space(space: ConcreteSymplecticSpace) -> ConcreteSymplecticSpace:
    """H(M) = M + M^* with the standard hyperbolic form"""
    n = space.dimension
    return ConcreteSymplecticSpace(
        space.p, space.group, _hyperbolic_gram(n, space.p), _hyperbolic_actions(list(space.actions), space.p)
    )


# characters realized over F_{p^k}


def character_value(chi: BarCharacter, x: Element) -> int:
    """chi(x) as an ff_ops code in F_{p^k}, k = [k[chi] : F_p]"""
    field = ff_ops(chi.p, chi.degree)
    w = field.element_of_order(chi.order)
    return field.pow(w, chi.value_exponent(x))


def multiplication_matrix(chi: BarCharacter, x: Element) -> Matrix:
    """F_p-matrix of v -> chi(x) v on F_{p^k} in the basis 1, t, ..., t^(k-1)"""
    field = ff_ops(chi.p, chi.degree)
    alpha = character_value(chi, x)
    columns = [field.coefficients(field.mul(alpha, chi.p**j)) for j in range(field.k)]
    return tuple(tuple(columns[j][i] for j in range(field.k)) for i in range(field.k))


def _character_actions(chi: BarCharacter) -> list[Matrix]:
    return [multiplication_matrix(chi, g) for g in chi.group.generators()]


def _anisotropic_gram(chi: BarCharacter) -> Matrix:
    """Gram of h(u, v) = Tr(delta u v^Q) on F_{Q^2}, with delta^(Q-1) = -1"""
    p, K = chi.p, chi.degree
    field = ff_ops(p, K)
    Q = p ** (K // 2)
    delta = 1 if p == 2 else field.exp((Q + 1) // 2)
    basis = [p**j for j in range(K)]
    return tuple(
        tuple(field.trace(field.mul(delta, field.mul(u, field.pow(v, Q)))) for v in basis) for u in basis
    )


def synthesize_summand(p: int, group: OperatorGroup, summand: Summand) -> ConcreteSymplecticSpace:
    chi = summand.character
    actions = _character_actions(chi)
    if summand.form is FormType.HYPERBOLIC:
        k = chi.degree
        return ConcreteSymplecticSpace(p, group, _hyperbolic_gram(k, p), _hyperbolic_actions(actions, p))
    return ConcreteSymplecticSpace(p, group, _anisotropic_gram(chi), tuple(actions))


def synthesize(M: SymplecticModule) -> ConcreteSymplecticSpace:
    """A concrete space realizing the tagged module M"""
    if M.is_zero():
        return ConcreteSymplecticSpace(M.p, M.group, (), tuple(() for _ in M.group.orders))
    return orthogonal_sum(*(synthesize_summand(M.p, M.group, s) for s in M.summands))


def isotypic_projector(space: ConcreteSymplecticSpace, chi: BarCharacter) -> Matrix:
    """
    Central idempotent of the Frobenius orbit of chi acting on the space

    e = |C|^-1 sum_c Tr(chi(c)^-1) A_c
    """
    p, n, group = space.p, space.dimension, space.group
    field = ff_ops(p, chi.degree)
    scale = pow(group.order, -1, p)
    acc = [[0] * n for _ in range(n)]
    for x, m in space.element_matrices.items():
        coefficient = field.trace(field.inv(character_value(chi, x))) * scale % p
        if not coefficient:
            continue
        for i in range(n):
            for j in range(n):
                acc[i][j] = (acc[i][j] + coefficient * m[i][j]) % p
    return tuple(tuple(row) for row in acc)


def isotypic_multiplicities(space: ConcreteSymplecticSpace) -> dict[tuple[int, ...], int]:
    """Canonical character exponents -> multiplicity of V_chi in the underlying C-module"""
    out = {}
    for chi in frobenius_orbits(space.group, space.p):
        projector = isotypic_projector(space, chi)
        r = rank(projector, space.p) if space.dimension else 0
        if r:
            out[chi.exps] = r // chi.degree
    return out


def decompose(space: ConcreteSymplecticSpace, bound_dim: int | None = None) -> SymplecticModule:
    """
    Orthogonal decomposition into tagged irreducibles

    An orbit O with O != O^-1 pairs with O^-1 into hyperbolic summands H(V_chi). A
    self-dual orbit of anisotropic type gives anisotropic summands, and a character of
    order <= 2 gives hyperbolic planes.

    Raises:
        BoundExceededError: if the dimension is above bound_dim
        DegenerateFormError: if the isotypic multiplicities admit no nondegenerate form
    """
    bound_dim = bound_dim if bound_dim is not None else int(get_config_value("bound_dim", 8))
    if space.dimension > bound_dim:
        raise BoundExceededError(f"dimension {space.dimension} exceeds bound {bound_dim}")
    p, group = space.p, space.group
    multiplicities = isotypic_multiplicities(space)
    summands: list[Summand] = []
    seen: set[tuple[int, ...]] = set()
    for exps, mult in sorted(multiplicities.items()):
        if exps in seen:
            continue
        chi = BarCharacter(group, p, exps)
        dual = chi.inverse().canonical()
        seen.update({exps, dual.exps})
        if chi.is_anisotropic_type():
            summands.extend([Summand(FormType.ANISOTROPIC, chi)] * mult)
        elif dual.exps == exps:
            if mult % 2:
                raise DegenerateFormError(f"character {chi.literal()} occurs with odd multiplicity")
            summands.extend([Summand(FormType.HYPERBOLIC, chi)] * (mult // 2))
        else:
            if multiplicities.get(dual.exps, 0) != mult:
                raise DegenerateFormError(f"characters {chi.literal()} and its dual occur unequally")
            summands.extend([Summand(FormType.HYPERBOLIC, chi)] * mult)
    logger.debug("decomposed %d-dim space into %d summands", space.dimension, len(summands))
    return SymplecticModule(p, group, tuple(summands))
