"""
Tame Weil Quotient

A finite metacyclic quotient <s, t | s^N = 1, t s t^-1 = s^q, t^R = 1> of the tame Weil group,
and the discriminant characters d_{E/F} = det Ind 1 computed inside it.

The embeddings of E = F(zeta_E, varpi_E) are labelled (i, k) with i mod f and k mod N,
N = e(q^f - 1): zeta_E goes to zeta^(q^i) and varpi_E to omega^k (-varpi_F)^(1/e), where
omega^e = zeta. The inertia generator s moves k by q^f - 1; the Frobenius lift t fixes the
chosen roots of -varpi_F and raises roots of unity to the q-th power. With that choice t
restricts on the abelianization to the image of varpi_F, and s to a generator of the image
of mu_F.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from sympy.combinatorics import Permutation
from sympy.ntheory import n_order

from tame_langlands.exceptions import BoundExceededError, InputError
from tame_langlands.plugins.finite_groups.group_model import FiniteGroupModel

from .extension import FieldSkeleton, TameExtensionSpec, relative_spec, trivial_extension
from .norms import inclusion
from .torus import base_root_generator, base_uniformizer

MAX_WEIL_ORDER = 200_000

Point = tuple[int, int]


def tame_weil_model(F: FieldSkeleton, N: int, R: int | None = None) -> FiniteGroupModel:
    """
    The metacyclic group with elements (k, j) = s^k t^j

    Args:
        F: base field skeleton, giving q
        N: order of s; must be prime to p
        R: order of t; defaults to the order of q mod N and must be a multiple of it

    Raises:
        InputError: if N is not prime to p or R is not a multiple of the order of q
        BoundExceededError: if N * R exceeds MAX_WEIL_ORDER
    """
    if N < 1 or gcd(N, F.p) != 1:
        raise InputError(f"N={N} must be positive and prime to p={F.p}")
    r = 1 if N == 1 else n_order(F.q, N)
    R = r if R is None else R
    if R < 1 or R % r:
        raise InputError(f"R={R} must be a positive multiple of {r}, the order of q mod N")
    if N * R > MAX_WEIL_ORDER:
        raise BoundExceededError(f"Weil quotient of order {N * R} is too large")
    q_powers = [pow(F.q, j, N) for j in range(R)]

    def mul(x: Point, y: Point) -> Point:
        return ((x[0] + q_powers[x[1]] * y[0]) % N, (x[1] + y[1]) % R)

    elements = [(k, j) for j in range(R) for k in range(N)]
    gens = [(1 % N, 0), (0, 1 % R)]
    return FiniteGroupModel.from_elements(f"W(q={F.q},N={N},R={R})", elements, mul, (0, 0), generators=gens)


def weil_parameters(E: TameExtensionSpec) -> tuple[int, int]:
    """(N, R) for the smallest quotient through which W_F acts on the embeddings of E"""
    N = E.e * E.mu_order
    return N, 1 if N == 1 else n_order(E.q, N)


def _minus_one_shift(E: TameExtensionSpec) -> int:
    # -1 = zeta_E^((q_E - 1)/2) for odd p
    return 0 if E.p == 2 else E.mu_order // 2


def embedding_points(E: TameExtensionSpec) -> list[Point]:
    Q = max(E.mu_order, 1)
    shift = _minus_one_shift(E)
    points = []
    for i in range(E.f):
        start = (E.u * pow(E.q, i, Q) + shift) % Q
        points.extend((i, start + j * Q) for j in range(E.e))
    return points


def act_on_point(E: TameExtensionSpec, g: Point, x: Point) -> Point:
    """s^k t^j applied to the embedding x"""
    k, j = g
    i, w = x
    N = E.e * max(E.mu_order, 1)
    w = (pow(E.q, j, N) * w + k * max(E.mu_order, 1)) % N
    return ((i + j) % E.f, w)


def extension_subgroup(E: TameExtensionSpec, W: FiniteGroupModel) -> list[int]:
    """Indices of the stabilizer of the base embedding: the image of W_E"""
    base = embedding_points(E)[0]
    return [idx for idx, g in enumerate(W.elements) if act_on_point(E, g, base) == base]


def coset_permutation(E: TameExtensionSpec, W: FiniteGroupModel, g: int) -> Permutation:
    """Left multiplication by W.elements[g] on W/H, cosets labelled by the orbit of the base point"""
    base = embedding_points(E)[0]
    labels: dict[Point, int] = {}
    for element in W.elements:
        labels.setdefault(act_on_point(E, element, base), len(labels))
    if len(labels) != E.degree:
        raise InputError(f"{W.name} does not act transitively on the embeddings of {E.literal()}")
    image = [0] * len(labels)
    for point, label in labels.items():
        image[label] = labels[act_on_point(E, W.elements[g], point)]
    return Permutation(image)


def induced_determinant_signs(E: TameExtensionSpec) -> tuple[int, int]:
    """det Ind_H^W 1 at the generators s and t, i.e. the signs of their coset permutations"""
    N, R = weil_parameters(E)
    W = tame_weil_model(E.base, N, R)
    s = W.index((1 % N, 0))
    t = W.index((0, 1 % R))
    return coset_permutation(E, W, s).signature(), coset_permutation(E, W, t).signature()


def discriminant_character(E: TameExtensionSpec, L: TameExtensionSpec | None = None):
    """
    d_{E/L} as a character of L^x; L defaults to the base field F

    Returns:
        TameCharacter over L (over the trivial extension of F when L is omitted)
    """
    from tame_langlands.plugins.characters.tame_character import TameCharacter, transport

    if L is not None and not L.is_trivial():
        relative = relative_spec(E, L)
        return transport(discriminant_character(relative), L)
    base = trivial_extension(E.base) if L is None else L
    sign_s, sign_t = induced_determinant_signs(E)
    a = 0 if sign_s == 1 else (E.q - 1) // 2
    return TameCharacter(base, a, Fraction(0) if sign_t == 1 else Fraction(1, 2))


def discriminant_tower_check(E: TameExtensionSpec, L: TameExtensionSpec) -> bool:
    """d_{E/F} = d_{L/F}^[E:L] . (d_{E/L} o inclusion) at varpi_F and zeta_F"""
    from tame_langlands.plugins.characters.tame_character import TameCharacter

    F = trivial_extension(E.base)
    whole = discriminant_character(E)
    lower = discriminant_character(L)
    upper: TameCharacter = discriminant_character(E, L).precompose(inclusion(F, L))
    degree = E.degree // L.degree
    combined = lower**degree * upper
    return all(
        whole.turn_at(x) == combined.turn_at(x) for x in (base_uniformizer(F), base_root_generator(F))
    )
