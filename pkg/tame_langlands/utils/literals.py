"""
Text literals

Every input the command line accepts is a single line: a kind word followed by key=value
tokens. The formats mirror the ``literal()`` methods of the corresponding objects, so any
printed object can be pasted back as input.

    ext p=3 f0=1 e=2 f=1 u=0
    module p=3 C=4x2 mu=1.0 varpi=0.1 summands=a:1.0;h:2.0
    space p=3 C=4 dim=2 gram=0,1;2,0 act=0,2;1,0
    datum p=3 f0=1 e=2 f=1 u=0 r=1 m=2 name=aniso V=module p=3 C=4x2 ...
    action G=5x5 A=4 aut=1,0;0,2
    heisenberg space p=3 C=4 dim=2 gram=0,1;2,0 act=0,2;1,0
    perms G=(0,1,2);(3,4,5) A=(1,2);(4,5)

A ``perms`` literal lists generators of G and of A in cycle notation on the points
0..n-1, separated by ';'; A acts by conjugation and must commute with itself, normalize G
and be a direct product of the cyclic groups its generators span.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import InputError
from tame_langlands.plugins.correspondence import RamificationDatum
from tame_langlands.plugins.finite_groups import FiniteGroupModel, abelian_group, parse_cycles
from tame_langlands.plugins.glauberman import OperatorAction, heisenberg_action, permutation_action
from tame_langlands.plugins.symplectic import (
    BarCharacter,
    ConcreteSymplecticSpace,
    FormType,
    OperatorGroup,
    Summand,
    SymplecticModule,
)
from tame_langlands.plugins.tame_fields import FieldSkeleton, TameExtensionSpec, make_extension


def split_tokens(text: str, kind: str, repeated: tuple[str, ...] = ()) -> dict[str, object]:
    """
    Split ``kind key=value ...`` into a dict; keys in ``repeated`` collect lists

    Raises:
        InputError: on a wrong kind word, a token without '=' or a duplicated key
    """
    words = text.split()
    if not words or words[0] != kind:
        raise InputError(f"expected a {kind!r} literal, got {text.strip()!r}")
    out: dict[str, object] = {key: [] for key in repeated}
    for word in words[1:]:
        key, sep, value = word.partition("=")
        if not sep:
            raise InputError(f"token {word!r} is not key=value")
        if key in repeated:
            out[key].append(value)
        elif key in out:
            raise InputError(f"duplicated key {key!r}")
        else:
            out[key] = value
    return out


def _reject_unknown(fields: dict, allowed: set[str], kind: str) -> None:
    unknown = sorted(set(fields) - allowed)
    if unknown:
        raise InputError(f"unknown keys in {kind} literal: {', '.join(unknown)}")


def int_field(fields: dict, key: str, default: int | None = None) -> int:
    value = fields.get(key)
    if value is None:
        if default is None:
            raise InputError(f"missing key {key!r}")
        return default
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(f"{key}={value!r} is not an integer") from exc


def _ints(text: str, sep: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(sep))
    except ValueError as exc:
        raise InputError(f"malformed integer list {text!r}") from exc


def parse_group(text: str) -> OperatorGroup:
    """``4x2`` -> C4 x C2"""
    return OperatorGroup(_ints(text, "x"))


def parse_element(text: str, group: OperatorGroup) -> tuple[int, ...]:
    """``1.0`` -> (1, 0)"""
    values = _ints(text, ".")
    if len(values) != group.rank:
        raise InputError(f"element {text!r} needs {group.rank} coordinates")
    return group.normalize(values)


def parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    if text in ("", "-"):
        return ()
    return tuple(_ints(row, ",") for row in text.split(";"))


def parse_field(text: str) -> TameExtensionSpec:
    fields = split_tokens(text, "ext")
    _reject_unknown(fields, {"p", "f0", "e", "f", "u"}, "ext")
    base = FieldSkeleton(int_field(fields, "p"), int_field(fields, "f0", 1))
    return make_extension(base, int_field(fields, "e", 1), int_field(fields, "f", 1), int_field(fields, "u", 0))


def parse_summand(text: str, p: int, group: OperatorGroup) -> Summand:
    form, sep, exps = text.partition(":")
    if not sep:
        raise InputError(f"summand {text!r} is not <form>:<exponents>")
    try:
        form_type = FormType(form)
    except ValueError as exc:
        raise InputError(f"unknown form {form!r}, expected 'h' or 'a'") from exc
    return Summand(form_type, BarCharacter(group, p, parse_element(exps, group)))


def parse_module(text: str) -> SymplecticModule:
    fields = split_tokens(text, "module")
    _reject_unknown(fields, {"p", "C", "mu", "varpi", "varpi_alpha", "summands"}, "module")
    p = int_field(fields, "p")
    group = parse_group(str(fields.get("C", "1")))
    summand_text = str(fields.get("summands", ""))
    summands = tuple(parse_summand(s, p, group) for s in summand_text.split(";") if s)
    markings = {
        name: parse_element(str(fields[name]), group) for name in ("mu", "varpi", "varpi_alpha") if name in fields
    }
    return SymplecticModule(p, group, summands, **markings)


def parse_space(text: str) -> ConcreteSymplecticSpace:
    fields = split_tokens(text, "space", repeated=("act",))
    _reject_unknown(fields, {"p", "C", "dim", "gram", "act"}, "space")
    gram = parse_matrix(str(fields.get("gram", "-")))
    if "dim" in fields and int_field(fields, "dim") != len(gram):
        raise InputError(f"dim={fields['dim']} does not match the Gram matrix")
    actions = tuple(parse_matrix(a) for a in fields["act"])
    return ConcreteSymplecticSpace(int_field(fields, "p"), parse_group(str(fields.get("C", "1"))), gram, actions)


def parse_datum(text: str) -> RamificationDatum:
    head, sep, module_text = text.partition(" V=")
    if not sep:
        raise InputError("datum literal needs a trailing V=<module literal>")
    fields = split_tokens(head, "datum")
    _reject_unknown(fields, {"p", "f0", "e", "f", "u", "r", "m", "name"}, "datum")
    base = FieldSkeleton(int_field(fields, "p"), int_field(fields, "f0", 1))
    E = make_extension(base, int_field(fields, "e", 1), int_field(fields, "f", 1), int_field(fields, "u", 0))
    V = parse_module(module_text)
    return RamificationDatum(E, int_field(fields, "r", 0), int_field(fields, "m", 1), V, name=str(fields.get("name", "")))


def _abelian_action(text: str) -> OperatorAction:
    fields = split_tokens(text, "action")
    _reject_unknown(fields, {"G", "A", "aut"}, "action")
    orders = _ints(str(fields.get("G", "1")), "x")
    G = abelian_group(orders)
    A = OperatorGroup((int_field(fields, "A"),))
    matrix = parse_matrix(str(fields.get("aut", "-")))
    if len(matrix) != len(orders) or any(len(row) != len(orders) for row in matrix):
        raise InputError(f"aut needs a {len(orders)}x{len(orders)} matrix")

    def image(x: tuple[int, ...]) -> tuple[int, ...]:
        # generator i goes to row i
        return tuple(sum(x[i] * matrix[i][j] for i in range(len(orders))) % n for j, n in enumerate(orders))

    perm = tuple(G.index(image(x)) for x in G.elements)
    return OperatorAction(A, G, (perm,))


def _cycle_list(text: str, degree: int | None) -> list:
    if not text:
        raise InputError("empty generator list")
    return [parse_cycles(part, degree) for part in text.split(";")]


def parse_perms(text: str) -> OperatorAction:
    fields = split_tokens(text, "perms")
    _reject_unknown(fields, {"n", "G", "A"}, "perms")
    for key in ("G", "A"):
        if key not in fields:
            raise InputError(f"missing key {key!r}")
    degree = int_field(fields, "n") if "n" in fields else None
    operators = _cycle_list(str(fields["A"]), degree)
    group = _cycle_list(str(fields["G"]), degree)
    size = max([degree or 0] + [g.size for g in group + operators])
    bound = int(get_config_value("bound_group_order", 2000))
    G = FiniteGroupModel.from_permutations(f"<{fields['G']}>", group, size, bound)
    return permutation_action(G, operators)


def parse_action(text: str) -> OperatorAction:
    """An abelian ``action`` literal, a ``perms`` literal or a ``heisenberg <space literal>``"""
    stripped = text.strip()
    if stripped.startswith("perms "):
        return parse_perms(stripped)
    if stripped.startswith("heisenberg "):
        return heisenberg_action(parse_space(stripped[len("heisenberg ") :]))
    return _abelian_action(stripped)


PARSERS = {
    "ext": parse_field,
    "module": parse_module,
    "space": parse_space,
    "datum": parse_datum,
    "action": parse_action,
    "heisenberg": parse_action,
    "perms": parse_action,
}


def parse_any(text: str):
    kind = text.split(maxsplit=1)[0] if text.strip() else ""
    parser = PARSERS.get(kind)
    if parser is None:
        raise InputError(f"unknown literal kind {kind!r}")
    return parser(text)


def read_literals(path: str | Path) -> Iterator[tuple[int, str]]:
    """Non-blank, non-comment lines of a literal file with their line numbers"""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped
