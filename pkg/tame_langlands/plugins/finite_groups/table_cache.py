"""
Character Table Cache

Line-oriented text files, one per group:

    group <name> order <N> classes <k>
    chi <i> conductor <c> values <coeffs of class 0>;<coeffs of class 1>;...

Coefficients are comma separated on the power basis of Z[zeta_c]. A file that does not
parse or does not match the group is logged and rebuilt.
"""

from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path

from tame_langlands.config.config_manager import get_config_manager
from tame_langlands.exceptions import InputError
from tame_langlands.plugins.arithmetic import Cyclotomic
from tame_langlands.utils.logger import get_logger, log_error

from .dixon import CharacterTable, dixon_character_table
from .group_model import FiniteGroupModel

logger = get_logger(__name__)

_SAFE = re.compile(r"[^A-Za-z0-9_.-]+")


def cache_path(name: str, cache_dir: str | Path | None = None) -> Path:
    directory = Path(cache_dir).expanduser() if cache_dir else get_config_manager().get_cache_dir()
    return directory / f"{_SAFE.sub('_', name)}.tbl"


def dumps_table(table: CharacterTable) -> str:
    lines = [f"group {table.group_name} order {table.order} classes {len(table.class_sizes)}"]
    for i, row in enumerate(table.rows):
        values = ";".join(",".join(str(c) for c in v.embed(table.conductor).coeffs) for v in row)
        lines.append(f"chi {i} conductor {table.conductor} values {values}")
    return "\n".join(lines) + "\n"


def loads_table(text: str, G: FiniteGroupModel) -> CharacterTable:
    """
    Parse a cached table and check it against G

    Raises:
        InputError: on any format or consistency problem
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("empty table file")
    header = lines[0].split()
    expected = ["group", G.name, "order", str(G.order), "classes", str(len(G.classes))]
    if header != expected:
        raise InputError(f"header {lines[0]!r} does not match {G.name}")
    rows = []
    conductor = None
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != 6 or parts[0] != "chi" or parts[1] != str(i) or parts[2] != "conductor" or parts[4] != "values":
            raise InputError(f"malformed row {line!r}")
        try:
            row_conductor = int(parts[3])
            cells = [tuple(int(c) for c in cell.split(",")) for cell in parts[5].split(";")]
        except ValueError as exc:
            raise InputError(f"malformed row {line!r}") from exc
        if conductor is not None and row_conductor != conductor:
            raise InputError("rows disagree on the conductor")
        conductor = row_conductor
        if len(cells) != len(G.classes):
            raise InputError(f"row {i} has {len(cells)} values for {len(G.classes)} classes")
        rows.append(tuple(Cyclotomic(row_conductor, cell) for cell in cells))
    if len(rows) != len(G.classes) or conductor is None:
        raise InputError(f"expected {len(G.classes)} rows, found {len(rows)}")
    return CharacterTable(G.name, G.order, tuple(G.class_sizes), conductor, tuple(rows))


def save_table(table: CharacterTable, cache_dir: str | Path | None = None) -> Path:
    """Write atomically through a temporary file in the cache directory"""
    path = cache_path(table.group_name, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as f:
        f.write(dumps_table(table))
    os.replace(tmp, path)
    return path


def load_table(G: FiniteGroupModel, cache_dir: str | Path | None = None) -> CharacterTable | None:
    path = cache_path(G.name, cache_dir)
    if not path.exists():
        return None
    try:
        table = loads_table(path.read_text(), G)
    except (InputError, OSError) as e:
        log_error(f"Discarding cached table {path}: {e}", "Table Cache")
        return None
    if not table.is_orthonormal():
        log_error(f"Discarding cached table {path}: rows are not orthonormal", "Table Cache")
        return None
    return table


def cached_character_table(
    G: FiniteGroupModel, cache_dir: str | Path | None = None, bound: int | None = None
) -> CharacterTable:
    """Character table from the cache, computing and storing it on a miss"""
    table = load_table(G, cache_dir)
    if table is not None:
        logger.debug("cache hit for %s", G.name)
        return table
    logger.debug("cache miss for %s", G.name)
    table = dixon_character_table(G, bound)
    try:
        save_table(table, cache_dir)
    except OSError as e:
        log_error(f"Could not write cache for {G.name}: {e}", "Table Cache")
    return table
