"""Declarative drawer configuration files.

One drawer per line, in priority order; ``#`` starts a comment::

    name four-drawer
    drawer zero_slack latest
    drawer zero_slack !latest
    drawer !zero_slack latest
    drawer *

Atoms: ``*`` (catch-all, alone), ``zero_slack``/``!zero_slack``,
``latest``/``!latest`` and ``slack|duration|demand`` followed by one of
``< <= == != >= >`` and an integer.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Any, Final, TextIO

from ..exceptions import DrawerConfigError
from ..models.drawers import Comparison, DrawerConfig, DrawerPredicate
from ..models.enums import CompareOp
from .text_file import read_text_file

_LOGGER = logging.getLogger(__name__)

_NUMERIC_ATOM = re.compile(r"^(slack|duration|demand)(<=|>=|==|!=|<|>)(-?\d+)$")

# Numeric atom keyword -> DrawerPredicate field
_NUMERIC_FIELDS: Final = {"slack": "total_slack", "duration": "duration", "demand": "total_demand"}

_FLAG_ATOMS: Final = {
    "zero_slack": ("slack_is_zero", True),
    "!zero_slack": ("slack_is_zero", False),
    "latest": ("in_latest_project", True),
    "!latest": ("in_latest_project", False),
}


def _parse_predicate(atoms: list[str], line_number: int) -> DrawerPredicate:
    if atoms == ["*"]:
        return DrawerPredicate()
    if not atoms:
        raise DrawerConfigError(f"line {line_number}: drawer without atoms (use * for catch-all)")
    values: dict[str, Any] = {}
    for atom in atoms:
        if atom == "*":
            raise DrawerConfigError(f"line {line_number}: * must be the only atom of a drawer")
        if atom in _FLAG_ATOMS:
            key, flag = _FLAG_ATOMS[atom]
            value: Any = flag
        elif m := _NUMERIC_ATOM.match(atom):
            key = _NUMERIC_FIELDS[m.group(1)]
            value = Comparison(CompareOp(m.group(2)), int(m.group(3)))
        else:
            raise DrawerConfigError(f"line {line_number}: unknown atom {atom!r}")
        if key in values:
            raise DrawerConfigError(f"line {line_number}: atom {atom!r} repeats a constraint on {key}")
        values[key] = value
    return DrawerPredicate(**values)


def parse_drawer_config(source: TextIO | str, name: str = "custom") -> DrawerConfig:
    """Parse a drawer configuration.

    A ``name <word>`` line overrides ``name``. A configuration whose last
    drawer is not a catch-all is accepted with a warning.

    Raises:
        DrawerConfigError: On a malformed line or when no drawer is defined
    """
    text = source if isinstance(source, str) else source.read()
    drawers: list[DrawerPredicate] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, atoms = tokens[0], tokens[1:]
        if keyword == "drawer":
            drawers.append(_parse_predicate(atoms, line_number))
        elif keyword == "name" and len(atoms) == 1:
            name = atoms[0]
        else:
            raise DrawerConfigError(
                f"line {line_number}: expected 'drawer <atom>...' or 'name <word>', got {raw.strip()!r}"
            )
    if not drawers:
        raise DrawerConfigError("drawer configuration defines no drawers")
    config = DrawerConfig(tuple(drawers), name=name)
    if not config.is_exhaustive:
        _LOGGER.warning("Drawer configuration %r has no trailing catch-all; unmatched candidates will fail", name)
    return config


def render_drawer_config(config: DrawerConfig) -> str:
    """Inverse of parse_drawer_config."""
    lines = [f"name {config.name}"]
    lines.extend(f"drawer {predicate.describe()}" for predicate in config.drawers)
    return "\n".join(lines) + "\n"


def load_drawer_config(path: str | Path) -> DrawerConfig:
    """Read a drawer file, named after its stem unless it has a ``name`` line.

    Raises:
        MissingFileError: If ``path`` does not exist
        ParseError: If the file is not UTF-8
        DrawerConfigError: On malformed content
    """
    file = Path(path)
    return parse_drawer_config(read_text_file(file, "Drawer file"), name=file.stem)
