"""Best-known TMS tables (CSV ``instance_id,method,tms``)."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..exceptions import ParseError
from .text_file import read_text_file

_LOGGER = logging.getLogger(__name__)

PACKAGED_TABLE = "best_known_mpsplib.csv"


@dataclass(frozen=True, slots=True)
class BestKnown:
    """Best published result for one benchmark instance."""

    instance_id: str
    method: str
    tms: int

    def __post_init__(self) -> None:
        if self.tms < 0:
            raise ValueError(f"tms must be >= 0, got {self.tms}")


def _data_lines(lines: Iterable[str]) -> Iterable[tuple[int, str]]:
    for number, line in enumerate(lines, start=1):
        if line.strip() and not line.lstrip().startswith("#"):
            yield number, line


def parse_best_known(text: str) -> dict[str, BestKnown]:
    """Parse a best-known table.

    Lines starting with ``#`` are comments. The header row is required.

    Raises:
        ParseError: On a missing header, a short row, a non-integer TMS or a duplicate id
    """
    rows = list(_data_lines(io.StringIO(text)))
    if not rows:
        raise ParseError("empty best-known table", expected="instance_id,method,tms header")
    header_line, header = rows[0]
    if [h.strip() for h in header.split(",")] != ["instance_id", "method", "tms"]:
        raise ParseError(f"bad header {header.strip()!r}", header_line, "instance_id,method,tms")

    table: dict[str, BestKnown] = {}
    for line_number, line in rows[1:]:
        fields = next(csv.reader([line]))
        if len(fields) != 3:
            raise ParseError(f"{len(fields)} fields", line_number, "3 fields")
        instance_id, method, tms_text = (f.strip() for f in fields)
        try:
            tms = int(tms_text)
        except ValueError:
            raise ParseError(f"TMS {tms_text!r} is not an integer", line_number, "integer TMS") from None
        if instance_id in table:
            raise ParseError(f"duplicate instance id {instance_id!r}", line_number)
        table[instance_id] = BestKnown(instance_id, method, tms)
    return table


def load_best_known(path: str | Path | None = None) -> dict[str, BestKnown]:
    """Load a best-known table, defaulting to the packaged MPSPLib fixture.

    Raises:
        MissingFileError: If ``path`` does not exist
        ParseError: If the table is malformed or not UTF-8
    """
    if path is None:
        text = resources.files("drawersched").joinpath("data", PACKAGED_TABLE).read_text(encoding="utf-8")
    else:
        text = read_text_file(path, "Best-known table")
    table = parse_best_known(text)
    _LOGGER.debug("Loaded %d best-known entries from %s", len(table), path or PACKAGED_TABLE)
    return table
