"""Schedule export and import (CSV and JSON).

Records carry the 1-based project number and the activity index, matching
activity labels such as ``1.3``. CSV ends with a ``# TMS=<int>`` line; JSON
holds ``tms`` and an ``assignments`` list.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Mapping
from typing import Any, Final, TextIO

from ..exceptions import ParseError
from ..models.enums import ExportFormat
from ..models.portfolio import ActivityId, Portfolio
from ..models.schedule import Schedule

_LOGGER = logging.getLogger(__name__)

CSV_HEADER: Final = ("project", "activity", "start", "finish")
TMS_PREFIX: Final = "# TMS="


def _records(schedule: Schedule, portfolio: Portfolio) -> list[tuple[int, int, int, int]]:
    return [
        (aid.project_index + 1, aid.activity_index, schedule.start(aid), schedule.finish(aid))
        for aid in portfolio.activity_ids()
        if aid in schedule.starts
    ]


def export_schedule(schedule: Schedule, portfolio: Portfolio, fmt: ExportFormat = ExportFormat.CSV) -> str:
    """Render ``schedule`` in canonical activity order.

    Equal inputs give byte-identical output.
    """
    records = _records(schedule, portfolio)
    if fmt == ExportFormat.JSON:
        document: dict[str, Any] = {
            "tms": schedule.tms,
            "assignments": [
                {"project": p, "activity": a, "start": s, "finish": f} for p, a, s, f in records
            ],
        }
        return json.dumps(document, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(records)
    buffer.write(f"{TMS_PREFIX}{schedule.tms}\n")
    return buffer.getvalue()


def _activity_id(project: int, activity: int, line_number: int | None) -> ActivityId:
    if project < 1 or activity < 0:
        raise ParseError(f"bad activity {project}.{activity}", line_number, "project >= 1 and activity >= 0")
    return ActivityId(project - 1, activity)


def _json_int(item: Mapping[str, Any], key: str) -> int:
    value = item[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{key} {value!r} is not an integer", expected="integer project, activity and start")
    return value


def import_schedule(source: TextIO | str, fmt: ExportFormat = ExportFormat.CSV) -> dict[ActivityId, int]:
    """Read an exported schedule back into a start-time map.

    Finish columns and the TMS line are ignored; they are derived data.

    Raises:
        ParseError: On malformed content or a repeated activity
    """
    text = source if isinstance(source, str) else source.read()
    starts: dict[ActivityId, int] = {}

    def add(aid: ActivityId, start: int, line_number: int | None) -> None:
        if aid in starts:
            raise ParseError(f"activity {aid.label} listed twice", line_number)
        starts[aid] = start

    if fmt == ExportFormat.JSON:
        try:
            document = json.loads(text)
            assignments = document["assignments"]
            for item in assignments:
                aid = _activity_id(_json_int(item, "project"), _json_int(item, "activity"), None)
                add(aid, _json_int(item, "start"), None)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"invalid schedule JSON: {e}", expected="tms and assignments keys") from None
        return starts

    header_seen = False
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = next(csv.reader([line]))
        if not header_seen:
            if tuple(f.strip() for f in fields) != CSV_HEADER:
                raise ParseError(f"bad header {line!r}", line_number, ",".join(CSV_HEADER))
            header_seen = True
            continue
        if len(fields) != len(CSV_HEADER):
            raise ParseError(f"{len(fields)} fields", line_number, f"{len(CSV_HEADER)} fields")
        try:
            project, activity, start, _finish = (int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line_number, "integers") from None
        add(_activity_id(project, activity, line_number), start, line_number)
    if not header_seen:
        raise ParseError("missing header", expected=",".join(CSV_HEADER))
    _LOGGER.debug("Imported %d start times", len(starts))
    return starts
