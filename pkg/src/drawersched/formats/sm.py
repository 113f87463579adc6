"""PSPLIB single-mode ``.sm`` files (renewable resources only).

Supported sections: the header (``jobs`` and ``renewable`` counts),
``PROJECT INFORMATION``, ``PRECEDENCE RELATIONS``, ``REQUESTS/DURATIONS`` and
``RESOURCEAVAILABILITIES``. PSPLIB job ``j`` becomes ``activity_index = j - 1``;
successor lists are inverted to predecessor lists (sorted ascending).
"""

from __future__ import annotations

import io
import logging
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import PurePath
from typing import TextIO

from ..exceptions import InconsistentCountsError, ParseError
from ..models.portfolio import Activity, ActivityId, Project

_LOGGER = logging.getLogger(__name__)

_RULE = "*" * 72
_JOBS_RE = re.compile(r"^jobs\b.*:\s*(\d+)", re.IGNORECASE)
_RENEWABLE_RE = re.compile(r"^-\s*renewable\s*:\s*(\d+)", re.IGNORECASE)
_BASEDATA_RE = re.compile(r"^file with basedata\s*:\s*(\S+)", re.IGNORECASE)


@dataclass(slots=True)
class _SmContent:
    """Raw values collected while scanning a file."""

    jobs: int | None = None
    renewable: int | None = None
    name: str | None = None
    release_date: int = 0
    successors: list[list[int]] = field(default_factory=list)
    successor_lines: list[int] = field(default_factory=list)
    durations: list[int] = field(default_factory=list)
    demands: list[list[int]] = field(default_factory=list)
    capacities: list[int] | None = None
    precedence_line: int = 0
    requests_line: int = 0


class _Lines:
    """Numbered, stripped, non-blank lines with one-line lookahead."""

    def __init__(self, text: str) -> None:
        self._items = [(n, line.strip()) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
        self._pos = 0

    def peek(self) -> tuple[int, str] | None:
        return self._items[self._pos] if self._pos < len(self._items) else None

    def next(self, expected: str) -> tuple[int, str]:
        item = self.peek()
        if item is None:
            last = self._items[-1][0] if self._items else 0
            raise ParseError("unexpected end of file", last + 1, expected)
        self._pos += 1
        return item

    def rows(self) -> Iterator[tuple[int, str]]:
        """Yield lines up to (not including) the next ``*`` rule."""
        while (item := self.peek()) is not None and not item[1].startswith("*"):
            self._pos += 1
            yield item


def _ints(line: str, line_number: int, expected: str) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", line_number, expected) from None


def parse_sm(source: TextIO | str, *, project_index: int = 0, name: str | None = None) -> Project:
    """Parse a PSPLIB ``.sm`` file into a Project.

    Demand keys of the result are indices into the file's renewable-resource
    list, and ``declared_capacities`` holds the file's availabilities; assigning
    global or local resource ids is left to the portfolio builder. The release
    date comes from the ``PROJECT INFORMATION`` row when present.

    Args:
        source: Text stream or file contents
        project_index: Index the activities are addressed with
        name: Project name (default: the basedata file stem, else ``P<index+1>``)

    Returns:
        Project with ``jobs`` activities, dummy source first and dummy sink last

    Raises:
        ParseError: On malformed content, with the offending line number
        InconsistentCountsError: When the declared job count differs from the parsed rows
    """
    text = source if isinstance(source, str) else source.read()
    content = _scan(_Lines(text))
    project = _build(content, project_index, name)
    _LOGGER.debug(
        "Parsed .sm project %s: %d activities, %d resources",
        project.name,
        len(project),
        len(project.declared_capacities),
    )
    return project


def _scan(lines: _Lines) -> _SmContent:
    content = _SmContent()
    while lines.peek() is not None:
        line_number, line = lines.next("section")
        upper = line.upper()
        if line.startswith("*"):
            continue
        if m := _BASEDATA_RE.match(line):
            content.name = PurePath(m.group(1)).stem
        elif m := _JOBS_RE.match(line):
            content.jobs = int(m.group(1))
        elif m := _RENEWABLE_RE.match(line):
            content.renewable = int(m.group(1))
        elif upper.startswith("PROJECT INFORMATION"):
            lines.next("project information header")
            for row_number, row in lines.rows():
                values = _ints(row, row_number, "pronr. #jobs rel.date duedate tardcost MPM-Time")
                if len(values) < 3:
                    raise ParseError("short project information row", row_number, "at least 3 integers")
                content.release_date = values[2]
        elif upper.startswith("PRECEDENCE RELATIONS"):
            content.precedence_line = line_number
            lines.next("precedence header")
            _scan_precedence(lines, content)
        elif upper.startswith("REQUESTS/DURATIONS"):
            content.requests_line = line_number
            lines.next("requests header")
            _scan_requests(lines, content)
        elif upper.startswith("RESOURCEAVAILABILITIES") or upper.startswith("RESOURCE AVAILABILITIES"):
            lines.next("resource header")
            row_number, row = lines.next("resource availabilities")
            content.capacities = _ints(row, row_number, "one capacity per renewable resource")
        else:
            _LOGGER.debug("Skipping line %d: %s", line_number, line)
    return content


def _scan_precedence(lines: _Lines, content: _SmContent) -> None:
    for line_number, row in lines.rows():
        values = _ints(row, line_number, "jobnr. #modes #successors successors")
        if len(values) < 3:
            raise ParseError("short precedence row", line_number, "jobnr. #modes #successors successors")
        job, modes, count, successors = values[0], values[1], values[2], values[3:]
        if job != len(content.successors) + 1:
            raise ParseError(f"job number {job} out of sequence", line_number, f"job {len(content.successors) + 1}")
        if modes != 1:
            raise ParseError(f"job {job} has {modes} modes", line_number, "single-mode job (1)")
        if len(successors) != count:
            raise ParseError(f"job {job} declares {count} successors, lists {len(successors)}", line_number)
        content.successors.append(successors)
        content.successor_lines.append(line_number)


def _scan_requests(lines: _Lines, content: _SmContent) -> None:
    item = lines.peek()
    if item is not None and item[1].startswith("-"):
        lines.next("dash rule")
    for line_number, row in lines.rows():
        values = _ints(row, line_number, "jobnr. mode duration demands")
        if len(values) < 3:
            raise ParseError("short request row", line_number, "jobnr. mode duration demands")
        job, duration, demands = values[0], values[2], values[3:]
        if job != len(content.durations) + 1:
            raise ParseError(f"job number {job} out of sequence", line_number, f"job {len(content.durations) + 1}")
        if content.renewable is not None and len(demands) != content.renewable:
            raise ParseError(
                f"job {job} lists {len(demands)} demands", line_number, f"{content.renewable} renewable demands"
            )
        content.durations.append(duration)
        content.demands.append(demands)


def _build(content: _SmContent, project_index: int, name: str | None) -> Project:
    if content.jobs is None:
        raise ParseError("missing job count header", expected="jobs (incl. supersource/sink ): <n>")
    if content.capacities is None:
        raise ParseError("missing RESOURCEAVAILABILITIES section", expected="RESOURCEAVAILABILITIES:")
    jobs = content.jobs
    if len(content.successors) != jobs:
        raise InconsistentCountsError(
            f"{jobs} jobs declared, {len(content.successors)} precedence rows", content.precedence_line or None
        )
    if len(content.durations) != jobs:
        raise InconsistentCountsError(
            f"{jobs} jobs declared, {len(content.durations)} request rows", content.requests_line or None
        )
    resource_count = len(content.capacities)
    if content.renewable is not None and resource_count != content.renewable:
        raise InconsistentCountsError(f"{content.renewable} renewable resources declared, {resource_count} capacities")
    for job, demands in enumerate(content.demands, start=1):
        if len(demands) != resource_count:
            raise InconsistentCountsError(f"job {job} lists {len(demands)} demands for {resource_count} resources")

    predecessors: list[list[int]] = [[] for _ in range(jobs)]
    for job, successors in enumerate(content.successors, start=1):
        for successor in successors:
            if not 1 <= successor <= jobs:
                raise ParseError(
                    f"successor {successor} of job {job} out of range",
                    content.successor_lines[job - 1],
                    f"job id in 1..{jobs}",
                )
            predecessors[successor - 1].append(job)

    activities = tuple(
        Activity(
            id=ActivityId(project_index, j),
            duration=content.durations[j],
            demands={k: amount for k, amount in enumerate(content.demands[j]) if amount},
            predecessors=tuple(ActivityId(project_index, q - 1) for q in sorted(predecessors[j])),
        )
        for j in range(jobs)
    )
    return Project(
        project_index=project_index,
        name=name or content.name or f"P{project_index + 1}",
        activities=activities,
        release_date=content.release_date,
        declared_capacities=tuple(content.capacities),
    )


def render_sm(project: Project, capacities: Sequence[int] | None = None) -> str:
    """Write ``project`` in the supported ``.sm`` subset.

    Demand keys must be indices into ``capacities`` (default: the project's
    declared capacities). ``parse_sm`` of the output reproduces the project as
    long as its predecessor lists are sorted and its demand maps hold no zeros.
    """
    caps = list(project.declared_capacities if capacities is None else capacities)
    jobs = len(project.activities)
    successors: list[list[int]] = [[] for _ in range(jobs)]
    for activity in project.activities:
        for pred in activity.predecessors:
            successors[pred.activity_index].append(activity.id.activity_index + 1)
    horizon = sum(a.duration for a in project.activities)
    real_jobs = max(jobs - 2, 0)

    out = io.StringIO()
    out.write(f"{_RULE}\n")
    out.write(f"file with basedata            : {project.name}.bas\n")
    out.write(f"{_RULE}\n")
    out.write("projects                      :  1\n")
    out.write(f"jobs (incl. supersource/sink ):  {jobs}\n")
    out.write(f"horizon                       :  {horizon}\n")
    out.write("RESOURCES\n")
    out.write(f"  - renewable                 :  {len(caps)}   R\n")
    out.write("  - nonrenewable              :  0   N\n")
    out.write("  - doubly constrained        :  0   D\n")
    out.write(f"{_RULE}\n")
    out.write("PROJECT INFORMATION:\n")
    out.write("pronr.  #jobs rel.date duedate tardcost  MPM-Time\n")
    out.write(f"    1     {real_jobs}      {project.release_date}       {horizon}        0       {horizon}\n")
    out.write(f"{_RULE}\n")
    out.write("PRECEDENCE RELATIONS:\n")
    out.write("jobnr.    #modes  #successors   successors\n")
    for j, succ in enumerate(successors, start=1):
        tail = "".join(f"   {s}" for s in sorted(succ))
        out.write(f"   {j}        1          {len(succ)}{tail}\n")
    out.write(f"{_RULE}\n")
    out.write("REQUESTS/DURATIONS:\n")
    out.write("jobnr. mode duration" + "".join(f"  R {k + 1}" for k in range(len(caps))) + "\n")
    out.write("-" * 72 + "\n")
    for j, activity in enumerate(project.activities, start=1):
        demands = "".join(f"    {activity.demand(k)}" for k in range(len(caps)))
        out.write(f"  {j}      1     {activity.duration}{demands}\n")
    out.write(f"{_RULE}\n")
    out.write("RESOURCEAVAILABILITIES:\n")
    out.write("".join(f"  R {k + 1}" for k in range(len(caps))) + "\n")
    out.write("".join(f"   {c}" for c in caps) + "\n")
    out.write(f"{_RULE}\n")
    return out.getvalue()
