"""Portfolio descriptors: which ``.sm`` projects form a portfolio.

Line-oriented UTF-8, ``#`` starts a comment::

    global 0 2
    project j30/j301_1.sm release 0
    project j30/j302_3.sm release 5

Resource ids of the built portfolio: pooled globals first (ascending file
index), then the local resources of each project in project order and file
index order.
"""

from __future__ import annotations

import logging
import shlex
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from ..exceptions import CapacityMismatchError, MissingFileError, ParseError
from ..models.enums import ResourceScope
from ..models.portfolio import Activity, ActivityId, Portfolio, Project, Resource, portfolio_from_project
from .sm import parse_sm
from .text_file import read_text_file

_LOGGER = logging.getLogger(__name__)

SM_SUFFIX = ".sm"


@dataclass(frozen=True, slots=True)
class DescriptorEntry:
    """One ``project`` line."""

    path: str
    release_date: int
    line_number: int = 0

    def __post_init__(self) -> None:
        if self.release_date < 0:
            raise ValueError(f"release_date must be >= 0, got {self.release_date}")


@dataclass(frozen=True, slots=True)
class PortfolioDescriptor:
    """Parsed descriptor: project files and pooled resource indices."""

    entries: tuple[DescriptorEntry, ...] = ()
    global_resource_indices: frozenset[int] = frozenset()
    global_line: int = 0


def _int(token: str, line_number: int, expected: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{token!r} is not an integer", line_number, expected) from None
    if value < 0:
        raise ParseError(f"{value} is negative", line_number, expected)
    return value


def parse_descriptor(source: TextIO | str) -> PortfolioDescriptor:
    """Parse descriptor text.

    Raises:
        ParseError: On an unknown keyword, a malformed line or a second ``global`` line
    """
    text = source if isinstance(source, str) else source.read()
    entries: list[DescriptorEntry] = []
    globals_: frozenset[int] | None = None
    global_line = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(line, comments=True)
        except ValueError as e:
            raise ParseError(str(e), line_number) from None
        if not tokens:
            continue
        keyword = tokens[0]
        if keyword == "global":
            if globals_ is not None:
                raise ParseError("second global line", line_number, "a single global line")
            globals_ = frozenset(_int(t, line_number, "resource index >= 0") for t in tokens[1:])
            global_line = line_number
        elif keyword == "project":
            if len(tokens) != 4 or tokens[2] != "release":
                raise ParseError(
                    f"malformed project line {line.strip()!r}", line_number, "project <path> release <int>"
                )
            entries.append(DescriptorEntry(tokens[1], _int(tokens[3], line_number, "release date >= 0"), line_number))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line_number, "global or project")
    return PortfolioDescriptor(tuple(entries), globals_ or frozenset(), global_line)


def parse_portfolio(source: TextIO | str, base_dir: str | Path, *, pool_sum: bool = False) -> Portfolio:
    """Build a portfolio from a descriptor.

    Args:
        source: Descriptor text stream or contents
        base_dir: Directory relative project paths are resolved against
        pool_sum: Pool a global resource with the sum of the project capacities
            instead of requiring them to agree

    Returns:
        Portfolio with one shared resource per global index and per-project
        local resources for every other index

    Raises:
        ParseError: On a malformed or non-UTF-8 project file, or a global index a project lacks
        MissingFileError: If a project file does not exist
        CapacityMismatchError: If projects disagree on a global capacity (without ``pool_sum``)
    """
    descriptor = parse_descriptor(source)
    base = Path(base_dir)
    parsed: list[Project] = []
    for index, entry in enumerate(descriptor.entries):
        path = Path(entry.path)
        if not path.is_absolute():
            path = base / path
        if not path.is_file():
            raise MissingFileError(f"line {entry.line_number}: project file not found: {path}")
        text = read_text_file(path, "Project file")
        try:
            project = parse_sm(text, project_index=index)
        except ParseError as e:
            raise e.in_file(path) from e
        parsed.append(project)

    portfolio = assemble_portfolio(parsed, descriptor, pool_sum=pool_sum)
    _LOGGER.info(
        "Loaded portfolio: %d project(s), %d activities, %d resource(s) (%d global)",
        len(portfolio.projects),
        portfolio.activity_count,
        len(portfolio.resources),
        len(descriptor.global_resource_indices),
    )
    return portfolio


def assemble_portfolio(
    projects: list[Project],
    descriptor: PortfolioDescriptor,
    *,
    pool_sum: bool = False,
) -> Portfolio:
    """Map file-local resource indices of parsed projects to portfolio resources.

    ``projects[i]`` takes the release date of ``descriptor.entries[i]``.
    """
    globals_ = sorted(descriptor.global_resource_indices)
    resources: list[Resource] = []
    global_ids: dict[int, int] = {}
    for k in globals_:
        capacities = []
        for project in projects:
            if k >= len(project.declared_capacities):
                raise ParseError(
                    f"global index {k} but project {project.name} has {len(project.declared_capacities)} resources",
                    descriptor.global_line or None,
                )
            capacities.append(project.declared_capacities[k])
        if pool_sum:
            capacity = sum(capacities)
        elif len(set(capacities)) > 1:
            raise CapacityMismatchError(f"Projects declare capacities {capacities} for global resource index {k}")
        else:
            capacity = capacities[0] if capacities else 0
        global_ids[k] = len(resources)
        resources.append(Resource(len(resources), ResourceScope.GLOBAL, capacity, name=f"G{k + 1}"))

    built: list[Project] = []
    for p, (project, entry) in enumerate(zip(projects, descriptor.entries, strict=True)):
        mapping = dict(global_ids)
        for k, capacity in enumerate(project.declared_capacities):
            if k in global_ids:
                continue
            mapping[k] = len(resources)
            resources.append(Resource(len(resources), ResourceScope.LOCAL, capacity, p, f"P{p + 1}.R{k + 1}"))
        activities = tuple(
            Activity(
                id=ActivityId(p, a.id.activity_index),
                duration=a.duration,
                demands={mapping[k]: amount for k, amount in a.demands.items()},
                predecessors=tuple(ActivityId(p, q.activity_index) for q in a.predecessors),
            )
            for a in project.activities
        )
        built.append(
            Project(
                project_index=p,
                name=project.name,
                activities=activities,
                release_date=entry.release_date,
                declared_capacities=project.declared_capacities,
            )
        )
    return Portfolio(projects=tuple(built), resources=tuple(resources))


def load_portfolio(path: str | Path, *, pool_sum: bool = False) -> Portfolio:
    """Load a descriptor, or a single ``.sm`` file as a one-project portfolio.

    Raises:
        MissingFileError: If ``path`` or a referenced project file does not exist
        ParseError: On malformed or non-UTF-8 content, naming the offending file
        CapacityMismatchError: See parse_portfolio
    """
    file = Path(path)
    text = read_text_file(file, "Instance file")
    if file.suffix.lower() == SM_SUFFIX:
        try:
            return portfolio_from_project(parse_sm(text))
        except ParseError as e:
            raise e.in_file(file) from e
    return parse_portfolio(text, file.parent, pool_sum=pool_sum)
