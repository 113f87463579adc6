"""Structural validation of portfolios."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .enums import ResourceScope, ViolationCode
from .portfolio import ActivityId, Portfolio, Project


@dataclass(frozen=True, slots=True)
class Violation:
    """One broken invariant."""

    code: ViolationCode
    message: str
    activity_ids: tuple[ActivityId, ...] = ()
    resource_id: int | None = None
    project_index: int | None = None

    @property
    def subject(self) -> str:
        """Offending id rendered for humans."""
        if self.activity_ids:
            return ",".join(a.label for a in self.activity_ids)
        if self.resource_id is not None:
            return f"R{self.resource_id}"
        if self.project_index is not None:
            return f"P{self.project_index + 1}"
        return "-"


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Violations found by validate_portfolio (empty = valid)."""

    violations: tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return bool(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def codes(self) -> set[ViolationCode]:
        return {v.code for v in self.violations}

    def by_code(self, code: ViolationCode) -> list[Violation]:
        return [v for v in self.violations if v.code == code]


def validate_portfolio(portfolio: Portfolio) -> ValidationReport:
    """Check every structural invariant of ``portfolio``.

    Pure: the input is not mutated and equal inputs yield equal reports.

    Returns:
        ValidationReport listing each violation with its code and offending id
    """
    found: list[Violation] = []
    found.extend(_check_resources(portfolio))
    for position, project in enumerate(portfolio.projects):
        found.extend(_check_project(portfolio, position, project))
    return ValidationReport(tuple(found))


def _check_resources(portfolio: Portfolio) -> list[Violation]:
    found: list[Violation] = []
    for position, resource in enumerate(portfolio.resources):
        if resource.id != position:
            found.append(
                Violation(
                    ViolationCode.RESOURCE_ID_MISMATCH,
                    f"Resource at position {position} has id {resource.id}",
                    resource_id=resource.id,
                )
            )
        if resource.capacity < 0:
            found.append(
                Violation(
                    ViolationCode.NEGATIVE_CAPACITY,
                    f"Capacity {resource.capacity} < 0",
                    resource_id=resource.id,
                )
            )
        if resource.scope == ResourceScope.LOCAL and (
            resource.project_index is None or not 0 <= resource.project_index < len(portfolio.projects)
        ):
            found.append(
                Violation(
                    ViolationCode.UNKNOWN_SCOPE_PROJECT,
                    f"Local resource owned by unknown project {resource.project_index}",
                    resource_id=resource.id,
                )
            )
    return found


def _check_project(portfolio: Portfolio, position: int, project: Project) -> list[Violation]:
    found: list[Violation] = []
    if project.project_index != position:
        found.append(
            Violation(
                ViolationCode.PROJECT_INDEX_MISMATCH,
                f"Project at position {position} has index {project.project_index}",
                project_index=position,
            )
        )
    if project.release_date < 0:
        found.append(
            Violation(
                ViolationCode.NEGATIVE_RELEASE_DATE,
                f"Release date {project.release_date} < 0",
                project_index=position,
            )
        )
    if len(project.activities) < 2:
        found.append(
            Violation(
                ViolationCode.EMPTY_PROJECT,
                "Project needs at least a dummy source and a dummy sink",
                project_index=position,
            )
        )
        return found

    count = len(project.activities)
    has_successor = [False] * count
    edges_ok: list[list[int]] = [[] for _ in range(count)]

    for index, activity in enumerate(project.activities):
        expected = ActivityId(position, index)
        if activity.id != expected:
            found.append(
                Violation(
                    ViolationCode.ACTIVITY_ID_MISMATCH,
                    f"Activity at {expected.label} carries id {activity.id.label}",
                    activity_ids=(activity.id,),
                )
            )
        if activity.duration < 0:
            found.append(
                Violation(
                    ViolationCode.NEGATIVE_DURATION,
                    f"Duration {activity.duration} < 0",
                    activity_ids=(expected,),
                )
            )
        found.extend(_check_demands(portfolio, position, expected, activity.demands))

        seen: set[ActivityId] = set()
        for pred in activity.predecessors:
            if pred in seen:
                found.append(
                    Violation(
                        ViolationCode.DUPLICATE_PREDECESSOR,
                        f"Predecessor {pred.label} listed twice",
                        activity_ids=(expected, pred),
                    )
                )
                continue
            seen.add(pred)
            if pred.project_index != position:
                found.append(
                    Violation(
                        ViolationCode.CROSS_PROJECT_PRECEDENCE,
                        f"Predecessor {pred.label} belongs to another project",
                        activity_ids=(expected, pred),
                    )
                )
            elif not 0 <= pred.activity_index < count:
                found.append(
                    Violation(
                        ViolationCode.UNKNOWN_PREDECESSOR,
                        f"Predecessor {pred.label} does not exist",
                        activity_ids=(expected, pred),
                    )
                )
            else:
                has_successor[pred.activity_index] = True
                edges_ok[pred.activity_index].append(index)

    found.extend(_check_terminals(position, project, has_successor))

    cycle = _find_cycle(edges_ok)
    if cycle:
        found.append(
            Violation(
                ViolationCode.CYCLE,
                "Precedence cycle: " + " -> ".join(ActivityId(position, k).label for k in cycle),
                activity_ids=tuple(ActivityId(position, k) for k in cycle[:-1]),
                project_index=position,
            )
        )
    return found


def _check_demands(
    portfolio: Portfolio,
    project_index: int,
    activity_id: ActivityId,
    demands: Mapping[int, int],
) -> list[Violation]:
    found: list[Violation] = []
    for resource_id, amount in demands.items():
        if amount < 0:
            found.append(
                Violation(
                    ViolationCode.NEGATIVE_DEMAND,
                    f"Demand {amount} < 0",
                    activity_ids=(activity_id,),
                    resource_id=resource_id,
                )
            )
        if not 0 <= resource_id < len(portfolio.resources):
            found.append(
                Violation(
                    ViolationCode.UNKNOWN_RESOURCE,
                    f"Demand on unknown resource {resource_id}",
                    activity_ids=(activity_id,),
                    resource_id=resource_id,
                )
            )
            continue
        resource = portfolio.resources[resource_id]
        if amount > 0 and not resource.is_visible_to(project_index):
            found.append(
                Violation(
                    ViolationCode.INVISIBLE_RESOURCE,
                    f"Resource {resource.label} is local to another project",
                    activity_ids=(activity_id,),
                    resource_id=resource_id,
                )
            )
        if amount > resource.capacity:
            found.append(
                Violation(
                    ViolationCode.DEMAND_EXCEEDS_CAPACITY,
                    f"Demand {amount} exceeds capacity {resource.capacity} of {resource.label}",
                    activity_ids=(activity_id,),
                    resource_id=resource_id,
                )
            )
    return found


def _check_terminals(position: int, project: Project, has_successor: list[bool]) -> list[Violation]:
    found: list[Violation] = []
    last = len(project.activities) - 1
    source, sink = project.activities[0], project.activities[last]

    if source.predecessors:
        found.append(
            Violation(
                ViolationCode.SOURCE_HAS_PREDECESSORS,
                "Dummy source must have no predecessors",
                activity_ids=(ActivityId(position, 0),),
            )
        )
    extra_sources = tuple(ActivityId(position, k) for k in range(1, last + 1) if not project.activities[k].predecessors)
    if extra_sources:
        found.append(
            Violation(
                ViolationCode.MULTIPLE_SOURCES,
                "Activities without predecessors besides the dummy source",
                activity_ids=extra_sources,
            )
        )
    if has_successor[last]:
        found.append(
            Violation(
                ViolationCode.SINK_HAS_SUCCESSORS,
                "Dummy sink must have no successors",
                activity_ids=(ActivityId(position, last),),
            )
        )
    extra_sinks = tuple(ActivityId(position, k) for k in range(last) if not has_successor[k])
    if extra_sinks:
        found.append(
            Violation(
                ViolationCode.MULTIPLE_SINKS,
                "Activities without successors besides the dummy sink",
                activity_ids=extra_sinks,
            )
        )
    for dummy in (source, sink):
        if not dummy.is_empty:
            found.append(
                Violation(
                    ViolationCode.DUMMY_NOT_EMPTY,
                    "Dummy activities must have duration 0 and no demands",
                    activity_ids=(dummy.id,),
                )
            )
    return found


def _find_cycle(successors: list[list[int]]) -> list[int]:
    """Return one cycle as a node list (first node repeated at the end), or []."""
    white, grey, black = 0, 1, 2
    color = [white] * len(successors)
    parent = [-1] * len(successors)

    for root in range(len(successors)):
        if color[root] != white:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        color[root] = grey
        while stack:
            node, child_pos = stack[-1]
            if child_pos < len(successors[node]):
                stack[-1] = (node, child_pos + 1)
                child = successors[node][child_pos]
                if color[child] == white:
                    color[child] = grey
                    parent[child] = node
                    stack.append((child, 0))
                elif color[child] == grey:
                    cycle = [node]
                    while cycle[-1] != child:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    cycle.append(child)
                    return cycle
            else:
                color[node] = black
                stack.pop()
    return []
