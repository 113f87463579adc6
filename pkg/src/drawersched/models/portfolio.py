"""Portfolio, project, activity and resource data structures.

All types are immutable after construction. Activities are addressed by
``ActivityId(project_index, activity_index)``; index 0 of every project is the
dummy source and the last index is the dummy sink, so PSPLIB node ``j`` of a
project maps to ``activity_index = j - 1``.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .enums import ResourceScope

ResourceId = int


@dataclass(frozen=True, slots=True, order=True)
class ActivityId:
    """Position of an activity inside a portfolio (canonical ordering)."""

    project_index: int
    activity_index: int

    def __post_init__(self) -> None:
        if self.project_index < 0 or self.activity_index < 0:
            raise ValueError(f"ActivityId indices must be non-negative, got {self.project_index}.{self.activity_index}")

    @property
    def label(self) -> str:
        """Human label with 1-based project number, e.g. ``"1.3"``."""
        return f"{self.project_index + 1}.{self.activity_index}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, slots=True)
class Activity:
    """Single-mode, non-preemptive activity."""

    id: ActivityId
    duration: int
    demands: Mapping[ResourceId, int] = field(default_factory=dict)
    predecessors: tuple[ActivityId, ...] = ()

    def demand(self, resource_id: ResourceId) -> int:
        """Units per period required of ``resource_id`` (0 when absent)."""
        return self.demands.get(resource_id, 0)

    @property
    def total_demand(self) -> int:
        """Sum of per-period demands over all resources."""
        return sum(self.demands.values())

    @property
    def is_empty(self) -> bool:
        """True for zero-duration activities that consume nothing."""
        return self.duration == 0 and not any(self.demands.values())


@dataclass(frozen=True, slots=True)
class Resource:
    """Renewable resource with a constant per-period capacity."""

    id: ResourceId
    scope: ResourceScope
    capacity: int
    project_index: int | None = None  # owner, LOCAL only
    name: str = ""

    def is_visible_to(self, project_index: int) -> bool:
        """Whether activities of ``project_index`` may demand this resource."""
        return self.scope == ResourceScope.GLOBAL or self.project_index == project_index

    @property
    def label(self) -> str:
        """Display name, falling back to ``R<id>``."""
        return self.name or f"R{self.id}"


@dataclass(frozen=True, slots=True)
class Project:
    """Project: activity network plus release date.

    ``declared_capacities`` keeps the per-resource availabilities read from a
    PSPLIB file (keyed by the file's resource order). It is only meaningful for a
    freshly parsed project whose demand keys are still file-local indices.
    """

    project_index: int
    name: str
    activities: tuple[Activity, ...]
    release_date: int = 0
    declared_capacities: tuple[int, ...] = ()

    @property
    def source(self) -> Activity:
        return self.activities[0]

    @property
    def sink(self) -> Activity:
        return self.activities[-1]

    def __len__(self) -> int:
        return len(self.activities)

    @classmethod
    def from_activities(
        cls,
        project_index: int,
        durations: Sequence[int],
        demands: Sequence[Mapping[ResourceId, int]] | None = None,
        predecessors: Sequence[Sequence[int]] | None = None,
        *,
        release_date: int = 0,
        name: str | None = None,
        declared_capacities: Sequence[int] = (),
    ) -> Project:
        """Build a normalized project from its real activities.

        Real activity ``k`` (1-based, as in ``predecessors``) becomes
        ``activity_index = k``. A dummy source is inserted at index 0 and a dummy
        sink at the end; activities without predecessors follow the source and
        activities without successors precede the sink.

        Args:
            project_index: Position of the project in its portfolio
            durations: Duration of each real activity
            demands: Per-activity demand maps (default: no demands)
            predecessors: Per-activity lists of 1-based real predecessor numbers
            release_date: Earliest period any activity may start
            name: Project name (default ``P<project_index+1>``)
            declared_capacities: Capacities to carry along (see class docs)

        Returns:
            Project with ``len(durations) + 2`` activities
        """
        count = len(durations)
        demands = demands if demands is not None else [{} for _ in range(count)]
        predecessors = predecessors if predecessors is not None else [() for _ in range(count)]
        if len(demands) != count or len(predecessors) != count:
            raise ValueError("durations, demands and predecessors must have equal length")

        def aid(index: int) -> ActivityId:
            return ActivityId(project_index, index)

        has_successor = [False] * (count + 1)
        for preds in predecessors:
            for k in preds:
                if not 1 <= k <= count:
                    raise ValueError(f"Predecessor {k} out of range 1..{count}")
                has_successor[k] = True

        activities = [Activity(aid(0), 0)]
        for k in range(1, count + 1):
            preds = tuple(aid(q) for q in predecessors[k - 1]) or (aid(0),)
            activities.append(Activity(aid(k), durations[k - 1], dict(demands[k - 1]), preds))
        sink_preds = tuple(aid(k) for k in range(1, count + 1) if not has_successor[k]) or (aid(0),)
        activities.append(Activity(aid(count + 1), 0, {}, sink_preds))

        return cls(
            project_index=project_index,
            name=name if name is not None else f"P{project_index + 1}",
            activities=tuple(activities),
            release_date=release_date,
            declared_capacities=tuple(declared_capacities),
        )


@dataclass(frozen=True, slots=True)
class Portfolio:
    """A set of projects sharing renewable resources."""

    projects: tuple[Project, ...] = ()
    resources: tuple[Resource, ...] = ()

    def activity(self, activity_id: ActivityId) -> Activity:
        """Look up an activity by id.

        Raises:
            KeyError: If the id does not exist in this portfolio
        """
        try:
            return self.projects[activity_id.project_index].activities[activity_id.activity_index]
        except IndexError as e:
            raise KeyError(activity_id) from e

    def __contains__(self, activity_id: object) -> bool:
        if not isinstance(activity_id, ActivityId):
            return False
        return activity_id.project_index < len(self.projects) and activity_id.activity_index < len(
            self.projects[activity_id.project_index].activities
        )

    def iter_activities(self) -> Iterator[Activity]:
        """All activities in canonical (project, activity) order."""
        for project in self.projects:
            yield from project.activities

    def activity_ids(self) -> list[ActivityId]:
        """All activity ids in canonical order."""
        return [a.id for a in self.iter_activities()]

    @property
    def activity_count(self) -> int:
        return sum(len(p.activities) for p in self.projects)

    def resource(self, resource_id: ResourceId) -> Resource:
        """Look up a resource by its dense id."""
        return self.resources[resource_id]

    def successors(self) -> dict[ActivityId, list[ActivityId]]:
        """Successor lists derived from predecessor lists (canonical order)."""
        result: dict[ActivityId, list[ActivityId]] = {a.id: [] for a in self.iter_activities()}
        for activity in self.iter_activities():
            for pred in activity.predecessors:
                if pred in result:
                    result[pred].append(activity.id)
        return result

    @property
    def max_release_date(self) -> int:
        return max((p.release_date for p in self.projects), default=0)

    @property
    def total_duration(self) -> int:
        return sum(a.duration for a in self.iter_activities())


def portfolio_from_project(project: Project) -> Portfolio:
    """Wrap a freshly parsed single project as a portfolio of local resources.

    Demand keys of ``project`` must be indices into ``declared_capacities``.
    """
    resources = tuple(
        Resource(id=k, scope=ResourceScope.LOCAL, capacity=cap, project_index=0, name=f"P1.R{k + 1}")
        for k, cap in enumerate(project.declared_capacities)
    )
    activities = tuple(
        Activity(
            id=ActivityId(0, a.id.activity_index),
            duration=a.duration,
            demands=dict(a.demands),
            predecessors=tuple(ActivityId(0, q.activity_index) for q in a.predecessors),
        )
        for a in project.activities
    )
    normalized = Project(
        project_index=0,
        name=project.name,
        activities=activities,
        release_date=project.release_date,
        declared_capacities=project.declared_capacities,
    )
    return Portfolio(projects=(normalized,), resources=resources)
