"""Temporary (resource-free) schedules via the Critical Path Method.

The forward pass clamps every unscheduled activity to the current scheduling
time and its project's release date; definitively scheduled activities keep
their fixed start. The backward pass is anchored per project: the sink's latest
finish equals that project's own temporary finish, so each project keeps a
zero-slack path even when another project ends later.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..exceptions import InconsistentFixedError
from ..models.portfolio import ActivityId, Portfolio

_LOGGER = logging.getLogger(__name__)

FixedAssignments = Mapping[ActivityId, int]

UNFIXED = -1


@dataclass(frozen=True, slots=True)
class Network:
    """Portfolio compiled to flat, position-indexed lists.

    Positions follow canonical (project, activity) order, so each project
    occupies a contiguous block ``project_slices[p]``.
    """

    ids: tuple[ActivityId, ...]
    position: Mapping[ActivityId, int]
    duration: tuple[int, ...]
    release: tuple[int, ...]
    project_of: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]
    succs: tuple[tuple[int, ...], ...]
    topo_order: tuple[int, ...]
    project_slices: tuple[range, ...]
    demand: npt.NDArray[np.int64]  # (activities, resources)
    capacity: npt.NDArray[np.int64]  # (resources,)
    total_demand: tuple[int, ...]

    @classmethod
    def from_portfolio(cls, portfolio: Portfolio) -> Network:
        """Compile ``portfolio`` (assumed structurally valid)."""
        ids: list[ActivityId] = []
        slices: list[range] = []
        for project in portfolio.projects:
            begin = len(ids)
            ids.extend(a.id for a in project.activities)
            slices.append(range(begin, len(ids)))
        position = {aid: k for k, aid in enumerate(ids)}

        activities = list(portfolio.iter_activities())
        n = len(activities)
        preds = tuple(tuple(position[q] for q in a.predecessors) for a in activities)
        succ_lists: list[list[int]] = [[] for _ in range(n)]
        for k, pk in enumerate(preds):
            for q in pk:
                succ_lists[q].append(k)

        n_res = len(portfolio.resources)
        demand = np.zeros((n, n_res), dtype=np.int64)
        for k, a in enumerate(activities):
            for rid, amount in a.demands.items():
                demand[k, rid] = amount
        capacity = np.array([r.capacity for r in portfolio.resources], dtype=np.int64)

        return cls(
            ids=tuple(ids),
            position=position,
            duration=tuple(a.duration for a in activities),
            release=tuple(portfolio.projects[a.id.project_index].release_date for a in activities),
            project_of=tuple(a.id.project_index for a in activities),
            preds=preds,
            succs=tuple(tuple(s) for s in succ_lists),
            topo_order=_topological_order(preds),
            project_slices=tuple(slices),
            demand=demand,
            capacity=capacity,
            total_demand=tuple(int(v) for v in demand.sum(axis=1)) if n_res else (0,) * n,
        )

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def horizon_guard(self) -> int:
        """Σ durations + max release date: no valid run schedules past this."""
        return sum(self.duration) + max(self.release, default=0)

    def fixed_array(self, fixed: FixedAssignments) -> list[int]:
        """Position-indexed fixed starts, ``UNFIXED`` where not scheduled."""
        starts = [UNFIXED] * len(self.ids)
        for aid, start in fixed.items():
            starts[self.position[aid]] = start
        return starts


@dataclass(frozen=True, slots=True)
class ActivityTimes:
    """CPM times of one activity."""

    es: int
    ef: int
    ls: int
    lf: int

    @property
    def total_slack(self) -> int:
        return self.ls - self.es


@dataclass(frozen=True, slots=True)
class TemporarySchedule:
    """Result of one CPM pass; lists are indexed by network position."""

    network: Network
    es: Sequence[int]
    ef: Sequence[int]
    ls: Sequence[int]
    lf: Sequence[int]
    project_finish: tuple[int, ...]
    latest_project: int | None

    def __getitem__(self, activity_id: ActivityId) -> ActivityTimes:
        k = self.network.position[activity_id]
        return ActivityTimes(self.es[k], self.ef[k], self.ls[k], self.lf[k])

    def total_slack(self, activity_id: ActivityId) -> int:
        k = self.network.position[activity_id]
        return self.ls[k] - self.es[k]

    @property
    def portfolio_temp_finish(self) -> int:
        return max(self.project_finish, default=0)


def temporary_schedule(
    portfolio: Portfolio | Network,
    fixed: FixedAssignments,
    t: int,
) -> TemporarySchedule:
    """Compute the temporary schedule at scheduling time ``t``.

    Args:
        portfolio: Portfolio, or an already compiled Network
        fixed: Definitively scheduled activities and their starts
        t: Current scheduling time (>= 0)

    Returns:
        TemporarySchedule with es/ef/ls/lf for every activity

    Raises:
        InconsistentFixedError: If a fixed start violates precedence or release dates
        ValueError: If ``t`` is negative
    """
    if t < 0:
        raise ValueError(f"Scheduling time must be >= 0, got {t}")
    network = portfolio if isinstance(portfolio, Network) else Network.from_portfolio(portfolio)
    starts = network.fixed_array(fixed)
    check_fixed(network, starts)
    return compute_temporary(network, starts, t)


def check_fixed(network: Network, starts: Sequence[int]) -> None:
    """Raise InconsistentFixedError unless fixed starts form a consistent prefix."""
    for k, start in enumerate(starts):
        if start == UNFIXED:
            continue
        aid = network.ids[k]
        if start < network.release[k]:
            raise InconsistentFixedError(f"{aid.label} fixed at {start} before release date {network.release[k]}")
        for q in network.preds[k]:
            if starts[q] == UNFIXED:
                raise InconsistentFixedError(f"{aid.label} is fixed but predecessor {network.ids[q].label} is not")
            if start < starts[q] + network.duration[q]:
                raise InconsistentFixedError(
                    f"{aid.label} fixed at {start} before predecessor {network.ids[q].label} "
                    f"finishes at {starts[q] + network.duration[q]}"
                )


def compute_temporary(network: Network, starts: Sequence[int], t: int) -> TemporarySchedule:
    """CPM forward/backward pass without consistency checks (hot path)."""
    n = len(network.ids)
    duration = network.duration
    release = network.release
    preds = network.preds
    succs = network.succs
    project_of = network.project_of

    es = [0] * n
    ef = [0] * n
    for k in network.topo_order:
        if starts[k] != UNFIXED:
            es[k] = starts[k]
        else:
            value = t if t > release[k] else release[k]
            for q in preds[k]:
                if ef[q] > value:
                    value = ef[q]
            es[k] = value
        ef[k] = es[k] + duration[k]

    project_finish = tuple(max((ef[k] for k in block), default=0) for block in network.project_slices)

    ls = [0] * n
    lf = [0] * n
    for k in reversed(network.topo_order):
        if starts[k] != UNFIXED:
            ls[k] = es[k]
            lf[k] = ef[k]
            continue
        if succs[k]:
            value = ls[succs[k][0]]
            for s in succs[k]:
                if ls[s] < value:
                    value = ls[s]
        else:
            value = project_finish[project_of[k]]
        lf[k] = value
        ls[k] = value - duration[k]

    return TemporarySchedule(
        network=network,
        es=es,
        ef=ef,
        ls=ls,
        lf=lf,
        project_finish=project_finish,
        latest_project=_argmax_lowest(project_finish),
    )


def latest_finishing_project(ts: TemporarySchedule) -> int | None:
    """Project with maximal temporary finish; ties go to the lowest index.

    Returns None only for an empty portfolio.
    """
    return ts.latest_project


def _argmax_lowest(values: Sequence[int]) -> int | None:
    best: int | None = None
    for index, value in enumerate(values):
        if best is None or value > values[best]:
            best = index
    return best


def _topological_order(preds: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Kahn's algorithm; the order depends only on positions, never on hashing."""
    n = len(preds)
    indegree = [len(p) for p in preds]
    succs: list[list[int]] = [[] for _ in range(n)]
    for k, pk in enumerate(preds):
        for q in pk:
            succs[q].append(k)
    ready = [k for k in range(n) if indegree[k] == 0]
    ready.reverse()
    order: list[int] = []
    while ready:
        k = ready.pop()
        order.append(k)
        for s in reversed(succs[k]):
            indegree[s] -= 1
            if indegree[s] == 0:
                ready.append(s)
    if len(order) != n:
        _LOGGER.warning("Precedence graph has a cycle; %d activities unreachable", n - len(order))
    return tuple(order)
