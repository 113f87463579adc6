"""Schedule feasibility checking, independent of the scheduler's ledger."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass

from ..models.enums import ViolationKind
from ..models.portfolio import ActivityId, Portfolio
from ..models.schedule import Schedule


@dataclass(frozen=True, slots=True)
class FeasibilityViolation:
    """One broken time or resource constraint."""

    kind: ViolationKind
    activity_ids: tuple[ActivityId, ...] = ()
    resource_id: int | None = None
    period: int | None = None
    amount: int | None = None  # observed value (start, or units in use)
    limit: int | None = None  # bound that was exceeded or undercut

    def describe(self) -> str:
        ids = ",".join(a.label for a in self.activity_ids)
        match self.kind:
            case ViolationKind.PRECEDENCE:
                return f"{ids}: starts at {self.amount}, predecessor finishes at {self.limit}"
            case ViolationKind.RELEASE_DATE:
                return f"{ids}: starts at {self.amount} before release date {self.limit}"
            case ViolationKind.CAPACITY:
                return f"R{self.resource_id} period {self.period}: {self.amount} units in use > capacity {self.limit}"
            case ViolationKind.MISSING:
                return f"{ids}: not scheduled"
            case _:
                return f"{ids}: not an activity of this portfolio"


@dataclass(frozen=True, slots=True)
class FeasibilityReport:
    """Violations of a schedule; empty iff the schedule is feasible."""

    violations: tuple[FeasibilityViolation, ...] = ()

    @property
    def is_feasible(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return bool(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def of_kind(self, kind: ViolationKind) -> list[FeasibilityViolation]:
        return [v for v in self.violations if v.kind == kind]


def check_feasibility(portfolio: Portfolio, schedule: Schedule | Mapping[ActivityId, int]) -> FeasibilityReport:
    """Check a schedule against every constraint of ``portfolio``.

    Durations always come from the portfolio, so third-party start maps can be
    checked too.
    """
    starts = schedule.starts if isinstance(schedule, Schedule) else schedule
    found: list[FeasibilityViolation] = []

    for activity_id in sorted(a for a in starts if a not in portfolio):
        found.append(FeasibilityViolation(ViolationKind.UNKNOWN_ACTIVITY, (activity_id,)))

    usage: dict[tuple[int, int], int] = defaultdict(int)
    holders: dict[tuple[int, int], list[ActivityId]] = defaultdict(list)
    for project in portfolio.projects:
        for activity in project.activities:
            start = starts.get(activity.id)
            if start is None:
                found.append(FeasibilityViolation(ViolationKind.MISSING, (activity.id,)))
                continue
            if start < project.release_date:
                found.append(
                    FeasibilityViolation(
                        ViolationKind.RELEASE_DATE, (activity.id,), amount=start, limit=project.release_date
                    )
                )
            for pred_id in activity.predecessors:
                pred_start = starts.get(pred_id)
                if pred_start is None or pred_id not in portfolio:
                    continue
                pred_finish = pred_start + portfolio.activity(pred_id).duration
                if start < pred_finish:
                    found.append(
                        FeasibilityViolation(
                            ViolationKind.PRECEDENCE, (activity.id, pred_id), amount=start, limit=pred_finish
                        )
                    )
            for resource_id, amount in activity.demands.items():
                if amount <= 0:
                    continue
                for period in range(start, start + activity.duration):
                    usage[(resource_id, period)] += amount
                    holders[(resource_id, period)].append(activity.id)

    for (resource_id, period), in_use in sorted(usage.items()):
        capacity = portfolio.resources[resource_id].capacity
        if in_use > capacity:
            found.append(
                FeasibilityViolation(
                    ViolationKind.CAPACITY,
                    tuple(holders[(resource_id, period)]),
                    resource_id=resource_id,
                    period=period,
                    amount=in_use,
                    limit=capacity,
                )
            )
    return FeasibilityReport(tuple(found))
