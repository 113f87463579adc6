"""Definitive portfolio schedule."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .portfolio import ActivityId, Portfolio


@dataclass(frozen=True, slots=True)
class Schedule:
    """Start period per activity, with the durations needed to derive finishes."""

    starts: Mapping[ActivityId, int] = field(default_factory=dict)
    durations: Mapping[ActivityId, int] = field(default_factory=dict)

    @classmethod
    def from_starts(cls, portfolio: Portfolio, starts: Mapping[ActivityId, int]) -> Schedule:
        """Attach portfolio durations to a start-time map (canonical key order).

        Raises:
            KeyError: If ``starts`` names an activity outside ``portfolio``
        """
        ordered = dict(sorted(starts.items()))
        return cls(starts=ordered, durations={a: portfolio.activity(a).duration for a in ordered})

    def start(self, activity_id: ActivityId) -> int:
        return self.starts[activity_id]

    def finish(self, activity_id: ActivityId) -> int:
        return self.starts[activity_id] + self.durations[activity_id]

    def finishes(self) -> dict[ActivityId, int]:
        return {a: s + self.durations[a] for a, s in self.starts.items()}

    @property
    def tms(self) -> int:
        """Total makespan: latest finish, measured from period 0."""
        return max((s + self.durations[a] for a, s in self.starts.items()), default=0)

    def __len__(self) -> int:
        return len(self.starts)

    def is_complete_for(self, portfolio: Portfolio) -> bool:
        """Every activity of ``portfolio`` has a start."""
        return all(a.id in self.starts for a in portfolio.iter_activities())
