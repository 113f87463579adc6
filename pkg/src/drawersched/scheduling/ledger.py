"""Per-period resource usage ledger."""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np
import numpy.typing as npt

from ..models.portfolio import Portfolio, ResourceId

_MIN_HORIZON = 64


class ResourceLedger:
    """Units used per resource and period; ``usage[r, τ] <= capacity[r]`` always.

    The period axis grows on demand, so callers never size it up front.
    """

    def __init__(self, capacity: npt.ArrayLike, horizon: int = _MIN_HORIZON) -> None:
        self.capacity: npt.NDArray[np.int64] = np.asarray(capacity, dtype=np.int64).reshape(-1)
        self._usage: npt.NDArray[np.int64] = np.zeros((self.capacity.size, max(horizon, 1)), dtype=np.int64)

    @classmethod
    def for_portfolio(cls, portfolio: Portfolio, horizon: int = _MIN_HORIZON) -> ResourceLedger:
        return cls([r.capacity for r in portfolio.resources], horizon)

    @property
    def resource_count(self) -> int:
        return int(self.capacity.size)

    @property
    def horizon(self) -> int:
        return int(self._usage.shape[1])

    def _ensure(self, end: int) -> None:
        if end <= self._usage.shape[1]:
            return
        grown = max(end, 2 * self._usage.shape[1])
        usage = np.zeros((self._usage.shape[0], grown), dtype=np.int64)
        usage[:, : self._usage.shape[1]] = self._usage
        self._usage = usage

    def usage(self, resource_id: ResourceId, period: int) -> int:
        if period >= self._usage.shape[1]:
            return 0
        return int(self._usage[resource_id, period])

    def profile(self, resource_id: ResourceId, end: int | None = None) -> npt.NDArray[np.int64]:
        """Usage of one resource over periods ``[0, end)`` (copy)."""
        end = self.horizon if end is None else end
        self._ensure(end)
        return self._usage[resource_id, :end].copy()

    def demand_vector(self, demands: Mapping[ResourceId, int]) -> npt.NDArray[np.int64]:
        vector = np.zeros(self.resource_count, dtype=np.int64)
        for rid, amount in demands.items():
            vector[rid] = amount
        return vector

    def fits(self, demand: npt.NDArray[np.int64], start: int, duration: int) -> bool:
        """Whether ``demand`` can be held over ``[start, start + duration)``."""
        if duration <= 0 or not demand.any():
            return True
        self._ensure(start + duration)
        window = self._usage[:, start : start + duration]
        return bool(np.all(window + demand[:, None] <= self.capacity[:, None]))

    def commit(self, demand: npt.NDArray[np.int64], start: int, duration: int) -> None:
        """Hold ``demand`` over ``[start, start + duration)``; caller checked ``fits``."""
        if duration <= 0 or not demand.any():
            return
        self._ensure(start + duration)
        self._usage[:, start : start + duration] += demand[:, None]

    def is_within_capacity(self) -> bool:
        return bool(np.all(self._usage <= self.capacity[:, None]))

    def is_idle_from(self, period: int) -> bool:
        """No usage at or after ``period``."""
        if period >= self._usage.shape[1]:
            return True
        return not self._usage[:, period:].any()
