"""Exact minimum TMS for tiny portfolios by bounded depth-first search.

The search enumerates serial schedule-generation orders: each node picks one
eligible activity and places it at its earliest precedence- and
resource-feasible start. Every start is therefore 0, a release date or a
finish time of another activity, and the set of schedules reached contains an
optimal one for makespan. Branches are cut by a CPM bound on the partial
schedule, and the search stops early once the incumbent meets the static lower
bound.
"""

from __future__ import annotations

import logging
from typing import Final

import numpy as np

from ..exceptions import InvalidPortfolioError
from ..models.portfolio import Portfolio
from ..models.validation import validate_portfolio
from ..scheduling.cpm import UNFIXED, Network
from .bounds import lower_bound

_LOGGER = logging.getLogger(__name__)

DEFAULT_BUDGET: Final = 1_000_000


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Mutable DFS state over one compiled network."""

    def __init__(self, network: Network, budget: int, floor: int) -> None:
        self.network = network
        self.budget = budget
        self.floor = floor
        self.nodes = 0
        self.best: int | None = None
        self.starts = [UNFIXED] * len(network)
        self.seen: set[tuple[int, ...]] = set()
        self.idle = [not network.duration[k] or not network.demand[k].any() for k in range(len(network))]
        length = 2 * network.horizon_guard + max(network.duration, default=0) + 2
        self.usage = np.zeros((len(network.capacity), length), dtype=np.int64)

    def run(self) -> int | None:
        try:
            self._visit(0)
        except _BudgetExhausted:
            _LOGGER.warning("Oracle budget of %d nodes exhausted; optimum unknown", self.budget)
            return None
        _LOGGER.debug("Oracle explored %d nodes, optimum %s", self.nodes, self.best)
        return self.best

    def _visit(self, placed: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        key = tuple(self.starts)
        if key in self.seen:
            return
        self.seen.add(key)

        n = len(self.network)
        if placed == n:
            finish = max((self.starts[k] + self.network.duration[k] for k in range(n)), default=0)
            if self.best is None or finish < self.best:
                self.best = finish
            return
        if self.best is not None and self._partial_bound() >= self.best:
            return

        eligible = self._eligible()
        # Activities that hold no resource start at their precedence-earliest time in every order.
        forced = [k for k in eligible if self.idle[k]]
        if forced:
            for k in forced:
                self._place(k, self._release_time(k))
            self._visit(placed + len(forced))
            for k in forced:
                self._remove(k)
            return

        for k in eligible:
            start = self._earliest_fit(k)
            self._place(k, start)
            self._visit(placed + 1)
            self._remove(k)
            if self.best == self.floor:
                return

    def _eligible(self) -> list[int]:
        starts = self.starts
        return [
            k
            for k in range(len(self.network))
            if starts[k] == UNFIXED and all(starts[q] != UNFIXED for q in self.network.preds[k])
        ]

    def _release_time(self, k: int) -> int:
        network = self.network
        ready = network.release[k]
        for q in network.preds[k]:
            ready = max(ready, self.starts[q] + network.duration[q])
        return ready

    def _earliest_fit(self, k: int) -> int:
        demand = self.network.demand[k][:, None]
        capacity = self.network.capacity[:, None]
        duration = self.network.duration[k]
        start = self._release_time(k)
        while np.any(self.usage[:, start : start + duration] + demand > capacity):
            start += 1
        return start

    def _place(self, k: int, start: int) -> None:
        self.starts[k] = start
        self.usage[:, start : start + self.network.duration[k]] += self.network.demand[k][:, None]

    def _remove(self, k: int) -> None:
        start = self.starts[k]
        self.usage[:, start : start + self.network.duration[k]] -= self.network.demand[k][:, None]
        self.starts[k] = UNFIXED

    def _partial_bound(self) -> int:
        """CPM makespan with placed activities fixed (resources ignored)."""
        network = self.network
        finish = [0] * len(network)
        for k in network.topo_order:
            if self.starts[k] != UNFIXED:
                begin = self.starts[k]
            else:
                begin = network.release[k]
                for q in network.preds[k]:
                    begin = max(begin, finish[q])
            finish[k] = begin + network.duration[k]
        return max(finish, default=0)


def brute_force_optimal(portfolio: Portfolio, budget: int = DEFAULT_BUDGET) -> int | None:
    """Exact minimum TMS of a small portfolio.

    Intended for portfolios of about ten real activities.

    Args:
        portfolio: Portfolio to solve
        budget: Maximum number of search nodes

    Returns:
        Optimal TMS, or None when the budget ran out first

    Raises:
        InvalidPortfolioError: If the portfolio fails validation
        ValueError: If ``budget`` is not positive
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    report = validate_portfolio(portfolio)
    if report:
        raise InvalidPortfolioError(report)
    network = Network.from_portfolio(portfolio)
    return _Search(network, budget, lower_bound(portfolio)).run()
