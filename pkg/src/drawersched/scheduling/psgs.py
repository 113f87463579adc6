"""Parallel schedule generation scheme driven by drawers.

Each iteration at scheduling time ``t``:

1. compute the temporary schedule with definitive starts fixed,
2. collect candidates (temporary start == t, predecessors scheduled),
3. classify them into drawers and shuffle within each drawer,
4. try to place them in that order, committing resources immediately.

Placing a zero-duration activity at ``t`` can release successors at the same
``t``; those newly released candidates get their own pass at ``t`` before time
advances. Every candidate is attempted at most once per scheduling time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..exceptions import InvalidPortfolioError, NonTerminationError
from ..models.drawers import DrawerConfig
from ..models.portfolio import ActivityId, Portfolio
from ..models.schedule import Schedule
from ..models.validation import validate_portfolio
from .cpm import UNFIXED, Network, compute_temporary
from .drawers import candidate_positions, classify, prioritize
from .ledger import ResourceLedger
from .rng import make_rng

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Scheduled:
    """Activity definitively placed at ``start``."""

    activity_id: ActivityId
    start: int


@dataclass(frozen=True, slots=True)
class Deferred:
    """Activity did not fit; the ledger is unchanged.

    ``resource_id``/``period`` name the first conflict found.
    """

    activity_id: ActivityId
    t: int
    resource_id: int
    period: int


Placement = Scheduled | Deferred


def try_schedule(activity_id: ActivityId, t: int, ledger: ResourceLedger, portfolio: Portfolio) -> Placement:
    """Place ``activity_id`` at ``t`` if every resource is free for its whole duration.

    On success the demand is committed to ``ledger`` for periods
    ``[t, t + duration)``; otherwise the ledger is left untouched.
    """
    activity = portfolio.activity(activity_id)
    demand = ledger.demand_vector(activity.demands)
    if ledger.fits(demand, t, activity.duration):
        ledger.commit(demand, t, activity.duration)
        return Scheduled(activity_id, t)
    resource_id, period = _first_conflict(ledger, demand, t, activity.duration)
    return Deferred(activity_id, t, resource_id, period)


def _first_conflict(ledger: ResourceLedger, demand: npt.NDArray[np.int64], t: int, duration: int) -> tuple[int, int]:
    for period in range(t, t + duration):
        for rid in range(ledger.resource_count):
            if demand[rid] and ledger.usage(rid, period) + int(demand[rid]) > int(ledger.capacity[rid]):
                return rid, period
    return -1, -1


@dataclass(frozen=True, slots=True)
class RunStats:
    """Counters of one run (diagnostics only)."""

    iterations: int
    passes: int
    attempts: int
    deferrals: int


def run_psgs(
    portfolio: Portfolio,
    cfg: DrawerConfig,
    seed: int,
    *,
    fast_forward: bool = True,
    validate: bool = True,
) -> Schedule:
    """Build one feasible schedule.

    Deterministic in ``(portfolio, cfg, seed)``.

    Args:
        portfolio: Portfolio to schedule
        cfg: Drawer configuration
        seed: Seed of this run's random stream
        fast_forward: Jump over scheduling times without candidates (output-identical)
        validate: Reject structurally invalid portfolios up front

    Returns:
        Complete, feasible Schedule

    Raises:
        InvalidPortfolioError: If ``validate`` and the portfolio has violations
        NonTerminationError: If scheduling time passes Σ durations + max release date
        UnclassifiedError: If ``cfg`` lacks a catch-all and a candidate matches nothing
    """
    if validate:
        report = validate_portfolio(portfolio)
        if report:
            raise InvalidPortfolioError(report)
    schedule, _ = run_psgs_network(Network.from_portfolio(portfolio), cfg, seed, fast_forward=fast_forward)
    return schedule


def run_psgs_network(
    network: Network,
    cfg: DrawerConfig,
    seed: int,
    *,
    fast_forward: bool = True,
) -> tuple[Schedule, RunStats]:
    """run_psgs on a compiled network, without validation."""
    rng = make_rng(seed)
    n = len(network)
    duration = network.duration
    demand = network.demand
    ledger = ResourceLedger(network.capacity, horizon=max(sum(duration), 1))
    guard = network.horizon_guard

    starts = [UNFIXED] * n
    remaining = n
    t = 0
    iterations = passes = attempts = deferrals = 0

    while remaining:
        if t > guard:
            unscheduled = [network.ids[k].label for k in range(n) if starts[k] == UNFIXED]
            raise NonTerminationError(
                f"scheduling time {t} passed guard {guard} with {remaining} unscheduled "
                f"activities (first: {', '.join(unscheduled[:5])})"
            )
        iterations += 1
        attempted: set[int] = set()
        while True:
            ts = compute_temporary(network, starts, t)
            fresh = [k for k in candidate_positions(network, ts, t, starts) if k not in attempted]
            if not fresh:
                break
            passes += 1
            attempted.update(fresh)
            drawers = classify([network.ids[k] for k in fresh], ts, cfg)
            released_at_t = False
            for activity_id in prioritize(drawers, rng):
                k = network.position[activity_id]
                attempts += 1
                if ledger.fits(demand[k], t, duration[k]):
                    ledger.commit(demand[k], t, duration[k])
                    starts[k] = t
                    remaining -= 1
                    released_at_t = released_at_t or duration[k] == 0
                else:
                    deferrals += 1
            if not released_at_t:
                break

        if not remaining:
            break
        if fast_forward and not attempted:
            t = _next_candidate_time(network, starts, t)
        else:
            t += 1

    schedule = Schedule(
        starts={network.ids[k]: starts[k] for k in range(n)},
        durations={network.ids[k]: duration[k] for k in range(n)},
    )
    stats = RunStats(iterations=iterations, passes=passes, attempts=attempts, deferrals=deferrals)
    _LOGGER.debug(
        "Run seed=%d: tms=%d iterations=%d attempts=%d deferrals=%d",
        seed,
        schedule.tms,
        iterations,
        attempts,
        deferrals,
    )
    return schedule, stats


def _next_candidate_time(network: Network, starts: list[int], t: int) -> int:
    """Earliest time after ``t`` at which some ready activity becomes a candidate."""
    best: int | None = None
    for k in range(len(network)):
        if starts[k] != UNFIXED:
            continue
        ready_at = network.release[k]
        ready = True
        for q in network.preds[k]:
            if starts[q] == UNFIXED:
                ready = False
                break
            finish = starts[q] + network.duration[q]
            if finish > ready_at:
                ready_at = finish
        if ready and (best is None or ready_at < best):
            best = ready_at
    if best is None or best <= t:
        return t + 1
    return best
