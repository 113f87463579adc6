"""Makespan, lower bounds and the average utilization factor (AUF)."""

from __future__ import annotations

import logging
import math
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from ..models.enums import AufHorizon
from ..models.portfolio import Portfolio, ResourceId
from ..models.schedule import Schedule
from ..scheduling.cpm import Network, temporary_schedule

_LOGGER = logging.getLogger(__name__)

AufValue = Fraction | float
"""Exact ratio, or ``math.inf`` when the denominator is zero."""


def makespan(schedule: Schedule) -> int:
    """Latest finish time measured from period 0 (0 for an empty schedule)."""
    return schedule.tms


def project_finishes(portfolio: Portfolio, schedule: Schedule) -> dict[int, int]:
    """Finish period of every project's sink, keyed by project index."""
    return {project.project_index: schedule.finish(project.sink.id) for project in portfolio.projects}


def cpm_lower_bound(portfolio: Portfolio) -> int:
    """Resource-free CPM makespan with no fixed activities at ``t = 0``."""
    if not portfolio.projects:
        return 0
    return temporary_schedule(portfolio, {}, 0).portfolio_temp_finish


def _work(network: Network) -> npt.NDArray[np.int64]:
    """Σ duration·demand per resource."""
    return np.asarray(network.duration, dtype=np.int64) @ network.demand


def resource_lower_bound(portfolio: Portfolio) -> int:
    """max over resources of ceil(work / capacity); zero-capacity resources are skipped."""
    network = Network.from_portfolio(portfolio)
    best = 0
    for work, capacity in zip(_work(network).tolist(), network.capacity.tolist(), strict=True):
        if capacity > 0:
            best = max(best, -(-work // capacity))
    return best


def lower_bound(portfolio: Portfolio) -> int:
    """Best of the CPM and resource bounds; no feasible TMS is smaller."""
    return max(cpm_lower_bound(portfolio), resource_lower_bound(portfolio))


def auf(portfolio: Portfolio, horizon: AufHorizon = AufHorizon.PORTFOLIO) -> dict[ResourceId, AufValue]:
    """Average utilization factor per resource.

    ``AUF(r) = work(r) / (capacity(r) * T)``. With ``AufHorizon.PORTFOLIO`` the
    horizon ``T`` is the resource-free CPM makespan of the whole portfolio; with
    ``AufHorizon.PROJECT`` it is the longest CPM duration (finish minus release)
    among the projects that demand ``r``. Values above 1 mark a binding resource.

    Args:
        portfolio: Validated portfolio
        horizon: Which horizon to divide by

    Returns:
        Mapping of resource id to an exact Fraction, or ``math.inf`` when
        the capacity or the horizon is zero
    """
    network = Network.from_portfolio(portfolio)
    work = _work(network).tolist()
    ts = temporary_schedule(network, {}, 0) if portfolio.projects else None
    portfolio_t = ts.portfolio_temp_finish if ts is not None else 0

    project_t: dict[ResourceId, int] = {}
    if horizon == AufHorizon.PROJECT and ts is not None:
        for project in portfolio.projects:
            span = ts.project_finish[project.project_index] - project.release_date
            block = network.project_slices[project.project_index]
            used = np.flatnonzero(network.demand[block.start : block.stop].sum(axis=0))
            for rid in used.tolist():
                project_t[rid] = max(project_t.get(rid, 0), span)

    values: dict[ResourceId, AufValue] = {}
    for resource in portfolio.resources:
        capacity = resource.capacity
        t = project_t.get(resource.id, portfolio_t) if horizon == AufHorizon.PROJECT else portfolio_t
        if capacity == 0 or t == 0:
            _LOGGER.warning("AUF of %s undefined (capacity %d, horizon %d); reporting inf", resource.label, capacity, t)
            values[resource.id] = math.inf
            continue
        values[resource.id] = Fraction(int(work[resource.id]), capacity * t)
    return values
