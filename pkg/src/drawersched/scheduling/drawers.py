"""Candidate selection, drawer classification and prioritisation."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import TypeVar

import numpy as np

from ..exceptions import UnclassifiedError
from ..models.drawers import CandidateAttributes, DrawerConfig
from ..models.portfolio import ActivityId, Portfolio
from .cpm import UNFIXED, FixedAssignments, Network, TemporarySchedule

_LOGGER = logging.getLogger(__name__)

T = TypeVar("T")


def candidate_activities(
    portfolio: Portfolio,
    ts: TemporarySchedule,
    t: int,
    fixed: FixedAssignments,
) -> list[ActivityId]:
    """Unscheduled activities that may start at ``t``.

    An activity is a candidate when it is not fixed, its temporary earliest
    start equals ``t`` and all of its predecessors are fixed. The result is in
    canonical (project, activity) order.
    """
    network = ts.network
    if len(network) != portfolio.activity_count:
        raise ValueError("Temporary schedule was computed for a different portfolio")
    starts = network.fixed_array(fixed)
    return [network.ids[k] for k in candidate_positions(network, ts, t, starts)]


def candidate_positions(network: Network, ts: TemporarySchedule, t: int, starts: Sequence[int]) -> list[int]:
    """Position-level candidate_activities (ascending positions)."""
    es = ts.es
    preds = network.preds
    return [
        k
        for k in range(len(network.ids))
        if starts[k] == UNFIXED and es[k] == t and all(starts[q] != UNFIXED for q in preds[k])
    ]


def candidate_attributes(ts: TemporarySchedule, activity_id: ActivityId) -> CandidateAttributes:
    """Attributes a drawer predicate can inspect for one activity."""
    network = ts.network
    k = network.position[activity_id]
    return CandidateAttributes(
        total_slack=ts.ls[k] - ts.es[k],
        in_latest_project=network.project_of[k] == ts.latest_project,
        duration=network.duration[k],
        total_demand=network.total_demand[k],
    )


def classify(
    candidates: Sequence[ActivityId],
    ts: TemporarySchedule,
    cfg: DrawerConfig,
) -> list[list[ActivityId]]:
    """Place every candidate into the first drawer whose predicate it satisfies.

    Drawers keep the input order of their members, so canonical input yields
    canonical drawers. The drawers partition ``candidates``.

    Raises:
        UnclassifiedError: If a candidate matches no drawer
    """
    drawers: list[list[ActivityId]] = [[] for _ in cfg.drawers]
    for activity_id in candidates:
        attrs = candidate_attributes(ts, activity_id)
        for index, predicate in enumerate(cfg.drawers):
            if predicate.matches(attrs):
                drawers[index].append(activity_id)
                break
        else:
            raise UnclassifiedError(
                f"Candidate {activity_id.label} matches no drawer of config {cfg.name!r} (no catch-all drawer)"
            )
    _LOGGER.debug("Drawer sizes: %s", [len(d) for d in drawers])
    return drawers


def prioritize(drawers: Sequence[Sequence[T]], rng: np.random.Generator) -> list[T]:
    """Shuffle each drawer independently and concatenate in drawer order.

    Each shuffle is a uniform Fisher-Yates permutation; drawers with fewer than
    two members draw nothing from ``rng``.
    """
    ordered: list[T] = []
    for drawer in drawers:
        if len(drawer) < 2:
            ordered.extend(drawer)
            continue
        permutation = rng.permutation(len(drawer))
        ordered.extend(drawer[int(i)] for i in permutation)
    return ordered
