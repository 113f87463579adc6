"""Temporary schedules, drawer classification and the parallel SGS."""

from .cpm import (
    UNFIXED,
    ActivityTimes,
    FixedAssignments,
    Network,
    TemporarySchedule,
    latest_finishing_project,
    temporary_schedule,
)
from .drawers import candidate_activities, candidate_attributes, classify, prioritize
from .ledger import ResourceLedger
from .psgs import Deferred, Placement, RunStats, Scheduled, run_psgs, run_psgs_network, try_schedule
from .rng import RNG_ALGORITHM, derive_seed, make_rng

__all__ = [
    "RNG_ALGORITHM",
    "UNFIXED",
    "ActivityTimes",
    "Deferred",
    "FixedAssignments",
    "Network",
    "Placement",
    "ResourceLedger",
    "RunStats",
    "Scheduled",
    "TemporarySchedule",
    "candidate_activities",
    "candidate_attributes",
    "classify",
    "derive_seed",
    "latest_finishing_project",
    "make_rng",
    "prioritize",
    "run_psgs",
    "run_psgs_network",
    "temporary_schedule",
    "try_schedule",
]
