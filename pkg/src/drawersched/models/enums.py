"""Enumerations shared across the scheduling model."""

from __future__ import annotations

import operator
from collections.abc import Callable
from enum import IntEnum, StrEnum
from typing import Final


class ResourceScope(IntEnum):
    """Visibility of a renewable resource."""

    GLOBAL = 0
    LOCAL = 1


class ViolationCode(StrEnum):
    """Structural violations reported by validate_portfolio."""

    EMPTY_PROJECT = "EMPTY_PROJECT"
    PROJECT_INDEX_MISMATCH = "PROJECT_INDEX_MISMATCH"
    ACTIVITY_ID_MISMATCH = "ACTIVITY_ID_MISMATCH"
    RESOURCE_ID_MISMATCH = "RESOURCE_ID_MISMATCH"
    UNKNOWN_SCOPE_PROJECT = "UNKNOWN_SCOPE_PROJECT"
    NEGATIVE_CAPACITY = "NEGATIVE_CAPACITY"
    NEGATIVE_RELEASE_DATE = "NEGATIVE_RELEASE_DATE"
    NEGATIVE_DURATION = "NEGATIVE_DURATION"
    NEGATIVE_DEMAND = "NEGATIVE_DEMAND"
    UNKNOWN_RESOURCE = "UNKNOWN_RESOURCE"
    INVISIBLE_RESOURCE = "INVISIBLE_RESOURCE"
    DEMAND_EXCEEDS_CAPACITY = "DEMAND_EXCEEDS_CAPACITY"
    UNKNOWN_PREDECESSOR = "UNKNOWN_PREDECESSOR"
    CROSS_PROJECT_PRECEDENCE = "CROSS_PROJECT_PRECEDENCE"
    DUPLICATE_PREDECESSOR = "DUPLICATE_PREDECESSOR"
    CYCLE = "CYCLE"
    SOURCE_HAS_PREDECESSORS = "SOURCE_HAS_PREDECESSORS"
    MULTIPLE_SOURCES = "MULTIPLE_SOURCES"
    SINK_HAS_SUCCESSORS = "SINK_HAS_SUCCESSORS"
    MULTIPLE_SINKS = "MULTIPLE_SINKS"
    DUMMY_NOT_EMPTY = "DUMMY_NOT_EMPTY"


class ViolationKind(StrEnum):
    """Kinds of schedule feasibility violations."""

    PRECEDENCE = "precedence"
    CAPACITY = "capacity"
    RELEASE_DATE = "release_date"
    MISSING = "missing"
    UNKNOWN_ACTIVITY = "unknown_activity"


class ExportFormat(StrEnum):
    """Machine-readable output formats."""

    CSV = "csv"
    JSON = "json"


class AufHorizon(StrEnum):
    """Horizon used in the AUF denominator."""

    PORTFOLIO = "portfolio"
    PROJECT = "project"


class CompareOp(StrEnum):
    """Comparison operators usable in drawer predicates."""

    LT = "<"
    LE = "<="
    EQ = "=="
    NE = "!="
    GE = ">="
    GT = ">"

    def apply(self, left: int, right: int) -> bool:
        """Evaluate ``left <op> right``."""
        return _OPERATORS[self](left, right)


_OPERATORS: Final[dict[CompareOp, Callable[[int, int], bool]]] = {
    CompareOp.LT: operator.lt,
    CompareOp.LE: operator.le,
    CompareOp.EQ: operator.eq,
    CompareOp.NE: operator.ne,
    CompareOp.GE: operator.ge,
    CompareOp.GT: operator.gt,
}
