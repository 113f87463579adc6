"""Portfolio, schedule and drawer data models."""

from .drawers import (
    CATCH_ALL,
    PRESETS,
    CandidateAttributes,
    Comparison,
    DrawerConfig,
    DrawerPredicate,
    default_drawer_config,
    drawer_config_preset,
)
from .enums import AufHorizon, CompareOp, ExportFormat, ResourceScope, ViolationCode, ViolationKind
from .portfolio import Activity, ActivityId, Portfolio, Project, Resource, ResourceId, portfolio_from_project
from .schedule import Schedule
from .validation import ValidationReport, Violation, validate_portfolio

__all__ = [
    "Activity",
    "ActivityId",
    "AufHorizon",
    "CATCH_ALL",
    "CandidateAttributes",
    "Comparison",
    "CompareOp",
    "DrawerConfig",
    "DrawerPredicate",
    "ExportFormat",
    "PRESETS",
    "Portfolio",
    "Project",
    "Resource",
    "ResourceId",
    "ResourceScope",
    "Schedule",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "ViolationKind",
    "default_drawer_config",
    "drawer_config_preset",
    "portfolio_from_project",
    "validate_portfolio",
]
