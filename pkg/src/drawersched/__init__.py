"""Drawer-based parallel schedule generation for multi-project portfolios.

Builds resource-feasible portfolio schedules by classifying candidate
activities into priority drawers, shuffling within drawers and keeping the
best of many seeded runs.
"""

from .analysis import (
    BenchmarkRow,
    BenchmarkSummary,
    FeasibilityReport,
    FeasibilityViolation,
    auf,
    benchmark_report,
    brute_force_optimal,
    check_feasibility,
    cpm_lower_bound,
    export_benchmark,
    lower_bound,
    makespan,
    project_finishes,
    render_gantt,
    resource_lower_bound,
)
from .exceptions import (
    BenchmarkError,
    CapacityMismatchError,
    DrawerConfigError,
    DrawerSchedError,
    InconsistentCountsError,
    InconsistentFixedError,
    InstanceError,
    InvalidPortfolioError,
    MissingFileError,
    NonTerminationError,
    ParseError,
    SchedulingError,
    UnclassifiedError,
    UnknownInstanceError,
)
from .formats import (
    BestKnown,
    PortfolioDescriptor,
    export_schedule,
    import_schedule,
    load_best_known,
    load_drawer_config,
    load_portfolio,
    parse_descriptor,
    parse_drawer_config,
    parse_portfolio,
    parse_sm,
    render_drawer_config,
    render_sm,
)
from .models import (
    Activity,
    ActivityId,
    AufHorizon,
    DrawerConfig,
    DrawerPredicate,
    ExportFormat,
    Portfolio,
    Project,
    Resource,
    ResourceScope,
    Schedule,
    ValidationReport,
    Violation,
    ViolationCode,
    ViolationKind,
    default_drawer_config,
    drawer_config_preset,
    portfolio_from_project,
    validate_portfolio,
)
from .scheduling import (
    RNG_ALGORITHM,
    Deferred,
    ResourceLedger,
    Scheduled,
    TemporarySchedule,
    candidate_activities,
    classify,
    derive_seed,
    latest_finishing_project,
    make_rng,
    prioritize,
    run_psgs,
    temporary_schedule,
    try_schedule,
)
from .simulation import RunConfig, SimulationResult, simulate

__version__ = "0.1.0"

__all__ = [
    # Main API
    "run_psgs",
    "simulate",
    "RunConfig",
    "SimulationResult",
    "load_portfolio",
    # Exceptions
    "DrawerSchedError",
    "InstanceError",
    "ParseError",
    "InconsistentCountsError",
    "CapacityMismatchError",
    "MissingFileError",
    "InvalidPortfolioError",
    "SchedulingError",
    "InconsistentFixedError",
    "UnclassifiedError",
    "NonTerminationError",
    "BenchmarkError",
    "UnknownInstanceError",
    "DrawerConfigError",
    # Models
    "Activity",
    "ActivityId",
    "Portfolio",
    "Project",
    "Resource",
    "Schedule",
    "ValidationReport",
    "Violation",
    "validate_portfolio",
    "portfolio_from_project",
    # Drawers
    "DrawerConfig",
    "DrawerPredicate",
    "default_drawer_config",
    "drawer_config_preset",
    # Scheduling steps
    "TemporarySchedule",
    "temporary_schedule",
    "latest_finishing_project",
    "candidate_activities",
    "classify",
    "prioritize",
    "ResourceLedger",
    "try_schedule",
    "Scheduled",
    "Deferred",
    "make_rng",
    "derive_seed",
    "RNG_ALGORITHM",
    # Enums
    "AufHorizon",
    "ExportFormat",
    "ResourceScope",
    "ViolationCode",
    "ViolationKind",
    # Formats
    "parse_sm",
    "render_sm",
    "PortfolioDescriptor",
    "parse_descriptor",
    "parse_portfolio",
    "export_schedule",
    "import_schedule",
    "parse_drawer_config",
    "render_drawer_config",
    "load_drawer_config",
    "BestKnown",
    "load_best_known",
    # Analysis
    "check_feasibility",
    "FeasibilityReport",
    "FeasibilityViolation",
    "makespan",
    "cpm_lower_bound",
    "resource_lower_bound",
    "lower_bound",
    "project_finishes",
    "auf",
    "brute_force_optimal",
    "BenchmarkRow",
    "BenchmarkSummary",
    "benchmark_report",
    "export_benchmark",
    "render_gantt",
]
