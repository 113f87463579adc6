"""Verification and measurement of schedules."""

from .benchmark import BenchmarkRow, BenchmarkSummary, benchmark_report, export_benchmark
from .bounds import auf, cpm_lower_bound, lower_bound, makespan, project_finishes, resource_lower_bound
from .feasibility import FeasibilityReport, FeasibilityViolation, check_feasibility
from .gantt import render_gantt
from .oracle import DEFAULT_BUDGET, brute_force_optimal

__all__ = [
    "DEFAULT_BUDGET",
    "BenchmarkRow",
    "BenchmarkSummary",
    "FeasibilityReport",
    "FeasibilityViolation",
    "auf",
    "benchmark_report",
    "brute_force_optimal",
    "check_feasibility",
    "cpm_lower_bound",
    "export_benchmark",
    "lower_bound",
    "makespan",
    "project_finishes",
    "render_gantt",
    "resource_lower_bound",
]
