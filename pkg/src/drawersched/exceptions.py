"""Exceptions for drawersched package."""

from __future__ import annotations

import os
from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from .models.validation import ValidationReport


class DrawerSchedError(Exception):
    """Base exception for all drawersched errors."""

    code: ClassVar[str] = "ERROR"


class InstanceError(DrawerSchedError):
    """Instance data could not be loaded or is unusable."""

    code: ClassVar[str] = "INSTANCE_ERROR"


class ParseError(InstanceError):
    """Malformed input file."""

    code: ClassVar[str] = "PARSE_ERROR"

    def __init__(
        self,
        message: str,
        line_number: int | None = None,
        expected: str | None = None,
        *,
        source: str | None = None,
    ) -> None:
        self.detail = message
        self.line_number = line_number
        self.expected = expected
        self.source = source
        if line_number is not None:
            message = f"line {line_number}: {message}"
        if expected is not None:
            message = f"{message} (expected {expected})"
        if source is not None:
            message = f"{source}: {message}"
        super().__init__(message)

    def in_file(self, source: str | os.PathLike[str]) -> ParseError:
        """Same error, attributed to the file ``source``."""
        return type(self)(self.detail, self.line_number, self.expected, source=os.fspath(source))


class InconsistentCountsError(ParseError):
    """Declared job count does not match the parsed rows."""

    code: ClassVar[str] = "INCONSISTENT_COUNTS"


class CapacityMismatchError(InstanceError):
    """Projects disagree on the capacity of a pooled global resource."""

    code: ClassVar[str] = "CAPACITY_MISMATCH"


class MissingFileError(InstanceError):
    """A file referenced by a descriptor does not exist."""

    code: ClassVar[str] = "MISSING_FILE"


class InvalidPortfolioError(InstanceError):
    """Portfolio failed structural validation."""

    code: ClassVar[str] = "INVALID_PORTFOLIO"

    def __init__(self, report: ValidationReport) -> None:
        summary = ", ".join(f"{v.code}({v.subject})" for v in report.violations[:5])
        more = len(report.violations) - 5
        if more > 0:
            summary += f", ... {more} more"
        super().__init__(f"Portfolio has {len(report.violations)} violation(s): {summary}")
        self.report = report


class SchedulingError(DrawerSchedError):
    """Scheduling could not proceed."""

    code: ClassVar[str] = "SCHEDULING_ERROR"


class InconsistentFixedError(SchedulingError):
    """A fixed start violates precedence or release dates."""

    code: ClassVar[str] = "INCONSISTENT_FIXED"


class UnclassifiedError(SchedulingError):
    """A candidate matched no drawer (the config has no catch-all)."""

    code: ClassVar[str] = "UNCLASSIFIED"


class NonTerminationError(SchedulingError):
    """Scheduling time passed the horizon guard."""

    code: ClassVar[str] = "NONTERMINATION"

    def __init__(self, message: str, run_index: int | None = None) -> None:
        if run_index is not None:
            message = f"run {run_index}: {message}"
        super().__init__(message)
        self.run_index = run_index


class BenchmarkError(DrawerSchedError):
    """Benchmark comparison failed."""

    code: ClassVar[str] = "BENCHMARK_ERROR"


class UnknownInstanceError(BenchmarkError):
    """Instance id missing from the best-known table."""

    code: ClassVar[str] = "UNKNOWN_INSTANCE"


class DrawerConfigError(DrawerSchedError):
    """Malformed drawer configuration."""

    code: ClassVar[str] = "DRAWER_CONFIG"
