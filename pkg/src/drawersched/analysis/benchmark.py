"""Comparison of simulated TMS against best-known results."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Final

from ..exceptions import UnknownInstanceError
from ..formats.best_known import BestKnown
from ..models.enums import ExportFormat
from ..simulation import SimulationResult

_LOGGER = logging.getLogger(__name__)

WITHIN_PERCENT: Final = 5

CSV_HEADER: Final = ("instance_id", "best_known_method", "best_known_tms", "our_tms", "gap_percent")


@dataclass(frozen=True, slots=True)
class BenchmarkRow:
    """Our TMS next to the best-known TMS of one instance."""

    instance_id: str
    best_known_tms: int
    best_known_method: str
    our_tms: int
    gap_percent: Fraction | None  # None when best_known_tms == 0

    @property
    def is_strictly_best(self) -> bool:
        return self.our_tms < self.best_known_tms

    @property
    def is_at_least_tied(self) -> bool:
        return self.our_tms <= self.best_known_tms

    def is_within(self, percent: int = WITHIN_PERCENT) -> bool:
        """Gap strictly below ``percent`` (ties and improvements included)."""
        if self.gap_percent is None:
            return self.is_at_least_tied
        return self.gap_percent < percent


@dataclass(frozen=True, slots=True)
class BenchmarkSummary:
    """Success counts over a set of instances."""

    instances: int
    strictly_best: int
    at_least_tied: int
    within_5_percent: int


def _gap(our: int, best: int) -> Fraction | None:
    if best <= 0:
        return None
    return Fraction(our - best, best) * 100


def benchmark_report(
    results: Sequence[tuple[str, SimulationResult | int]],
    best_known: Mapping[str, BestKnown],
) -> tuple[list[BenchmarkRow], BenchmarkSummary]:
    """Build one row per result plus the summary counts.

    Args:
        results: ``(instance_id, result)`` pairs; a bare int is taken as our TMS
        best_known: Table from load_best_known

    Returns:
        Rows in input order and the summary

    Raises:
        UnknownInstanceError: If an instance id is not in ``best_known``
    """
    rows: list[BenchmarkRow] = []
    for instance_id, result in results:
        entry = best_known.get(instance_id)
        if entry is None:
            raise UnknownInstanceError(f"Instance {instance_id!r} not in best-known table")
        our = result if isinstance(result, int) else result.best_tms
        rows.append(
            BenchmarkRow(
                instance_id=instance_id,
                best_known_tms=entry.tms,
                best_known_method=entry.method,
                our_tms=our,
                gap_percent=_gap(our, entry.tms),
            )
        )
    summary = BenchmarkSummary(
        instances=len(rows),
        strictly_best=sum(r.is_strictly_best for r in rows),
        at_least_tied=sum(r.is_at_least_tied for r in rows),
        within_5_percent=sum(r.is_within() for r in rows),
    )
    _LOGGER.info(
        "Benchmark over %d instance(s): %d best, %d tied or better, %d within %d%%",
        summary.instances,
        summary.strictly_best,
        summary.at_least_tied,
        summary.within_5_percent,
        WITHIN_PERCENT,
    )
    return rows, summary


def _format_gap(gap: Fraction | None) -> str:
    return "" if gap is None else f"{float(gap):.2f}"


def export_benchmark(
    rows: Sequence[BenchmarkRow],
    summary: BenchmarkSummary,
    fmt: ExportFormat = ExportFormat.CSV,
) -> str:
    """Render rows and summary as CSV (with ``#`` trailer lines) or JSON."""
    if fmt == ExportFormat.JSON:
        document: dict[str, Any] = {
            "rows": [
                {
                    "instance_id": r.instance_id,
                    "best_known_method": r.best_known_method,
                    "best_known_tms": r.best_known_tms,
                    "our_tms": r.our_tms,
                    "gap_percent": None if r.gap_percent is None else round(float(r.gap_percent), 2),
                }
                for r in rows
            ],
            "summary": {
                "instances": summary.instances,
                "strictly_best": summary.strictly_best,
                "at_least_tied": summary.at_least_tied,
                "within_5_percent": summary.within_5_percent,
            },
        }
        return json.dumps(document, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.instance_id, r.best_known_method, r.best_known_tms, r.our_tms, _format_gap(r.gap_percent)])
    buffer.write(f"# strictly_best={summary.strictly_best}\n")
    buffer.write(f"# at_least_tied={summary.at_least_tied}\n")
    buffer.write(f"# within_5_percent={summary.within_5_percent}\n")
    return buffer.getvalue()
