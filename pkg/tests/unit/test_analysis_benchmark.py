"""Test the comparison against best-known results."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from drawersched.analysis.benchmark import benchmark_report, export_benchmark
from drawersched.exceptions import ParseError, UnknownInstanceError
from drawersched.formats.best_known import BestKnown, load_best_known, parse_best_known
from drawersched.models.enums import ExportFormat

TABLE = {
    "3": BestKnown("3", "GA_WS", 242),
    "8": BestKnown("8", "MAS/PS", 65),
    "X": BestKnown("X", "DEMO", 100),
}


@pytest.mark.parametrize(
    "instance,ours,gap,best,tied,within",
    [
        # (instance, our TMS) -> gap %, strictly best, at least tied, within 5 %
        ("8", 65, Fraction(0), False, True, True),
        ("3", 242, Fraction(0), False, True, True),
        ("X", 105, Fraction(5), False, False, False),
        ("X", 104, Fraction(4), False, False, True),
        ("X", 90, Fraction(-10), True, True, True),
    ],
)
def test_rows(instance: str, ours: int, gap: Fraction, best: bool, tied: bool, within: bool) -> None:
    [row], _ = benchmark_report([(instance, ours)], TABLE)
    assert row.gap_percent == gap
    assert row.is_strictly_best is best
    assert row.is_at_least_tied is tied
    assert row.is_within() is within


def test_summary_counts() -> None:
    _, summary = benchmark_report([("8", 65), ("3", 240), ("X", 105)], TABLE)
    assert summary.instances == 3
    assert summary.strictly_best == 1
    assert summary.at_least_tied == 2
    assert summary.within_5_percent == 2


def test_unknown_instance() -> None:
    with pytest.raises(UnknownInstanceError, match="'nope'"):
        benchmark_report([("nope", 10)], TABLE)


def test_zero_best_known_has_no_gap() -> None:
    [row], _ = benchmark_report([("z", 0)], {"z": BestKnown("z", "M", 0)})
    assert row.gap_percent is None
    assert row.is_within()


class TestExport:
    """CSV and JSON renderings."""

    def test_csv(self) -> None:
        rows, summary = benchmark_report([("8", 65), ("X", 105)], TABLE)
        assert export_benchmark(rows, summary) == (
            "instance_id,best_known_method,best_known_tms,our_tms,gap_percent\n"
            "8,MAS/PS,65,65,0.00\n"
            "X,DEMO,100,105,5.00\n"
            "# strictly_best=0\n"
            "# at_least_tied=1\n"
            "# within_5_percent=1\n"
        )

    def test_json(self) -> None:
        rows, summary = benchmark_report([("3", 250)], TABLE)
        document = json.loads(export_benchmark(rows, summary, ExportFormat.JSON))
        assert document["rows"][0]["gap_percent"] == pytest.approx(3.31, abs=0.01)
        assert document["summary"] == {"instances": 1, "strictly_best": 0, "at_least_tied": 0, "within_5_percent": 1}


class TestBestKnownTable:
    """Packaged and custom best-known tables."""

    def test_packaged_table(self) -> None:
        table = load_best_known()
        assert table["8"] == BestKnown("8", "MAS/PS", 65)
        assert table["3"].tms == 242
        assert "4" not in table

    def test_parse_skips_comments(self) -> None:
        table = parse_best_known("# source\ninstance_id,method,tms\n\n1,GA,10\n")
        assert table == {"1": BestKnown("1", "GA", 10)}

    @pytest.mark.parametrize(
        "text,match",
        [
            ("", "empty"),
            ("id,method,tms\n", "bad header"),
            ("instance_id,method,tms\n1,GA\n", "line 2: 2 fields"),
            ("instance_id,method,tms\n1,GA,ten\n", "not an integer"),
            ("instance_id,method,tms\n1,GA,10\n1,GA,11\n", "duplicate"),
        ],
    )
    def test_parse_errors(self, text: str, match: str) -> None:
        with pytest.raises(ParseError, match=match):
            parse_best_known(text)

    def test_custom_file(self, tmp_path: Path) -> None:
        path = tmp_path / "table.csv"
        path.write_text("instance_id,method,tms\nA,M,7\n", encoding="utf-8")
        assert load_best_known(path)["A"].tms == 7

    def test_file_not_utf8(self, tmp_path: Path) -> None:
        path = tmp_path / "table.csv"
        path.write_bytes(b"instance_id,method,tms\nA,M\xe9thode,7\n")
        with pytest.raises(ParseError, match="invalid UTF-8"):
            load_best_known(path)
