"""Test the command-line interface."""

from pathlib import Path

import pytest
from sm_samples import MINIMAL_SM

from drawersched.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, WORKERS_ENV, _default_workers, main
from drawersched.formats.sm import render_sm
from drawersched.models.portfolio import Project


@pytest.fixture
def oracle_sm(tmp_path: Path) -> Path:
    """Four independent activities (3, 3, 2, 2) sharing a capacity-2 resource."""
    project = Project.from_activities(0, [3, 3, 2, 2], [{0: 1}] * 4, name="oracle", declared_capacities=[2])
    path = tmp_path / "oracle.sm"
    path.write_text(render_sm(project), encoding="utf-8")
    return path


@pytest.fixture
def pair_desc(sm_dir: Path) -> Path:
    """Two-project descriptor sharing resource 1."""
    path = sm_dir / "pair.desc"
    path.write_text("global 0\nproject a.sm release 0\nproject b.sm release 2\n", encoding="utf-8")
    return path


def test_oracle_prints_optimum(oracle_sm: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["oracle", str(oracle_sm)]) == EXIT_OK
    assert capsys.readouterr().out == "5\n"


def test_oracle_budget_exhausted(oracle_sm: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["oracle", str(oracle_sm), "--budget", "1"]) == EXIT_OK
    assert capsys.readouterr().out == "unknown\n"


def test_solve_prints_tms_and_writes_outputs(
    oracle_sm: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    schedule = tmp_path / "schedule.csv"
    gantt = tmp_path / "chart.png"
    assert main(["solve", str(oracle_sm), "--seed", "3", "-o", str(schedule), "--gantt", str(gantt)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("TMS=")
    assert schedule.read_text(encoding="utf-8").endswith(f"# {out.strip()}\n")
    assert gantt.read_bytes().startswith(b"\x89PNG")


def test_simulate_is_deterministic(pair_desc: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    outputs = []
    for attempt in range(2):
        schedule = tmp_path / f"best{attempt}.json"
        samples = tmp_path / f"samples{attempt}.csv"
        argv = ["simulate", "--runs", "20", "--seed", "7", str(pair_desc), "-o", str(schedule), "--format", "json"]
        assert main([*argv, "--samples", str(samples)]) == EXIT_OK
        outputs.append((capsys.readouterr().out, schedule.read_bytes(), samples.read_bytes()))
    assert outputs[0] == outputs[1]
    lines = outputs[0][2].decode().splitlines()
    assert lines[0] == "run,tms,running_best"
    assert len(lines) == 21


def test_solve_matches_first_simulated_run(oracle_sm: Path, capsys: pytest.CaptureFixture[str]) -> None:
    main(["solve", str(oracle_sm), "--seed", "11"])
    solved = capsys.readouterr().out.split()[0]
    main(["simulate", str(oracle_sm), "--seed", "11", "--runs", "1"])
    assert capsys.readouterr().out.split()[0] == solved


class TestValidate:
    """Portfolio and schedule checks."""

    def test_scheduler_output_is_feasible(
        self, pair_desc: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        schedule = tmp_path / "schedule.csv"
        assert main(["solve", str(pair_desc), "-o", str(schedule)]) == EXIT_OK
        tms = capsys.readouterr().out.strip()
        assert main(["validate", str(pair_desc), str(schedule)]) == EXIT_OK
        assert capsys.readouterr().out == f"feasible: {tms}\n"

    def test_infeasible_schedule(self, sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        schedule = sm_dir / "bad.csv"
        schedule.write_text("project,activity,start,finish\n1,0,0,0\n1,1,0,4\n1,2,1,1\n", encoding="utf-8")
        assert main(["validate", str(sm_dir / "minimal.sm"), str(schedule)]) == EXIT_VIOLATIONS
        out = capsys.readouterr().out
        assert "precedence 1.2,1.1: starts at 1, predecessor finishes at 4" in out

    def test_valid_portfolio(self, sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["validate", str(sm_dir / "minimal.sm")]) == EXIT_OK
        assert capsys.readouterr().out == "valid: 1 project(s), 3 activities\n"

    def test_invalid_portfolio(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "tight.sm"
        path.write_text(MINIMAL_SM.replace("  R 1\n    4\n", "  R 1\n    1\n"), encoding="utf-8")
        assert main(["validate", str(path)]) == EXIT_VIOLATIONS
        assert capsys.readouterr().out.startswith("DEMAND_EXCEEDS_CAPACITY 1.1: Demand 2 exceeds capacity 1")

    def test_missing_schedule_file(self, sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["validate", str(sm_dir / "minimal.sm"), str(sm_dir / "none.csv")]) == EXIT_DATA
        assert "MISSING_FILE" in capsys.readouterr().err


def test_auf_table(sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["auf", str(sm_dir / "minimal.sm")]) == EXIT_OK
    assert capsys.readouterr().out == "resource,scope,capacity,auf\nP1.R1,local,4,0.5000\n"


def test_bench(pair_desc: Path, sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    table = sm_dir / "best.csv"
    table.write_text("instance_id,method,tms\npair,DEMO,1000\nsingle,DEMO,1\n", encoding="utf-8")
    manifest = sm_dir / "bench.txt"
    manifest.write_text("pair pair.desc\nsingle minimal.sm  # one project\n", encoding="utf-8")

    assert main(["bench", str(manifest), "--best-known", str(table), "--runs", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "instance_id,best_known_method,best_known_tms,our_tms,gap_percent"
    assert lines[1].startswith("pair,DEMO,1000,")
    assert lines[2] == "single,DEMO,1,4,300.00"
    assert lines[3:] == ["# strictly_best=1", "# at_least_tied=1", "# within_5_percent=1"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["simulate"],
        ["solve", "x.sm", "--seed", "-1"],
        ["simulate", "x.sm", "--runs", "0"],
        ["auf", "x.sm", "--horizon", "decade"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    assert main(argv) == EXIT_USAGE


def test_help_exits_cleanly(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--help"]) == EXIT_OK
    assert "simulate" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["solve", "absent.sm"], "MISSING_FILE"),
        (["solve", "{minimal}", "--drawers", "absent.drawers"], "MISSING_FILE"),
        (["bench", "absent.txt"], "MISSING_FILE"),
    ],
)
def test_data_errors(argv: list[str], code: str, sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = [a.format(minimal=sm_dir / "minimal.sm") for a in argv]
    assert main(argv) == EXIT_DATA
    assert f"error [{code}]" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "{latin_sm}"],
        ["validate", "{latin_desc}"],
        ["validate", "{minimal}", "{latin_bytes}"],
        ["solve", "{minimal}", "--drawers", "{latin_bytes}"],
        ["bench", "{latin_bytes}"],
    ],
)
def test_non_utf8_input_is_a_data_error(
    argv: list[str], sm_dir: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    latin_sm = sm_dir / "latin.sm"
    latin_sm.write_bytes(MINIMAL_SM.encode().replace(b"minimal", b"min\xe9mal"))
    latin_desc = sm_dir / "latin.desc"
    latin_desc.write_bytes(b"project \xff\xfe.sm release 0\n")
    latin_bytes = sm_dir / "latin.txt"
    latin_bytes.write_bytes(b"\xff\xfe\x00garbage\n")
    argv = [
        a.format(minimal=sm_dir / "minimal.sm", latin_sm=latin_sm, latin_desc=latin_desc, latin_bytes=latin_bytes)
        for a in argv
    ]

    assert main(argv) == EXIT_DATA
    err = capsys.readouterr().err
    assert "error [PARSE_ERROR]" in err
    assert "invalid UTF-8" in err
    assert "Traceback" not in err


def test_drawer_file_option(sm_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    drawers = sm_dir / "critical.drawers"
    drawers.write_text("drawer zero_slack\ndrawer *\n", encoding="utf-8")
    assert main(["solve", str(sm_dir / "minimal.sm"), "--drawers", str(drawers)]) == EXIT_OK
    assert capsys.readouterr().out == "TMS=4\n"


@pytest.mark.parametrize(
    "value,expected",
    [
        (None, 1),
        ("3", 3),
        ("0", 1),
        ("many", 1),
    ],
)
def test_default_workers(value: str | None, expected: int, monkeypatch: pytest.MonkeyPatch) -> None:
    if value is None:
        monkeypatch.delenv(WORKERS_ENV, raising=False)
    else:
        monkeypatch.setenv(WORKERS_ENV, value)
    assert _default_workers() == expected
