"""Test schedule export and import."""

import json

import pytest
from portfolio_factory import aid, random_portfolio, single_resource

from drawersched.exceptions import ParseError
from drawersched.formats.schedule_io import export_schedule, import_schedule
from drawersched.models.drawers import default_drawer_config
from drawersched.models.enums import ExportFormat
from drawersched.models.portfolio import Portfolio
from drawersched.models.schedule import Schedule
from drawersched.scheduling.psgs import run_psgs


def test_single_activity_csv() -> None:
    portfolio = single_resource([4])
    schedule = Schedule.from_starts(portfolio, {aid("1.0"): 0, aid("1.1"): 0, aid("1.2"): 4})
    assert export_schedule(schedule, portfolio) == (
        "project,activity,start,finish\n1,0,0,0\n1,1,0,4\n1,2,4,4\n# TMS=4\n"
    )


def test_empty_portfolio_csv() -> None:
    assert export_schedule(Schedule(), Portfolio()) == "project,activity,start,finish\n# TMS=0\n"


def test_json_document() -> None:
    portfolio = single_resource([4])
    schedule = Schedule.from_starts(portfolio, {aid("1.0"): 0, aid("1.1"): 0, aid("1.2"): 4})
    document = json.loads(export_schedule(schedule, portfolio, ExportFormat.JSON))
    assert document["tms"] == 4
    assert document["assignments"][1] == {"project": 1, "activity": 1, "start": 0, "finish": 4}


@pytest.mark.parametrize("fmt", list(ExportFormat))
def test_round_trip(fmt: ExportFormat) -> None:
    portfolio = random_portfolio(8)
    schedule = run_psgs(portfolio, default_drawer_config(), 0)
    text = export_schedule(schedule, portfolio, fmt)
    assert import_schedule(text, fmt) == dict(schedule.starts)
    assert export_schedule(schedule, portfolio, fmt) == text


def test_import_ignores_blank_and_comment_lines() -> None:
    text = "# exported\n\nproject,activity,start,finish\n2,3,7,9\n# TMS=9\n"
    assert import_schedule(text) == {aid("2.3"): 7}


@pytest.mark.parametrize(
    "text,match",
    [
        ("", "missing header"),
        ("p,a,s,f\n", "line 1: bad header"),
        ("project,activity,start,finish\n1,1,0\n", "line 2: 3 fields"),
        ("project,activity,start,finish\n1,one,0,4\n", "line 2: non-integer"),
        ("project,activity,start,finish\n0,1,0,4\n", "bad activity 0.1"),
        ("project,activity,start,finish\n1,1,0,4\n1,1,2,6\n", "line 3: activity 1.1 listed twice"),
    ],
)
def test_csv_import_errors(text: str, match: str) -> None:
    with pytest.raises(ParseError, match=match):
        import_schedule(text)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"tms": 1}',
        '{"assignments": [{"project": 1}]}',
        '{"assignments": [{"project": 1, "activity": 1, "start": 0}, {"project": 1, "activity": 1, "start": 1}]}',
    ],
)
def test_json_import_errors(text: str) -> None:
    with pytest.raises(ParseError):
        import_schedule(text, ExportFormat.JSON)


@pytest.mark.parametrize(
    "field,value",
    [
        ("start", "2.7"),
        ("start", "true"),
        ("start", '"3"'),
        ("activity", "1.0"),
        ("project", "null"),
    ],
)
def test_json_import_requires_integers(field: str, value: str) -> None:
    item = {"project": "1", "activity": "1", "start": "0"} | {field: value}
    text = '{"assignments": [{' + ", ".join(f'"{k}": {v}' for k, v in item.items()) + "}]}"
    with pytest.raises(ParseError, match=f"{field} .* is not an integer"):
        import_schedule(text, ExportFormat.JSON)
