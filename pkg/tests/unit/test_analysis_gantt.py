"""Test Gantt chart rendering."""

import pytest
from portfolio_factory import aid, build_portfolio, single_resource

from drawersched.analysis.gantt import PROJECT_COLORS, render_gantt
from drawersched.models.portfolio import Project
from drawersched.models.schedule import Schedule


def test_bars_and_size() -> None:
    portfolio = single_resource([2, 3])
    schedule = Schedule.from_starts(portfolio, {aid("1.0"): 0, aid("1.1"): 0, aid("1.2"): 2, aid("1.3"): 5})

    image = render_gantt(schedule, portfolio)

    # 5 periods of 12 px and 2 rows of 16 px, plus a 4 px margin
    assert image.size == (68, 40)
    assert image.mode == "RGB"
    assert image.getpixel((10, 10)) == PROJECT_COLORS[0]
    assert image.getpixel((40, 28)) == PROJECT_COLORS[0]
    assert image.getpixel((10, 28)) == (255, 255, 255)


def test_projects_get_their_own_color() -> None:
    portfolio = build_portfolio(Project.from_activities(0, [1]), Project.from_activities(1, [1]))
    starts = {a: 0 for a in portfolio.activity_ids()}
    image = render_gantt(Schedule.from_starts(portfolio, starts), portfolio, period_width=10, row_height=10)
    assert image.getpixel((8, 8)) == PROJECT_COLORS[0]
    assert image.getpixel((8, 18)) == PROJECT_COLORS[1]


def test_empty_schedule_still_renders() -> None:
    portfolio = single_resource([0])
    schedule = Schedule.from_starts(portfolio, {a: 0 for a in portfolio.activity_ids()})
    assert render_gantt(schedule, portfolio).size == (20, 24)


def test_rejects_bad_sizes() -> None:
    portfolio = single_resource([1])
    schedule = Schedule.from_starts(portfolio, {a: 0 for a in portfolio.activity_ids()})
    with pytest.raises(ValueError, match="period_width"):
        render_gantt(schedule, portfolio, period_width=0)
