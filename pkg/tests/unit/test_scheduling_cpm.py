"""Test temporary schedules."""

import pytest
from hypothesis import given
from portfolio_factory import aid, build_portfolio, portfolios, single_resource

from drawersched.exceptions import InconsistentFixedError
from drawersched.models.portfolio import Portfolio, Project
from drawersched.scheduling.cpm import Network, latest_finishing_project, temporary_schedule


def _chain() -> Portfolio:
    # A(2) -> B(3) -> C(4)
    return single_resource([2, 3, 4], predecessors=[[], [1], [2]])


def test_chain_forward_pass() -> None:
    ts = temporary_schedule(_chain(), {}, 0)
    assert [ts[aid(f"1.{k}")].es for k in (1, 2, 3)] == [0, 2, 5]
    assert [ts[aid(f"1.{k}")].ef for k in (1, 2, 3)] == [2, 5, 9]
    assert all(ts.total_slack(aid(f"1.{k}")) == 0 for k in (1, 2, 3))
    assert ts.project_finish == (9,)


def test_parallel_join_slack() -> None:
    ts = temporary_schedule(single_resource([2, 5]), {}, 0)
    assert ts.total_slack(aid("1.1")) == 3
    assert ts.total_slack(aid("1.2")) == 0
    assert ts[aid("1.1")].lf == 5


def test_unscheduled_successor_is_clamped_to_t() -> None:
    portfolio = single_resource([2, 3], predecessors=[[], [1]])
    ts = temporary_schedule(portfolio, {aid("1.0"): 0, aid("1.1"): 0}, 4)
    assert ts[aid("1.2")].es == 4
    assert ts[aid("1.1")].es == 0


def test_release_date_clamps_earliest_start() -> None:
    portfolio = single_resource([2], release_date=6)
    ts = temporary_schedule(portfolio, {}, 0)
    assert ts[aid("1.1")].es == 6
    assert ts.project_finish == (8,)


def test_backward_pass_is_anchored_per_project() -> None:
    portfolio = build_portfolio(Project.from_activities(0, [10]), Project.from_activities(1, [3]))
    ts = temporary_schedule(portfolio, {}, 0)
    # the shorter project keeps its own zero-slack path
    assert ts.total_slack(aid("2.1")) == 0
    assert ts.portfolio_temp_finish == 10


def test_rejects_negative_time() -> None:
    with pytest.raises(ValueError, match=">= 0"):
        temporary_schedule(_chain(), {}, -1)


@pytest.mark.parametrize(
    "fixed,match",
    [
        ({"1.1": 0}, "predecessor 1.0 is not"),
        ({"1.0": 0, "1.1": 0, "1.2": 1}, "before predecessor 1.1"),
    ],
)
def test_inconsistent_fixed_starts(fixed: dict[str, int], match: str) -> None:
    with pytest.raises(InconsistentFixedError, match=match):
        temporary_schedule(_chain(), {aid(k): v for k, v in fixed.items()}, 3)


def test_fixed_before_release_date() -> None:
    portfolio = single_resource([1], release_date=2)
    with pytest.raises(InconsistentFixedError, match="release date"):
        temporary_schedule(portfolio, {aid("1.0"): 0}, 0)


class TestLatestFinishingProject:
    """Project with the largest temporary finish."""

    def test_single_project(self) -> None:
        assert latest_finishing_project(temporary_schedule(_chain(), {}, 0)) == 0

    def test_sources_fixed(self, four_projects: Portfolio, sources_fixed: dict) -> None:
        ts = temporary_schedule(four_projects, sources_fixed, 0)
        assert ts.project_finish == (12, 5, 6, 8)
        assert latest_finishing_project(ts) == 0

    def test_tie_goes_to_lowest_index(self) -> None:
        portfolio = build_portfolio(Project.from_activities(0, [10]), Project.from_activities(1, [10]))
        assert latest_finishing_project(temporary_schedule(portfolio, {}, 0)) == 0

    def test_later_project_wins_when_strictly_later(self) -> None:
        portfolio = build_portfolio(Project.from_activities(0, [4]), Project.from_activities(1, [2], release_date=5))
        assert latest_finishing_project(temporary_schedule(portfolio, {}, 0)) == 1

    def test_empty_portfolio(self) -> None:
        assert latest_finishing_project(temporary_schedule(Portfolio(), {}, 0)) is None


def test_network_accepts_compiled_input() -> None:
    network = Network.from_portfolio(_chain())
    assert temporary_schedule(network, {}, 0).project_finish == (9,)
    assert network.horizon_guard == 9


@given(portfolios())
def test_cpm_respects_precedence_and_release(portfolio: Portfolio) -> None:
    ts = temporary_schedule(portfolio, {}, 0)
    for activity in portfolio.iter_activities():
        times = ts[activity.id]
        assert times.es >= portfolio.projects[activity.id.project_index].release_date
        assert times.ls >= times.es
        for pred in activity.predecessors:
            assert times.es >= ts[pred].ef
            assert ts[pred].lf <= times.ls
    for project in portfolio.projects:
        assert ts.total_slack(project.sink.id) == 0


@given(portfolios())
def test_cpm_is_idempotent(portfolio: Portfolio) -> None:
    first = temporary_schedule(portfolio, {}, 0)
    second = temporary_schedule(portfolio, {}, 0)
    assert list(first.es) == list(second.es)
    assert list(first.ls) == list(second.ls)
