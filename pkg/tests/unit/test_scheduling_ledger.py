"""Test the per-period resource ledger and single placements."""

import numpy as np
from portfolio_factory import aid, single_resource

from drawersched.scheduling.ledger import ResourceLedger
from drawersched.scheduling.psgs import Deferred, Scheduled, try_schedule


def test_try_schedule_second_activity_is_deferred() -> None:
    portfolio = single_resource([1, 1], [2, 2], capacity=3)
    ledger = ResourceLedger.for_portfolio(portfolio)

    assert try_schedule(aid("1.1"), 0, ledger, portfolio) == Scheduled(aid("1.1"), 0)
    assert ledger.usage(0, 0) == 2

    outcome = try_schedule(aid("1.2"), 0, ledger, portfolio)
    assert outcome == Deferred(aid("1.2"), 0, resource_id=0, period=0)
    assert ledger.usage(0, 0) == 2


def test_zero_duration_dummy_leaves_ledger_unchanged() -> None:
    portfolio = single_resource([1], [3], capacity=3)
    ledger = ResourceLedger.for_portfolio(portfolio)
    ledger.commit(np.array([3]), 0, 5)
    before = ledger.profile(0)

    assert isinstance(try_schedule(aid("1.0"), 2, ledger, portfolio), Scheduled)
    assert np.array_equal(ledger.profile(0), before)


def test_deferral_checks_every_period() -> None:
    portfolio = single_resource([2], [2], capacity=3)
    ledger = ResourceLedger.for_portfolio(portfolio)
    ledger.commit(np.array([1]), 0, 1)
    ledger.commit(np.array([2]), 1, 1)

    outcome = try_schedule(aid("1.1"), 0, ledger, portfolio)
    assert outcome == Deferred(aid("1.1"), 0, resource_id=0, period=1)
    assert ledger.profile(0, 2).tolist() == [1, 2]


class TestResourceLedger:
    """Usage bookkeeping."""

    def test_grows_past_initial_horizon(self) -> None:
        ledger = ResourceLedger([2], horizon=4)
        demand = np.array([2])
        assert ledger.fits(demand, 10, 3)
        ledger.commit(demand, 10, 3)
        assert ledger.horizon >= 13
        assert ledger.usage(0, 12) == 2
        assert ledger.usage(0, 13) == 0
        assert not ledger.fits(np.array([1]), 11, 1)

    def test_usage_beyond_horizon_is_zero(self) -> None:
        ledger = ResourceLedger([1, 1], horizon=2)
        assert ledger.usage(1, 500) == 0
        assert ledger.is_idle_from(500)

    def test_demand_vector_and_multi_resource_fit(self) -> None:
        ledger = ResourceLedger([3, 1])
        vector = ledger.demand_vector({1: 1})
        assert vector.tolist() == [0, 1]
        ledger.commit(vector, 0, 2)
        assert ledger.fits(ledger.demand_vector({0: 3}), 0, 2)
        assert not ledger.fits(ledger.demand_vector({0: 1, 1: 1}), 1, 1)
        assert ledger.is_within_capacity()
        assert ledger.is_idle_from(2)
        assert not ledger.is_idle_from(1)

    def test_zero_demand_always_fits(self) -> None:
        ledger = ResourceLedger([0])
        assert ledger.fits(np.array([0]), 0, 5)
        assert ledger.resource_count == 1
