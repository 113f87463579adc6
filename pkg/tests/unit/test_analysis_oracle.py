"""Test the exact small-instance oracle."""

import pytest
from portfolio_factory import build_portfolio, single_resource, tiny_contention_portfolio

from drawersched.analysis.bounds import lower_bound
from drawersched.analysis.oracle import brute_force_optimal
from drawersched.exceptions import InvalidPortfolioError
from drawersched.models.portfolio import Portfolio, Project
from drawersched.simulation import RunConfig, simulate


def test_serialized_pair(contended_pair: Portfolio) -> None:
    assert brute_force_optimal(contended_pair) == 2


def test_chain_with_ample_capacity() -> None:
    portfolio = single_resource([1, 2, 3], [1, 1, 1], capacity=3, predecessors=[[], [1], [2]])
    assert brute_force_optimal(portfolio) == 6


def test_pairing_reaches_work_bound(oracle_fixture: Portfolio) -> None:
    assert brute_force_optimal(oracle_fixture) == 5


def test_unit_resource_serializes_everything() -> None:
    portfolio = single_resource([1, 3, 4], [1, 1, 1], capacity=1, predecessors=[[], [], [1]])
    assert brute_force_optimal(portfolio) == 8


def test_release_dates() -> None:
    portfolio = build_portfolio(
        Project.from_activities(0, [2], [{0: 1}]),
        Project.from_activities(1, [2], [{0: 1}], release_date=1),
        capacities=[1],
    )
    assert brute_force_optimal(portfolio) == 4


def test_empty_portfolio() -> None:
    assert brute_force_optimal(Portfolio()) == 0


def test_exhausted_budget_returns_none() -> None:
    portfolio = single_resource([3, 2, 2, 1], [1, 1, 1, 1], capacity=2)
    assert brute_force_optimal(portfolio, budget=2) is None


def test_rejects_bad_input() -> None:
    with pytest.raises(ValueError, match="budget"):
        brute_force_optimal(single_resource([1]), budget=0)
    with pytest.raises(InvalidPortfolioError):
        brute_force_optimal(single_resource([1], [2], capacity=1))


@pytest.mark.slow
def test_best_of_runs_never_beats_optimum() -> None:
    instances = 60
    optimal_hits = 0
    for seed in range(instances):
        portfolio = tiny_contention_portfolio(seed)
        optimum = brute_force_optimal(portfolio)
        assert optimum is not None, seed
        assert optimum >= lower_bound(portfolio)
        best = simulate(portfolio, RunConfig(n_runs=100, master_seed=seed)).best_tms
        assert best >= optimum, seed
        optimal_hits += best == optimum
    rate = optimal_hits / instances
    print(f"best-of-100 optimal on {optimal_hits}/{instances} instances ({rate:.0%})")
    assert rate >= 0.8, f"optimal on only {optimal_hits}/{instances} instances"
