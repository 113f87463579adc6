"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from portfolio_factory import four_project_portfolio, single_resource, sources_fixed_at_zero
from sm_samples import FOUR_RESOURCE_SM, MINIMAL_SM

from drawersched import ActivityId, Portfolio

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def four_projects() -> Portfolio:
    """Four-project portfolio of the worked classification example."""
    return four_project_portfolio()


@pytest.fixture
def sources_fixed(four_projects: Portfolio) -> dict[ActivityId, int]:
    """Dummy sources fixed at 0, everything else unscheduled."""
    return sources_fixed_at_zero(four_projects)


@pytest.fixture
def oracle_fixture() -> Portfolio:
    """Four independent activities (3, 3, 2, 2), demand 1 each, capacity 2; optimum 5."""
    return single_resource([3, 3, 2, 2], [1, 1, 1, 1], capacity=2)


@pytest.fixture
def contended_pair() -> Portfolio:
    """Two independent unit activities competing for a unit resource."""
    return single_resource([1, 1], [1, 1], capacity=1)


@pytest.fixture
def sm_dir(tmp_path: Path) -> Path:
    """Directory holding two four-resource ``.sm`` files and a minimal one."""
    (tmp_path / "a.sm").write_text(FOUR_RESOURCE_SM, encoding="utf-8")
    (tmp_path / "b.sm").write_text(FOUR_RESOURCE_SM.replace("j30demo.bas", "other.bas"), encoding="utf-8")
    (tmp_path / "minimal.sm").write_text(MINIMAL_SM, encoding="utf-8")
    return tmp_path
