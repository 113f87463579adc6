"""Repeated seeded runs of the drawer P-SGS, keeping the best schedule."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidPortfolioError, NonTerminationError
from .models.drawers import DrawerConfig, default_drawer_config
from .models.portfolio import ActivityId, Portfolio
from .models.schedule import Schedule
from .models.validation import validate_portfolio
from .scheduling.cpm import Network
from .scheduling.psgs import run_psgs_network
from .scheduling.rng import derive_seed

_LOGGER = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int, int], None]
"""Called as ``(run_index, tms, running_best)`` in run-index order."""


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Simulation protocol: how many runs, which seeds, which drawers."""

    n_runs: int = 100
    master_seed: int = 0
    drawer_config: DrawerConfig = field(default_factory=default_drawer_config)
    workers: int = 1
    keep_schedules: bool = False
    fast_forward: bool = True

    def __post_init__(self) -> None:
        if self.n_runs < 1:
            raise ValueError(f"n_runs must be >= 1, got {self.n_runs}")
        if self.master_seed < 0:
            raise ValueError(f"master_seed must be >= 0, got {self.master_seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def seed(self, run_index: int) -> int:
        """Seed of replication ``run_index``."""
        return derive_seed(self.master_seed, run_index)


@dataclass(frozen=True, slots=True)
class SimulationResult:
    """Best schedule over all runs plus the per-run TMS sample."""

    best: Schedule
    best_run_index: int
    tms_samples: tuple[int, ...]
    wall_time: float
    schedules: tuple[Schedule, ...] | None = None

    @property
    def best_tms(self) -> int:
        return self.best.tms

    @property
    def running_best(self) -> tuple[int, ...]:
        """Running minimum of the samples (non-increasing)."""
        return tuple(int(v) for v in np.minimum.accumulate(np.asarray(self.tms_samples, dtype=np.int64)))

    @property
    def mean_tms(self) -> float:
        return float(np.mean(self.tms_samples))

    @property
    def std_tms(self) -> float:
        return float(np.std(self.tms_samples))


# Worker-process state, set once per process by _init_worker.
_WORKER_NETWORK: Network | None = None
_WORKER_CONFIG: RunConfig | None = None

_RunOutcome = tuple[int, dict[ActivityId, int] | None, str | None]


def _init_worker(network: Network, cfg: RunConfig) -> None:
    global _WORKER_NETWORK, _WORKER_CONFIG  # pylint: disable=global-statement
    _WORKER_NETWORK = network
    _WORKER_CONFIG = cfg


def _replicate(run_index: int) -> _RunOutcome:
    assert _WORKER_NETWORK is not None and _WORKER_CONFIG is not None
    return _run_one(_WORKER_NETWORK, _WORKER_CONFIG, run_index)


def _run_one(network: Network, cfg: RunConfig, run_index: int) -> _RunOutcome:
    try:
        schedule, _ = run_psgs_network(
            network, cfg.drawer_config, cfg.seed(run_index), fast_forward=cfg.fast_forward
        )
    except NonTerminationError as e:
        return run_index, None, str(e)
    return run_index, dict(schedule.starts), None


def _outcomes(network: Network, cfg: RunConfig) -> Iterator[_RunOutcome]:
    """Run outcomes in run-index order, whatever the worker count."""
    if cfg.workers == 1:
        for run_index in range(cfg.n_runs):
            yield _run_one(network, cfg, run_index)
        return
    chunksize = max(1, cfg.n_runs // (cfg.workers * 4))
    with ProcessPoolExecutor(max_workers=cfg.workers, initializer=_init_worker, initargs=(network, cfg)) as pool:
        yield from pool.map(_replicate, range(cfg.n_runs), chunksize=chunksize)


def simulate(
    portfolio: Portfolio,
    cfg: RunConfig,
    progress: ProgressCallback | None = None,
) -> SimulationResult:
    """Run ``cfg.n_runs`` independent replications and keep the minimum-TMS schedule.

    Replication ``i`` uses seed ``derive_seed(master_seed, i)``. Results do not
    depend on ``cfg.workers``: outcomes are reduced in run-index order and ties
    go to the lowest run index.

    Args:
        portfolio: Validated portfolio
        cfg: Simulation protocol
        progress: Optional ``(run_index, tms, running_best)`` callback

    Returns:
        SimulationResult

    Raises:
        InvalidPortfolioError: If the portfolio fails validation
        NonTerminationError: Carrying the offending run index
    """
    report = validate_portfolio(portfolio)
    if report:
        raise InvalidPortfolioError(report)
    network = Network.from_portfolio(portfolio)
    durations = dict(zip(network.ids, network.duration, strict=True))

    started = time.perf_counter()
    samples: list[int] = []
    kept: list[Schedule] = []
    best: Schedule | None = None
    best_index = -1

    for run_index, starts, error in _outcomes(network, cfg):
        if starts is None:
            raise NonTerminationError(error or "run did not terminate", run_index=run_index)
        schedule = Schedule(starts=starts, durations=durations)
        tms = schedule.tms
        samples.append(tms)
        if best is None or tms < best.tms:
            best, best_index = schedule, run_index
        if cfg.keep_schedules:
            kept.append(schedule)
        if progress is not None:
            progress(run_index, tms, best.tms)

    assert best is not None
    wall_time = time.perf_counter() - started
    _LOGGER.info(
        "Simulated %d run(s) with %s drawers in %.2fs: best TMS %d (run %d), mean %.2f",
        cfg.n_runs,
        cfg.drawer_config.name,
        wall_time,
        best.tms,
        best_index,
        float(np.mean(samples)),
    )
    return SimulationResult(
        best=best,
        best_run_index=best_index,
        tms_samples=tuple(samples),
        wall_time=wall_time,
        schedules=tuple(kept) if cfg.keep_schedules else None,
    )
