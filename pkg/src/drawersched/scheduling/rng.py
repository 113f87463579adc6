"""Seeded random streams.

Every run uses numpy's ``Generator(PCG64(seed))``. PCG64 and ``SeedSequence``
are specified bit-for-bit by numpy, so a seed reproduces the same shuffles on
every platform. Replication seeds are derived as

    H(master_seed, i) = SeedSequence([master_seed, i]).generate_state(1, uint64)[0]

which lets replications run in any order or in parallel without sharing a stream.
"""

from __future__ import annotations

import numpy as np

RNG_ALGORITHM = "numpy.random.PCG64"


def make_rng(seed: int) -> np.random.Generator:
    """Generator for one run.

    Raises:
        ValueError: If ``seed`` is negative
    """
    if seed < 0:
        raise ValueError(f"Seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def derive_seed(master_seed: int, run_index: int) -> int:
    """Seed of replication ``run_index`` under ``master_seed``."""
    if master_seed < 0 or run_index < 0:
        raise ValueError(f"master_seed and run_index must be non-negative, got {master_seed}, {run_index}")
    state = np.random.SeedSequence([master_seed, run_index]).generate_state(1, dtype=np.uint64)
    return int(state[0])
