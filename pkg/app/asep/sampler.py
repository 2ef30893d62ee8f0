"""Monte-Carlo sanity check of the exact solver."""

from __future__ import annotations

import logging

import numpy as np
import pandas as pd

from .chain import ChainSector

log = logging.getLogger(__name__)


def sample_trajectory(sector: ChainSector, steps: int, seed: int) -> pd.Series:
    """Visit frequencies after a burn-in of floor(steps/2) steps, indexed by state."""
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    P = sector.matrix.astype(float)
    cum = np.cumsum(P, axis=1)
    cum[:, -1] = 1.0
    rng = np.random.default_rng(seed)
    draws = rng.random(steps)
    burn = steps // 2
    counts = np.zeros(sector.size, dtype=np.int64)
    state = 0
    for k in range(steps):
        state = int(np.searchsorted(cum[state], draws[k], side="right"))
        if k >= burn:
            counts[state] += 1
    log.info("[asep] sampled %d steps (burn-in %d) from state %s", steps, burn, sector.states[0])
    return pd.Series(counts / counts.sum(), index=sector.labels(), name="frequency")
