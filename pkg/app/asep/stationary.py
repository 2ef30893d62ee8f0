"""Exact stationary distributions.

The solver is Grassmann-Taksar-Heyman state reduction on the transposed
(column-stochastic) matrix. It only adds and divides non-negative numbers,
so with Fraction entries the result is exact and never needs pivoting.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

import numpy as np
import pandas as pd

from ..errors import EngineError
from ..tableaux import Word
from .chain import ChainSector

log = logging.getLogger(__name__)


class Reducible(EngineError):
    pass


@dataclass(frozen=True)
class StationaryDist:
    sector: ChainSector
    probs: Dict[Word, Fraction]

    def __getitem__(self, word: Word) -> Fraction:
        return self.probs[word]

    def total(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0))

    def to_series(self) -> pd.Series:
        return pd.Series(
            [self.probs[w] for w in self.sector.states],
            index=self.sector.labels(),
            name="probability",
            dtype=object,
        )

    def to_json(self) -> Dict[str, str]:
        return {w.spaced(): str(self.probs[w]) for w in self.sector.states}


def gth_solve(P: np.ndarray) -> np.ndarray:
    """Stationary vector of a row-stochastic Fraction matrix."""
    n = P.shape[0]
    T = P.T.copy()
    for k in range(n - 1, 0, -1):
        s = sum(T[:k, k], Fraction(0))
        if s == 0:
            raise Reducible(f"State {k} cannot be reached from the states before it")
        T[k, :k] = T[k, :k] / s
        for i in range(k):
            if T[i, k]:
                for j in range(k):
                    T[i, j] += T[i, k] * T[k, j]
    pi = np.full(n, Fraction(0), dtype=object)
    pi[0] = Fraction(1)
    for k in range(1, n):
        pi[k] = T[k, 0] + sum((pi[j] * T[k, j] for j in range(1, k)), Fraction(0))
    return pi / sum(pi, Fraction(0))


def stationary_exact(sector: ChainSector) -> StationaryDist:
    pi = gth_solve(sector.matrix)
    log.info("[asep] solved N=%d r=%d exactly", sector.n, sector.r)
    return StationaryDist(sector, {w: pi[k] for k, w in enumerate(sector.states)})


def is_stationary(dist: StationaryDist) -> bool:
    """pi P == pi and sum(pi) == 1, exactly."""
    pi = np.array([dist.probs[w] for w in dist.sector.states], dtype=object)
    return dist.total() == 1 and all(x == y for x, y in zip(pi.dot(dist.sector.matrix), pi))
