"""Exact stationary distribution against R(μ)/Z_{N,r} from the tableaux."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict

import numpy as np

from ..reporting import VerificationReport
from ..tableaux import gen_R, partition_Z
from .chain import build_generator, row_sums_exact
from .stationary import is_stationary, stationary_exact

log = logging.getLogger(__name__)


def random_rates(rng: np.random.Generator) -> Dict[str, Fraction]:
    """alpha..delta in (0,1], t in (0,1)."""
    out = {k: Fraction(int(rng.integers(1, 10)), 9) for k in ("alpha", "beta", "gamma", "delta")}
    out["t"] = Fraction(int(rng.integers(1, 10)), 10)
    return out


def cross_validate(n: int, r: int, trials: int, seed: int) -> VerificationReport:
    rep = VerificationReport("asep")
    rng = np.random.default_rng(seed)
    Z = partition_Z(n, r)
    for k in range(trials):
        params = random_rates(rng)
        sector = build_generator(n, r, params)
        dist = stationary_exact(sector)
        z = Z.evaluate(params)
        bad = [str(w) for w in sector.states if gen_R(w).evaluate(params) / z != dist[w]]
        label = ",".join(f"{key}={v}" for key, v in params.items())
        rep.check(f"N={n} r={r} rows sum to 1 ({label})", row_sums_exact(sector))
        rep.check(f"N={n} r={r} pi P = pi ({label})", is_stationary(dist))
        rep.check(f"N={n} r={r} pi = R/Z ({label})", not bad, f"differs at {', '.join(bad[:5])}")
    return rep


def verify_asep(max_n: int, trials: int, seed: int) -> VerificationReport:
    rep = VerificationReport("asep")
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            rep.extend(cross_validate(n, r, trials, seed))
    return rep
