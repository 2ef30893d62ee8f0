"""Two-species open-boundary ASEP as a lazy discrete-time Markov chain.

Sites 1..N hold ○ (hole), ∗ (second class) or • (first class); the number
of ∗ is conserved. Moves, each with probability rate/(N+1):

  •○ -> ○•,  •∗ -> ∗•,  ∗○ -> ○∗      rate t
  ○• -> •○,  ∗• -> •∗,  ○∗ -> ∗○      rate 1
  left site:   ○ -> • (alpha), • -> ○ (gamma)
  right site:  ○ -> • (delta), • -> ○ (beta)

The chain stays put with the leftover probability.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

import numpy as np

from ..errors import EngineError
from ..tableaux import Word, words_with

log = logging.getLogger(__name__)

PARAM_KEYS = ("alpha", "beta", "gamma", "delta", "t")
_ALIASES = {
    "a": "alpha", "alpha": "alpha", "α": "alpha",
    "b": "beta", "beta": "beta", "β": "beta",
    "g": "gamma", "c": "gamma", "gamma": "gamma", "γ": "gamma",
    "d": "delta", "delta": "delta", "δ": "delta",
    "t": "t",
}


class ParamError(EngineError):
    pass


class NonpositiveParam(ParamError):
    pass


def parse_params(text: str) -> Dict[str, Fraction]:
    """'a=1/2,b=1/3,g=1/4,d=1/5,t=1/2' -> rates keyed alpha..delta, t."""
    out: Dict[str, Fraction] = {}
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ParamError(f"Expected key=value, got {item!r}")
        key, value = (s.strip() for s in item.split("=", 1))
        name = _ALIASES.get(key.lower())
        if name is None:
            raise ParamError(f"Unknown parameter {key!r}")
        try:
            out[name] = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ParamError(f"Not a rational: {value!r}") from e
    return check_params(out)


def check_params(params: Mapping[str, object]) -> Dict[str, Fraction]:
    missing = [k for k in PARAM_KEYS if k not in params]
    if missing:
        raise ParamError(f"Missing parameters: {', '.join(missing)}")
    vals = {k: Fraction(params[k]) for k in PARAM_KEYS}
    for k in ("alpha", "beta", "gamma", "delta"):
        if vals[k] <= 0:
            raise NonpositiveParam(f"{k} must be positive, got {vals[k]}")
    if vals["t"] < 0:
        raise NonpositiveParam(f"t must be non-negative, got {vals['t']}")
    if vals["t"] >= 1:
        log.warning("[asep] t=%s outside [0,1); rates are still used as given", vals["t"])
    return vals


@dataclass(frozen=True)
class ChainSector:
    n: int
    r: int
    states: Tuple[Word, ...]
    params: Dict[str, Fraction]
    # row-stochastic, Fraction entries
    matrix: np.ndarray
    denominator: Fraction

    @property
    def size(self) -> int:
        return len(self.states)

    def index(self, word: Word) -> int:
        return self.states.index(word)

    def labels(self) -> List[str]:
        return [w.spaced() for w in self.states]


def outgoing_rates(word: Word, params: Mapping[str, Fraction]) -> Dict[Word, Fraction]:
    """Unnormalised rates to every neighbouring state."""
    e = list(word)
    n = len(e)
    out: Dict[Word, Fraction] = {}

    def add(target: List[int], rate: Fraction) -> None:
        if rate:
            w = Word(tuple(target))
            out[w] = out.get(w, Fraction(0)) + rate

    for i in range(n - 1):
        x, y = e[i], e[i + 1]
        if x == y:
            continue
        swapped = e[:i] + [y, x] + e[i + 2:]
        add(swapped, params["t"] if x > y else Fraction(1))
    if n:
        if e[0] == -1:
            add([1] + e[1:], params["alpha"])
        elif e[0] == 1:
            add([-1] + e[1:], params["gamma"])
        if e[-1] == 1:
            add(e[:-1] + [-1], params["beta"])
        elif e[-1] == -1:
            add(e[:-1] + [1], params["delta"])
    return out


def build_generator(n: int, r: int, params: Mapping[str, object]) -> ChainSector:
    states = tuple(words_with(n, r))
    vals = check_params(params)
    rates = [outgoing_rates(w, vals) for w in states]
    denom = Fraction(n + 1)
    worst = max((sum(row.values(), Fraction(0)) for row in rates), default=Fraction(0))
    if worst > denom:
        log.warning("[asep] outgoing rate %s exceeds N+1=%d; using %s as the step denominator", worst, n + 1, worst)
        denom = worst
    index = {w: k for k, w in enumerate(states)}
    P = np.full((len(states), len(states)), Fraction(0), dtype=object)
    for i, row in enumerate(rates):
        for w, rate in row.items():
            P[i, index[w]] = rate / denom
        P[i, i] = 1 - sum(row.values(), Fraction(0)) / denom
    log.info("[asep] sector N=%d r=%d: %d states", n, r, len(states))
    return ChainSector(n, r, states, vals, P, denom)


def row_sums_exact(sector: ChainSector) -> bool:
    return all(sum(sector.matrix[i], Fraction(0)) == 1 for i in range(sector.size))
