"""Signed-permutation orbits and the two orders on compositions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, product
from typing import List, Sequence, Tuple

from ..errors import EngineError
from ..tableaux import Word, parse_word


class NotAPartition(EngineError):
    pass


class LengthMismatch(EngineError):
    pass


@dataclass(frozen=True)
class Orbit:
    lam: Word
    members: Tuple[Word, ...]
    # antidominant member: entries increasing, all <= 0
    delta: Word

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def r(self) -> int:
        return self.lam.r

    def __len__(self) -> int:
        return len(self.members)


def parse_partition(text: str) -> Word:
    """'110', '1,1,0' or '++0' -> Word; must be a {1,0} partition."""
    lam = parse_word(text)
    check_partition(lam)
    return lam


def check_partition(lam: Word) -> None:
    if lam.n == 0:
        raise NotAPartition("Empty partition")
    if any(x not in (0, 1) for x in lam):
        raise NotAPartition(f"{lam} has entries outside {{1,0}}")
    if list(lam) != sorted(lam, reverse=True):
        raise NotAPartition(f"{lam} is not weakly decreasing")


def orbit_of(lam: Word) -> Orbit:
    check_partition(lam)
    members = tuple(Word(w) for w in product((1, 0, -1), repeat=lam.n) if w.count(0) == lam.r)
    delta = Word((-1,) * (lam.n - lam.r) + (0,) * lam.r)
    return Orbit(lam, members, delta)


def dominant(mu: Sequence[int]) -> Tuple[int, ...]:
    """mu^+: absolute values sorted decreasingly."""
    return tuple(sorted((abs(x) for x in mu), reverse=True))


def dominates(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """mu >= nu in dominance order: every prefix sum of mu - nu is non-negative."""
    if len(mu) != len(nu):
        raise LengthMismatch(f"Compositions of lengths {len(mu)} and {len(nu)}")
    return all(s >= 0 for s in accumulate(x - y for x, y in zip(mu, nu)))


def order_preceq(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """nu ⪯ mu: nu^+ strictly below mu^+, or same orbit and nu <= mu."""
    if len(mu) != len(nu):
        raise LengthMismatch(f"Compositions of lengths {len(nu)} and {len(mu)}")
    np_, mp = dominant(nu), dominant(mu)
    if np_ == mp:
        return dominates(mu, nu)
    return dominates(mp, np_)


def below(mu: Sequence[int], bound: int) -> List[Tuple[int, ...]]:
    """All nu with entries in [-bound, bound] and nu ⪯ mu."""
    return [nu for nu in product(range(-bound, bound + 1), repeat=len(mu)) if order_preceq(nu, mu)]
