"""Eigenvalues of the Cherednik operators on F_δ for antidominant δ.

For δ_1 <= ... <= δ_N <= 0 with negative blocks of sizes k_1, k_2, ...

    ρ(δ)_i = -N - i + 1 + 2(k_1 + ... + k_{j-1}) + k_j    (i in negative block j)
    ρ(δ)_i = N - i                                          (δ_i = 0)
    y_i    = q^{δ_i} t^{N - i + ρ(δ)_i} (t_0 t_N)^{[δ_i = 0]}

Y_i F_δ = y_i F_δ together with the unit coefficient of z^δ pins F_δ down as
the nonsymmetric Koornwinder polynomial E_δ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import groupby
from typing import List, Optional, Sequence, Tuple

from ..errors import EngineError
from ..exactalg import CHANGE_OF_VARIABLES, Scalar, coefficient_of
from ..hecke import HeckeContext, cherednik_Y
from ..reporting import VerificationReport
from ..tableaux import Word
from .family import asep_poly_F

log = logging.getLogger(__name__)


class NotAntidominant(EngineError):
    pass


@dataclass(frozen=True)
class EigenData:
    delta: Tuple[int, ...]
    blocks: Tuple[int, ...]
    rho: Tuple[int, ...]
    eigenvalues: Tuple[Scalar, ...]


def _check_antidominant(delta: Sequence[int]) -> None:
    if not delta:
        raise NotAntidominant("Empty composition")
    if any(x > 0 for x in delta) or list(delta) != sorted(delta):
        raise NotAntidominant(f"{tuple(delta)} is not increasing and non-positive")


def eigen_data(delta: Sequence[int], ctx: Optional[HeckeContext] = None) -> EigenData:
    delta = tuple(int(x) for x in delta)
    _check_antidominant(delta)
    n = len(delta)
    ctx = ctx or HeckeContext.symbolic(n)
    blocks = tuple(len(list(g)) for v, g in groupby(delta) if v < 0)

    rho = []
    done = 0
    for k in blocks:
        for _ in range(k):
            i = len(rho) + 1
            rho.append(-n - i + 1 + 2 * done + k)
        done += k
    for i in range(len(rho) + 1, n + 1):
        rho.append(n - i)

    ys = []
    for i, (d, r) in enumerate(zip(delta, rho), start=1):
        y = ctx.q ** d * ctx.t ** (n - i + r)
        if d == 0:
            y = y * ctx.t0 * ctx.tN
        ys.append(y)
    return EigenData(delta, blocks, tuple(rho), tuple(ys))


def verify_eigen(delta: Sequence[int]) -> VerificationReport:
    rep = VerificationReport("eigen")
    data = eigen_data(delta)
    mu = Word(data.delta)
    F = asep_poly_F(mu)
    rep.check(f"coefficient of z^{mu} in F_{mu} is 1", coefficient_of(F, mu) == Scalar(1))
    ctx = HeckeContext.symbolic(mu.n)
    latin = CHANGE_OF_VARIABLES(F)
    for i, y in enumerate(data.eigenvalues, start=1):
        got = cherednik_Y(ctx, i, latin)
        rep.check(f"Y{i} F_{mu} = ({y}) F_{mu}", got == latin.scale(y))
    return rep


def verify_worked_instance() -> VerificationReport:
    """Y_1 F_{○∗} = q^{-1} F_{○∗} for N = 2."""
    rep = VerificationReport("eigen")
    ctx = HeckeContext.symbolic(2)
    F = CHANGE_OF_VARIABLES(asep_poly_F(Word((-1, 0))))
    rep.check("Y1 F_os = q^-1 F_os", cherednik_Y(ctx, 1, F) == F.scale(ctx.q ** -1))
    return rep


def antidominant_words(n: int) -> List[Word]:
    return [Word((-1,) * (n - r) + (0,) * r) for r in range(n + 1)]


def verify_all_eigen(max_n: int) -> VerificationReport:
    rep = VerificationReport("eigen")
    rep.extend(verify_worked_instance())
    for n in range(1, max_n + 1):
        for delta in antidominant_words(n):
            rep.extend(verify_eigen(delta))
    return rep
