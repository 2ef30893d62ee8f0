"""ASEP polynomials F_μ, the qKZ family they form, and symmetric K_λ.

F_μ is built over the Greek rates:

    F_μ = sum over S ⊆ {i : μ_i ≠ 0} of  R~(μ without S) * prod_{i in S} (z_i^{μ_i} - 1)

Checks against the Noumi operators move F_μ into the Latin parameters with
the change of variables first, optionally followed by a random rational
point for the larger N.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, Mapping, Optional, Tuple

import numpy as np

from ..config import settings
from ..exactalg import (
    CHANGE_OF_VARIABLES,
    Denominator,
    LaurentPoly,
    Scalar,
    Substitution,
    SubstitutionSingular,
    coefficient_of,
    numeric_point,
)
from ..hecke import HeckeContext, noumi_T, weyl_act
from ..hecke.verify import random_point
from ..reporting import VerificationReport
from ..tableaux import InvalidWord, Word, gen_Rtilde, prefactor_denominator, rtilde_numerator
from .orbit import Orbit, orbit_of, order_preceq

log = logging.getLogger(__name__)

GREEK_FIELD = "greek"
LATIN_FIELD = "latin"


def asep_poly_F(mu: Word) -> LaurentPoly:
    n = mu.n
    if n == 0:
        raise InvalidWord("F needs at least one site")
    movable = [i for i in range(1, n + 1) if mu[i - 1] != 0]
    factor = {i: LaurentPoly.var(n, i, mu[i - 1]) - 1 for i in movable}
    # every R~(mu without S) is written over the prefactor denominator of mu
    coeff, den = prefactor_denominator(n, mu.r)
    total = LaurentPoly.zero(n)
    for k in range(len(movable) + 1):
        for S in combinations(movable, k):
            term = LaurentPoly.over(n, {(0,) * n: rtilde_numerator(mu.without(S), n)}, Denominator.one())
            for i in S:
                term = term * factor[i]
            total = total + term
    return total.divided_by(den, coeff)


@dataclass
class QkzFamily:
    orbit: Orbit
    polys: Dict[Word, LaurentPoly] = field(default_factory=dict)
    params: str = GREEK_FIELD

    def __getitem__(self, mu: Word) -> LaurentPoly:
        return self.polys[mu]

    def __iter__(self) -> Iterator[Word]:
        return iter(self.orbit.members)

    def mapped(self, sub: Substitution) -> "QkzFamily":
        """Every F_μ pushed through a parameter substitution (Greek -> Latin)."""
        return QkzFamily(self.orbit, {mu: sub(f) for mu, f in self.polys.items()}, LATIN_FIELD)


def build_family(lam: Word) -> QkzFamily:
    orbit = orbit_of(lam)
    fam = QkzFamily(orbit, {mu: asep_poly_F(mu) for mu in orbit.members})
    log.info("[koorn] built %d polynomials for lambda=%s", len(orbit), lam)
    return fam


def koornwinder_K(lam: Word) -> LaurentPoly:
    fam = build_family(lam)
    total = LaurentPoly.zero(lam.n)
    for mu in fam:
        total = total + fam[mu]
    return total


def latin_substitution(point: Optional[Mapping[str, object]] = None) -> Substitution:
    if not point:
        return CHANGE_OF_VARIABLES
    return CHANGE_OF_VARIABLES.then(numeric_point(point))


def context_for(n: int, point: Optional[Mapping[str, object]] = None) -> HeckeContext:
    return HeckeContext.at(n, point) if point else HeckeContext.symbolic(n)


def draw_point(rng: np.random.Generator, family: QkzFamily, attempts: int = 20) -> Tuple[dict, QkzFamily]:
    """Random Latin point at which every F_μ of the family is defined."""
    for _ in range(attempts):
        point = random_point(rng)
        try:
            return point, family.mapped(latin_substitution(point))
        except SubstitutionSingular:
            log.debug("[koorn] singular point %s, redrawing", point)
    raise SubstitutionSingular(f"No regular point found in {attempts} draws")


def _flip(mu: Word, pos: int) -> Word:
    e = list(mu)
    e[pos - 1] = -e[pos - 1]
    return Word(tuple(e))


def _swap(mu: Word, i: int) -> Word:
    e = list(mu)
    e[i - 1], e[i] = e[i], e[i - 1]
    return Word(tuple(e))


def qkz_relations(ctx: HeckeContext, fam: QkzFamily) -> Iterator[Tuple[str, LaurentPoly, LaurentPoly]]:
    """(name, T_i F_μ, expected) for every case that applies to some member."""
    n = ctx.n
    for mu in fam:
        f = fam[mu]
        if mu[0] < 0:
            yield f"T0 F_{mu} = q^{mu[0]} F_{_flip(mu, 1)}", noumi_T(ctx, 0, f), fam[_flip(mu, 1)].scale(ctx.q ** mu[0])
        elif mu[0] == 0:
            yield f"T0 F_{mu} = t0 F_{mu}", noumi_T(ctx, 0, f), f.scale(ctx.t0)
        for i in range(1, n):
            if mu[i - 1] == mu[i]:
                yield f"T{i} F_{mu} = t F_{mu}", noumi_T(ctx, i, f), f.scale(ctx.t)
            elif mu[i - 1] > mu[i]:
                yield f"T{i} F_{mu} = F_{_swap(mu, i)}", noumi_T(ctx, i, f), fam[_swap(mu, i)]
        if mu[n - 1] == 0:
            yield f"T{n} F_{mu} = tN F_{mu}", noumi_T(ctx, n, f), f.scale(ctx.tN)
        elif mu[n - 1] > 0:
            yield f"T{n} F_{mu} = F_{_flip(mu, n)}", noumi_T(ctx, n, f), fam[_flip(mu, n)]


def verify_qkz(lam: Word, points: int = 0, seed: int = 0) -> VerificationReport:
    """All qKZ exchange relations on the orbit of lam.

    points == 0 checks with symbolic parameters; otherwise at that many
    random rational points.
    """
    rep = VerificationReport("qkz")
    fam = build_family(lam)
    n = lam.n
    if points <= 0:
        latin = fam.mapped(CHANGE_OF_VARIABLES)
        for name, got, want in qkz_relations(HeckeContext.symbolic(n), latin):
            rep.check(f"lambda={lam} {name}", got == want)
        return rep
    rng = np.random.default_rng(seed)
    for k in range(points):
        point, latin = draw_point(rng, fam)
        ctx = context_for(n, point)
        bad = [name for name, got, want in qkz_relations(ctx, latin) if got != want]
        rep.check(f"lambda={lam} all relations at point {k + 1}", not bad, "; ".join(bad[:5]))
    return rep


def partitions_of_length(n: int) -> Iterator[Word]:
    for r in range(n + 1):
        yield Word((1,) * (n - r) + (0,) * r)


def symmetric_check(K: LaurentPoly, n: int, q_is_one: bool = False) -> bool:
    """K invariant under s_1..s_N, and under s_0 too when q = 1."""
    ctx = HeckeContext.at(n, {"q": 1}) if q_is_one else HeckeContext.symbolic(n)
    gens = range(0 if q_is_one else 1, n + 1)
    return all(weyl_act(ctx, i, K) == K for i in gens)


def verify_structure(n: int) -> VerificationReport:
    """Leading coefficient, triangular support, z = 1 specialization and symmetry of K."""
    rep = VerificationReport("koorn-structure")
    for lam in partitions_of_length(n):
        fam = build_family(lam)
        K = LaurentPoly.zero(n)
        for mu in fam:
            f = fam[mu]
            K = K + f
            rep.check(f"coefficient of z^{mu} in F_{mu} is 1", coefficient_of(f, mu) == Scalar(1))
            stray = [e for e in f.support() if not order_preceq(e, mu)]
            rep.check(f"support of F_{mu} below {mu}", not stray, f"{stray[:3]}")
            rep.check(f"F_{mu}(1,...,1) = R~({mu})", f.evaluate_at_one() == gen_Rtilde(mu))
        rep.check(f"K_{lam} symmetric", symmetric_check(K, n))
        rep.check(f"K_{lam} symmetric at q=1 including s0", symmetric_check(K, n, q_is_one=True))
    return rep


def verify_koornwinder(max_n: int, seed: int) -> VerificationReport:
    """qKZ relations for every orbit up to max_n: symbolic up to KOORN_SYMBOLIC_MAX_N, numeric above."""
    rep = VerificationReport("qkz")
    for n in range(1, max_n + 1):
        points = 0 if n <= settings.KOORN_SYMBOLIC_MAX_N else settings.KOORN_NUMERIC_POINTS
        for lam in partitions_of_length(n):
            rep.extend(verify_qkz(lam, points=points, seed=seed))
    return rep
