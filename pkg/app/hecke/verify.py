"""Relation suites for the Noumi operators.

Relations are checked by identity testing: both sides are applied to seeded
pseudo-random Laurent polynomials and compared exactly. The placeholder
identities are checked fully symbolically, with G carried by an extra variable
z_{N+1} that no operator touches.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Optional

import numpy as np

from ..exactalg import LaurentPoly, Scalar
from ..reporting import VerificationReport
from .operators import HeckeContext, IndexOutOfRange, OperatorExpr, cherednik_Y, noumi_T, noumi_T_inverse

log = logging.getLogger(__name__)

Op = Callable[[LaurentPoly], LaurentPoly]


def random_laurent(rng: np.random.Generator, n: int, degree_bound: int, max_terms: int = 3) -> LaurentPoly:
    """A nonzero Laurent polynomial with exponents and integer coefficients bounded by degree_bound."""
    bound = max(1, degree_bound)
    f = LaurentPoly.zero(n)
    while f.is_zero():
        for _ in range(int(rng.integers(1, max_terms + 1))):
            e = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=n))
            c = int(rng.integers(1, bound + 1)) * (1 if rng.random() < 0.5 else -1)
            f = f + LaurentPoly.monomial(n, e, c)
    return f


def random_point(rng: np.random.Generator, names=("a", "b", "c", "d", "q", "t")) -> dict:
    """Random rationals for the Latin parameters, none equal to 0 or 1."""
    out = {}
    for name in names:
        v = Fraction(0)
        while v in (0, 1, -1):
            v = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 8)))
        out[name] = v
    return out


def _word(ctx: HeckeContext, *idx: int) -> Op:
    expr = OperatorExpr(tuple(("T", i) for i in idx))
    return lambda f: expr.apply(ctx, f)


def _relations(ctx: HeckeContext) -> List[tuple]:
    """(name, lhs, rhs) for every defining relation of the affine Hecke algebra."""
    n = ctx.n
    rels = []
    for i in range(n + 1):
        ti = ctx.t_i(i)

        def quad(f: LaurentPoly, i: int = i, ti: Scalar = ti) -> LaurentPoly:
            g = noumi_T(ctx, i, f) + f
            return noumi_T(ctx, i, g) - g.scale(ti)

        rels.append((f"quadratic T{i}", quad, lambda f: LaurentPoly.zero(f.nvars)))
    for i, j in combinations(range(n + 1), 2):
        if j - i > 1:
            rels.append((f"commute T{i} T{j}", _word(ctx, i, j), _word(ctx, j, i)))
    for i in range(1, n - 1):
        rels.append((f"braid T{i} T{i + 1}", _word(ctx, i, i + 1, i), _word(ctx, i + 1, i, i + 1)))
    rels.append(("end braid T0 T1", _word(ctx, 0, 1, 0, 1), _word(ctx, 1, 0, 1, 0)))
    rels.append((f"end braid T{n - 1} T{n}", _word(ctx, n - 1, n, n - 1, n), _word(ctx, n, n - 1, n, n - 1)))
    return rels


def verify_hecke_relations(n: int, trials: int, degree_bound: int, seed: int, ctx: Optional[HeckeContext] = None) -> VerificationReport:
    if n < 2:
        raise IndexOutOfRange(f"Hecke relations need N >= 2, got {n}")
    ctx = ctx or HeckeContext.symbolic(n)
    rep = VerificationReport("hecke")
    rng = np.random.default_rng(seed)
    samples = [random_laurent(rng, n, degree_bound) for _ in range(trials)]
    log.info("[hecke] N=%d: %d relations on %d random polynomials", n, len(_relations(ctx)), trials)
    for name, lhs, rhs in _relations(ctx):
        bad = [str(f) for f in samples if lhs(f) != rhs(f)]
        rep.check(f"N={n} {name}", not bad, f"fails on {bad[0]}" if bad else "")
    inv_bad = [str(f) for f in samples for i in range(1, n) if noumi_T(ctx, i, noumi_T_inverse(ctx, i, f)) != f]
    rep.check(f"N={n} T_i T_i^-1 = 1", not inv_bad, f"fails on {inv_bad[0]}" if inv_bad else "")
    return rep


def verify_y_commute(n: int, trials: int, seed: int, ctx: Optional[HeckeContext] = None) -> VerificationReport:
    """Y_i Y_j = Y_j Y_i on random polynomials."""
    rng = np.random.default_rng(seed)
    if ctx is None:
        ctx = HeckeContext.symbolic(n) if n <= 2 else HeckeContext.at(n, random_point(rng))
    rep = VerificationReport("hecke")
    samples = [random_laurent(rng, n, 1, max_terms=2) for _ in range(trials)]
    for i, j in combinations(range(1, n + 1), 2):
        bad = 0
        for f in samples:
            if cherednik_Y(ctx, i, cherednik_Y(ctx, j, f)) != cherednik_Y(ctx, j, cherednik_Y(ctx, i, f)):
                bad += 1
        rep.check(f"N={n} Y{i} Y{j} = Y{j} Y{i}", bad == 0, f"{bad}/{len(samples)} failed")
    return rep


def _placeholder(n: int, skip: tuple) -> LaurentPoly:
    """G = z_{N+1} * (1 + sum of 1/z_j for the untouched j)."""
    m = n + 1
    g = LaurentPoly.one(m)
    for j in range(1, n + 1):
        if j not in skip:
            g = g + LaurentPoly.var(m, j, -1)
    return g * LaurentPoly.var(m, m)


def verify_placeholders(n: int) -> VerificationReport:
    """Placeholder identities for T_i, T_0 and T_N, with (1-t)/gamma and (1-t)/delta
    written as (a-1)(c-1) and (b-1)(d-1)."""
    ctx = HeckeContext.symbolic(n)
    rep = VerificationReport("hecke")
    m = n + 1
    z = lambda i, p=1: LaurentPoly.var(m, i, p)  # noqa: E731
    a, b, c, d, q, t = ctx.a, ctx.b, ctx.c, ctx.d, ctx.q, ctx.t

    for i in range(1, n):
        G = _placeholder(n, (i, i + 1))
        zi, zj = z(i) - 1, z(i + 1) - 1
        ui, uj = z(i, -1) - 1, z(i + 1, -1) - 1
        rep.check(f"N={n} T{i}((z{i}-1)(1/z{i + 1}-1)G)", noumi_T(ctx, i, zi * uj * G) == zj * ui * G)
        rep.check(f"N={n} T{i}((z{i}-1)G)", noumi_T(ctx, i, zi * G) == (zj - (t - 1)) * G)
        rep.check(f"N={n} T{i}((1/z{i + 1}-1)G)", noumi_T(ctx, i, uj * G) == (ui - (t - 1)) * G)
        rep.check(f"N={n} T{i}(G) = tG", noumi_T(ctx, i, G) == G.scale(t))

    G0 = _placeholder(n, (1,))
    lhs = noumi_T(ctx, 0, (z(1, -1) - 1) * G0).scale(q)
    rep.check(f"N={n} qT0((1/z1-1)G)", lhs == (z(1) - 1 + (a - 1) * (c - 1)) * G0)
    rep.check(f"N={n} T0(G) = t0 G", noumi_T(ctx, 0, G0) == G0.scale(ctx.t0))

    GN = _placeholder(n, (n,))
    lhs = noumi_T(ctx, n, (z(n) - 1) * GN)
    rep.check(f"N={n} TN((zN-1)G)", lhs == (z(n, -1) - 1 + (b - 1) * (d - 1)) * GN)
    rep.check(f"N={n} TN(G) = tN G", noumi_T(ctx, n, GN) == GN.scale(ctx.tN))
    return rep
