"""Randomized property checks of the exact-arithmetic kernel."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List

import numpy as np

from ..reporting import VerificationReport
from .laurent import LaurentPoly, laurent_divide_exact
from .scalar import ALPHABET, Scalar
from .substitution import CHANGE_OF_VARIABLES, Substitution


def random_poly_scalar(rng: np.random.Generator, *, max_terms: int = 3, max_deg: int = 2, max_coeff: int = 5, symbols=ALPHABET) -> Scalar:
    out = Scalar(0)
    for _ in range(int(rng.integers(1, max_terms + 1))):
        c = Fraction(int(rng.integers(-max_coeff, max_coeff + 1)), int(rng.integers(1, max_coeff + 1)))
        term = Scalar(c)
        for _ in range(int(rng.integers(0, max_deg + 1))):
            term = term * Scalar.gen(symbols[int(rng.integers(0, len(symbols)))])
        out = out + term
    return out


def random_scalar(rng: np.random.Generator, **kw: Any) -> Scalar:
    """Small random rational function (never a zero denominator)."""
    num = random_poly_scalar(rng, **kw)
    den = Scalar(0)
    while den.is_zero():
        den = random_poly_scalar(rng, **kw)
    return num / den


def verify_field_axioms(samples: int, seed: int) -> VerificationReport:
    rep = VerificationReport("exactalg")
    rng = np.random.default_rng(seed)
    assoc = distrib = inverse = idem = 0
    triples = max(1, -(-samples // 3))
    for _ in range(triples):
        x, y, z = (random_scalar(rng, symbols=("a", "t", "alpha", "gamma")) for _ in range(3))
        if (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z):
            assoc += 1
        if x * (y + z) == x * y + x * z:
            distrib += 1
        if x.is_zero() or x * x.inverse() == 1:
            inverse += 1
        if x.canonicalize() == x and x.canonicalize().canonicalize() == x.canonicalize():
            idem += 1
    rep.check("associativity", assoc == triples, f"{assoc}/{triples}")
    rep.check("distributivity", distrib == triples, f"{distrib}/{triples}")
    rep.check("multiplicative inverse", inverse == triples, f"{inverse}/{triples}")
    rep.check("canonical form idempotent", idem == triples, f"{idem}/{triples}")
    return rep


def verify_substitution_homomorphism(trials: int, seed: int) -> VerificationReport:
    rep = VerificationReport("exactalg")
    rng = np.random.default_rng(seed)
    sub = Substitution({"alpha": "a*t - 1", "gamma": "1/(c + 2)", "t": "q"})
    ok = 0
    for _ in range(trials):
        den = Scalar(0)
        while den.is_zero():
            den = random_poly_scalar(rng, symbols=("a", "c"))
        f = random_poly_scalar(rng, symbols=("a", "c", "t", "alpha", "gamma")) / den
        g = random_poly_scalar(rng, symbols=("a", "t", "alpha", "gamma"))
        if sub(f + g) == sub(f) + sub(g) and sub(f * g) == sub(f) * sub(g):
            ok += 1
    rep.check("substitution is a ring homomorphism", ok == trials, f"{ok}/{trials}")
    return rep


def verify_change_of_variables() -> VerificationReport:
    rep = VerificationReport("exactalg")
    g = {name: Scalar.gen(name) for name in ALPHABET}
    sub = CHANGE_OF_VARIABLES
    a, b, c, d, t = g["a"], g["b"], g["c"], g["d"], g["t"]
    alpha, beta, gamma, delta = (sub(g[n]) for n in ("alpha", "beta", "gamma", "delta"))
    rep.check("alpha image", alpha == -a * c * (1 - t) / ((a - 1) * (c - 1)))
    rep.check("ac = -alpha/gamma", a * c == -alpha / gamma)
    rep.check("a+c = -(1-t+alpha-gamma)/gamma", a + c == -(1 - t + alpha - gamma) / gamma)
    rep.check("bd = -beta/delta", b * d == -beta / delta)
    rep.check("b+d = -(1-t+beta-delta)/delta", b + d == -(1 - t + beta - delta) / delta)
    return rep


def verify_laurent_division(trials: int, seed: int) -> VerificationReport:
    rep = VerificationReport("exactalg")
    rng = np.random.default_rng(seed)
    ok = 0
    for _ in range(trials):
        polys: List[LaurentPoly] = []
        for _ in range(2):
            f = LaurentPoly.zero(2)
            while f.is_zero():
                for _ in range(int(rng.integers(1, 4))):
                    e = tuple(int(x) for x in rng.integers(-2, 3, size=2))
                    f = f + LaurentPoly.monomial(2, e, random_poly_scalar(rng, symbols=("q", "t")))
            polys.append(f)
        num, den = polys[0] * polys[1], polys[1]
        if laurent_divide_exact(num, den) * den == num:
            ok += 1
    rep.check("exact division inverts multiplication", ok == trials, f"{ok}/{trials}")
    return rep


def run_all(samples: int, seed: int) -> VerificationReport:
    rep = VerificationReport("exactalg")
    rep.extend(verify_field_axioms(samples, seed))
    rep.extend(verify_substitution_homomorphism(max(1, samples // 20), seed))
    rep.extend(verify_change_of_variables())
    rep.extend(verify_laurent_division(max(1, samples // 50), seed))
    return rep
