"""Generating polynomials R, R~, Z, Z~ and their identity suites.

R(μ) is the weight sum over all tableaux of type μ; R(empty word) = 1.
R~ and Z~ carry the normalising prefactor

    (t-1)^(N-r) / prod_{i=2r}^{N+r-1} (alpha*beta*t^i - gamma*delta)

R is memoised per word; F_μ construction asks for every subword. The
normalised values also come as polynomial numerators over a factored
Denominator, which is what the Laurent and identity code consumes.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import QQ

from ..config import settings
from ..exactalg import Scalar, Substitution
from ..exactalg.denominator import Denominator
from ..exactalg.scalar import ALPHABET, PARAM_FIELD, PARAM_RING
from ..reporting import VerificationReport
from .diagram import build_diagram
from .tableau import weight_counter
from .word import InvalidSector, Word, words_with

log = logging.getLogger(__name__)

# (alpha, beta, gamma, delta, t) exponent slots -> positions in the parameter alphabet
_PARAM_SLOT = (6, 7, 8, 9, 5)
_GREEK_KEYS = ("alpha", "beta", "gamma", "delta", "t")


@dataclass(frozen=True)
class WeightedCount:
    """A polynomial in alpha, beta, gamma, delta, t with non-negative integer coefficients."""

    monomials: Tuple[Tuple[Tuple[int, ...], int], ...]

    @classmethod
    def from_counter(cls, counter: Mapping[Tuple[int, ...], int]) -> "WeightedCount":
        return cls(tuple(sorted((tuple(k), int(v)) for k, v in counter.items() if v)))

    @classmethod
    def one(cls) -> "WeightedCount":
        return cls((((0, 0, 0, 0, 0), 1),))

    def counter(self) -> Counter:
        return Counter(dict(self.monomials))

    def __add__(self, other: "WeightedCount") -> "WeightedCount":
        return WeightedCount.from_counter(self.counter() + other.counter())

    @property
    def tableaux(self) -> int:
        """Number of tableaux summed (value at all parameters equal to 1)."""
        return sum(c for _, c in self.monomials)

    @property
    def poly(self) -> Any:
        terms = {}
        for exps, count in self.monomials:
            full = [0] * len(ALPHABET)
            for slot, e in zip(_PARAM_SLOT, exps):
                full[slot] = e
            terms[tuple(full)] = QQ(count)
        return PARAM_RING.from_dict(terms)

    @property
    def value(self) -> Scalar:
        return Scalar(PARAM_FIELD.new(self.poly))

    def evaluate(self, params: Mapping[str, Fraction]) -> Fraction:
        vals = [Fraction(params[k]) for k in _GREEK_KEYS]
        total = Fraction(0)
        for exps, count in self.monomials:
            term = Fraction(count)
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=settings.RST_CACHE_SIZE)
def _r_counter(entries: Tuple[int, ...]) -> WeightedCount:
    if not entries:
        return WeightedCount.one()
    wc = WeightedCount.from_counter(weight_counter(build_diagram(Word(entries))))
    log.debug("[rst] R(%s): %d tableaux", Word(entries), wc.tableaux)
    return wc


def gen_R(word: Word) -> WeightedCount:
    return _r_counter(tuple(word))


def _gen(name: str) -> Any:
    return PARAM_RING.gens[ALPHABET.index(name)]


@lru_cache(maxsize=None)
def _lam_poly(i: int) -> Any:
    """alpha*beta*t^i - gamma*delta."""
    return _gen("alpha") * _gen("beta") * _gen("t") ** i - _gen("gamma") * _gen("delta")


def _span(n: int, r: int) -> range:
    return range(2 * r, n + r)


def prefactor(n: int, r: int) -> Scalar:
    den = PARAM_RING.one
    for i in _span(n, r):
        den = den * _lam_poly(i)
    return Scalar.from_polys((_gen("t") - 1) ** (n - r), den)


@lru_cache(maxsize=None)
def prefactor_denominator(n: int, r: int) -> Tuple[Any, Denominator]:
    """(c, D) with c * D = prod_{i=2r}^{n+r-1} (alpha*beta*t^i - gamma*delta)."""
    coeff = PARAM_RING.domain.one
    den = Denominator.one()
    for i in _span(n, r):
        c, atoms = Denominator.of(_lam_poly(i))
        coeff = coeff * c
        den = den * atoms
    return coeff, den


def _over_span(numer: Any, n: int, r: int, top: int) -> Any:
    """numer / D(n, r) rewritten over D(top, r)."""
    if top < n:
        raise InvalidSector(f"Cannot lift N={n} onto N={top}")
    for i in range(n + r, top + r):
        numer = numer * _lam_poly(i)
    return numer


def rtilde_numerator(word: Word, top: int) -> Any:
    """R~(word) * prod_{i=2r}^{top+r-1} (alpha*beta*t^i - gamma*delta), a polynomial."""
    return _over_span((_gen("t") - 1) ** (word.n - word.r) * gen_R(word).poly, word.n, word.r, top)


@lru_cache(maxsize=settings.RST_CACHE_SIZE)
def _rtilde(entries: Tuple[int, ...]) -> Scalar:
    w = Word(entries)
    return prefactor(w.n, w.r) * gen_R(w).value


def gen_Rtilde(word: Word) -> Scalar:
    return _rtilde(tuple(word))


def _check_sector(n: int, r: int) -> None:
    if n < 0 or r < 0 or r > n:
        raise InvalidSector(f"Sector N={n}, r={r} is empty")


@lru_cache(maxsize=None)
def partition_Z(n: int, r: int) -> WeightedCount:
    _check_sector(n, r)
    total = Counter()
    for w in words_with(n, r):
        total.update(gen_R(w).counter())
    return WeightedCount.from_counter(total)


def partition_Ztilde(n: int, r: int) -> Scalar:
    return prefactor(n, r) * partition_Z(n, r).value


def ztilde_numerator(n: int, r: int, top: int) -> Any:
    """Z~_{n,r} over the denominator of Z~_{top,r}, as a polynomial."""
    return _over_span((_gen("t") - 1) ** (n - r) * partition_Z(n, r).poly, n, r, top)


def all_words(max_len: int) -> List[Word]:
    out = []
    for n in range(max_len + 1):
        out.extend(Word(w) for w in product((1, 0, -1), repeat=n))
    return out


def _cleared(terms: Sequence[Tuple[Any, Word]]) -> Any:
    """sum of c * R~(w), times every prefactor factor the words use, as a polynomial."""
    spans = [set(_span(w.n, w.r)) for _, w in terms]
    union = set().union(*spans)
    total = PARAM_RING.zero
    for (c, w), span in zip(terms, spans):
        p = c * (_gen("t") - 1) ** (w.n - w.r) * gen_R(w).poly
        for i in sorted(union - span):
            p = p * _lam_poly(i)
        total = total + p
    return total


def verify_matrix_ansatz(max_total: int = 3) -> VerificationReport:
    """Exchange relations for R and for R~ on all x, y with |x|+|y| <= max_total.

    The R~ relations are compared after clearing the prefactor denominators.
    """
    rep = VerificationReport("matrix-ansatz")
    t, alpha, beta, gamma, delta = (_gen(s) for s in ("t", "alpha", "beta", "gamma", "delta"))
    one = PARAM_RING.one
    B, S, O = Word((1,)), Word((0,)), Word((-1,))

    def R(w: Word) -> Any:
        return gen_R(w).poly

    def lam(k: int) -> Any:
        return _lam_poly(k - 1)

    plain = tilde = 0
    bad_plain: List[str] = []
    bad_tilde: List[str] = []
    words = all_words(max_total)
    for x in words:
        for y in words:
            if x.n + y.n > max_total:
                continue
            m = x.norm + y.norm
            cases = [
                ("bo", t * R(x + B + O + y), R(x + O + B + y) + lam(m + 2) * (R(x + B + y) + R(x + O + y)),
                 [(t, x + B + O + y), (-one, x + O + B + y), (1 - t, x + B + y), (1 - t, x + O + y)]),
                ("so", t * R(x + S + O + y), R(x + O + S + y) + lam(m + 3) * R(x + S + y),
                 [(t, x + S + O + y), (-one, x + O + S + y), (1 - t, x + S + y)]),
                ("bs", t * R(x + B + S + y), R(x + S + B + y) + lam(m + 3) * R(x + S + y),
                 [(t, x + B + S + y), (-one, x + S + B + y), (1 - t, x + S + y)]),
            ]
            for name, lhs, rhs, combo in cases:
                if lhs == rhs:
                    plain += 1
                else:
                    bad_plain.append(f"{name} x={x} y={y}")
                if not _cleared(combo):
                    tilde += 1
                else:
                    bad_tilde.append(f"{name} x={x} y={y}")
        if x.n <= max_total:
            m = x.norm
            ends = [
                ("right", beta * R(x + B), delta * R(x + O) + lam(m + 1) * R(x),
                 [(beta, x + B), (-delta, x + O), (1 - t, x)]),
                ("left", alpha * R(O + x), gamma * R(B + x) + lam(m + 1) * R(x),
                 [(alpha, O + x), (-gamma, B + x), (1 - t, x)]),
            ]
            for name, lhs, rhs, combo in ends:
                if lhs == rhs:
                    plain += 1
                else:
                    bad_plain.append(f"{name} x={x}")
                if not _cleared(combo):
                    tilde += 1
                else:
                    bad_tilde.append(f"{name} x={x}")
    rep.check(f"R exchange relations ({plain} passed)", not bad_plain, "; ".join(bad_plain[:10]))
    rep.check(f"R~ exchange relations ({tilde} passed)", not bad_tilde, "; ".join(bad_tilde[:10]))
    return rep


_REFLECT = Substitution({"alpha": "beta", "beta": "alpha", "gamma": "delta", "delta": "gamma"}, name="reflect")


def check_reflection_symmetry(max_n: int) -> VerificationReport:
    """R(μ) against R of the mirrored word with left/right rates exchanged.

    Informational: the CLI prints this report but never fails on it.
    """
    rep = VerificationReport("reflection")
    for w in all_words(max_n):
        if w.n == 0:
            continue
        lhs = gen_R(w).value
        rhs = _REFLECT(gen_R(w.reflected()).value)
        rep.check(f"R({w}) ~ R({w.reflected()})", lhs == rhs)
    return rep


def verify_validator(max_n: int) -> VerificationReport:
    """Every enumerated tableau passes the geometric validator, and both weight paths agree."""
    from .tableau import enumerate_tableaux, validate_tableau, weight_exponents

    rep = VerificationReport("tableaux")
    for n in range(1, max_n + 1):
        for w in words_with_any(n):
            tabs = enumerate_tableaux(w)
            problems = [p for tab in tabs for p in validate_tableau(tab)]
            scanned = Counter(weight_exponents(tab) for tab in tabs)
            same = WeightedCount.from_counter(scanned) == gen_R(w)
            rep.check(f"tableaux of {w}", not problems and same, "; ".join(problems[:3]) or ("" if same else "weight mismatch"))
    return rep


def words_with_any(n: int) -> List[Word]:
    return [Word(w) for w in product((1, 0, -1), repeat=n)]
