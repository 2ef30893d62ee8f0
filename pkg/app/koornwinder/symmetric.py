"""Symmetric expansions of K_λ in y_i = z_i + 1/z_i - 2.

For λ = (1^{N-r}, 0^r):

    K_λ = sum_{k=0}^{N-r} Z~_{N-k,r} e_k(y_1, ..., y_N)

At q = 1 a general partition factors column by column into the single-column
polynomials K_{1^{λ'_i}}, and expanding the product of their e_k expansions
gives

    K_λ(z; 1, t) = sum over compositions μ, 0 <= μ_i <= λ'_i, of
                   prod_i e_{μ_i}(y) Z~_{N-μ_i, N-λ'_i}

Every Z~ is taken over the denominator of Z~_{N,r}, so each sum runs over
polynomial coefficients and is divided once at the end.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Sequence, Tuple

from ..errors import EngineError
from ..exactalg import Denominator, LaurentPoly, q_one
from ..reporting import VerificationReport
from ..tableaux import InvalidSector, Word, prefactor_denominator, ztilde_numerator
from .family import koornwinder_K

log = logging.getLogger(__name__)


class InvalidShape(EngineError):
    pass


class ExpansionMismatch(EngineError):
    pass


def y_vars(n: int) -> List[LaurentPoly]:
    return [LaurentPoly.var(n, i) + LaurentPoly.var(n, i, -1) - 2 for i in range(1, n + 1)]


def elementary(ys: Sequence[LaurentPoly], n: int) -> List[LaurentPoly]:
    """[e_0, ..., e_len(ys)] of the given polynomials."""
    es = [LaurentPoly.one(n)] + [LaurentPoly.zero(n)] * len(ys)
    for y in ys:
        for k in range(len(es) - 1, 0, -1):
            es[k] = es[k] + es[k - 1] * y
    return es


@lru_cache(maxsize=None)
def _e_table(n: int) -> Tuple[LaurentPoly, ...]:
    return tuple(elementary(y_vars(n), n))


def e_k(n: int, k: int) -> LaurentPoly:
    if not 0 <= k <= n:
        return LaurentPoly.zero(n)
    return _e_table(n)[k]


def _polynomial(n: int, numer) -> LaurentPoly:
    return LaurentPoly.over(n, {(0,) * n: numer}, Denominator.one())


def koornwinder_K_via_ek(n: int, r: int) -> LaurentPoly:
    if n < 1 or r < 0 or r > n:
        raise InvalidSector(f"No K for N={n}, r={r}")
    total = LaurentPoly.zero(n)
    for k in range(n - r + 1):
        total = total + e_k(n, k) * _polynomial(n, ztilde_numerator(n - k, r, n))
    coeff, den = prefactor_denominator(n, r)
    return total.divided_by(den, coeff)


def conjugate(shape: Sequence[int]) -> Tuple[int, ...]:
    parts = [int(p) for p in shape if int(p) > 0]
    if not parts or parts != sorted(parts, reverse=True):
        raise InvalidShape(f"{tuple(shape)} is not a nonempty partition")
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def parse_shape(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as e:
        raise InvalidShape(f"Cannot read shape {text!r}") from e


def _columns(shape: Sequence[int], n: int) -> Tuple[int, ...]:
    cols = conjugate(shape)
    if cols[0] > n:
        raise InvalidShape(f"Shape {tuple(shape)} has a column longer than N={n}")
    return cols


def column_word(c: int, n: int) -> Word:
    """The {1,0} partition (1^c, 0^(n-c))."""
    return Word((1,) * c + (0,) * (n - c))


def q1_expansion(shape: Sequence[int], n: int) -> LaurentPoly:
    """The double sum over compositions bounded by the column lengths."""
    cols = _columns(shape, n)
    total = LaurentPoly.zero(n)
    for mu in product(*(range(c + 1) for c in cols)):
        term = LaurentPoly.one(n)
        for m, c in zip(mu, cols):
            term = term * e_k(n, m) * _polynomial(n, ztilde_numerator(n - m, n - c, n))
        total = total + term
    coeff, den = 1, Denominator.one()
    for c in cols:
        cc, dc = prefactor_denominator(n, n - c)
        coeff, den = coeff * cc, den * dc
    return total.divided_by(den, coeff)


def product_form(shape: Sequence[int], n: int) -> LaurentPoly:
    """prod over columns of K_{1^{λ'_i}} at q = 1, each summed over its F orbit."""
    out = LaurentPoly.one(n)
    for c in _columns(shape, n):
        out = out * q_one()(koornwinder_K(column_word(c, n)))
    return out


def koornwinder_q1(shape: Sequence[int], n: int) -> LaurentPoly:
    expanded = q1_expansion(shape, n)
    if expanded != product_form(shape, n):
        raise ExpansionMismatch(f"q = 1 expansion of {tuple(shape)} differs from the column product for N={n}")
    return expanded


def verify_ek_expansion(n: int) -> VerificationReport:
    rep = VerificationReport("ek-expansion")
    for r in range(n + 1):
        lam = column_word(n - r, n)
        rep.check(f"N={n} r={r} e_k expansion = sum of F over orbit", koornwinder_K_via_ek(n, r) == koornwinder_K(lam))
    return rep


DEFAULT_SHAPES = ((2,), (1, 1), (2, 1), (2, 2))


def verify_q1(shapes: Iterable[Sequence[int]], n: int) -> VerificationReport:
    rep = VerificationReport("q1-expansion")
    for shape in shapes:
        cols = conjugate(shape)
        if cols[0] > n:
            log.info("[koorn] skipping shape %s for N=%d", tuple(shape), n)
            continue
        expanded = q1_expansion(shape, n)
        rep.check(f"N={n} shape {tuple(shape)} double sum = product of column K", expanded == product_form(shape, n))
        if len(cols) == 1:
            lam = column_word(cols[0], n)
            rep.check(f"N={n} shape {tuple(shape)} double sum = K_{lam} at q=1", expanded == q_one()(koornwinder_K(lam)))
    return rep
