"""Polynomial representation of the affine Hecke algebra of type C~_N.

Weyl generators on Laurent polynomials in z_1..z_N:

  s_0 : z_1 -> q / z_1
  s_i : z_i <-> z_{i+1}            (1 <= i <= N-1)
  s_N : z_N -> 1 / z_N

Noumi operators, with divided differences taken as exact Laurent division:

  T_0 = t_0 - (z_1 - a)(z_1 - c)/z_1 * (1 - s_0)/(z_1 - q/z_1),   t_0 = -ac/q
  T_i = t   - (t z_i - z_{i+1})     * (1 - s_i)/(z_i - z_{i+1})
  T_N = t_N + (b z_N - 1)(d z_N - 1)/z_N * (1 - s_N)/(z_N - 1/z_N), t_N = -bd

Polynomials may carry more variables than N; the extra ones are inert.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ..errors import EngineError
from ..exactalg import ArityMismatch, LaurentPoly, Scalar, laurent_divide_exact

log = logging.getLogger(__name__)

LATIN_PARAMS = ("a", "b", "c", "d", "q", "t")


class IndexOutOfRange(EngineError):
    pass


@dataclass(frozen=True)
class HeckeContext:
    n: int
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    q: Scalar
    t: Scalar

    @classmethod
    def symbolic(cls, n: int) -> "HeckeContext":
        return cls(n, *(Scalar.gen(p) for p in LATIN_PARAMS))

    @classmethod
    def at(cls, n: int, values: Mapping[str, Union[int, Fraction, Scalar]]) -> "HeckeContext":
        """Context with some (or all) of a,b,c,d,q,t fixed; the rest stay symbolic."""
        args = [Scalar(values[p]) if p in values else Scalar.gen(p) for p in LATIN_PARAMS]
        return cls(n, *args)

    @property
    def t0(self) -> Scalar:
        return -(self.a * self.c) / self.q

    @property
    def tN(self) -> Scalar:
        return -(self.b * self.d)

    def t_i(self, i: int) -> Scalar:
        self._index(i, 0, self.n)
        if i == 0:
            return self.t0
        if i == self.n:
            return self.tN
        return self.t

    def _index(self, i: int, lo: int, hi: int) -> None:
        if not lo <= i <= hi:
            raise IndexOutOfRange(f"Index {i} outside {lo}..{hi} (N={self.n})")

    def _arity(self, f: LaurentPoly) -> None:
        if f.nvars < self.n:
            raise ArityMismatch(f"Polynomial in {f.nvars} variables, operators need {self.n}")

    def z(self, i: int, nvars: int, power: int = 1) -> LaurentPoly:
        return LaurentPoly.var(nvars, i, power)


def weyl_act(ctx: HeckeContext, i: int, f: LaurentPoly) -> LaurentPoly:
    ctx._index(i, 0, ctx.n)
    ctx._arity(f)
    n = ctx.n
    if i == 0:
        qpow: Dict[int, Scalar] = {}

        def s0(e: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Optional[Scalar]]:
            if e[0] == 0:
                return e, None
            if e[0] not in qpow:
                qpow[e[0]] = ctx.q ** e[0]
            return (-e[0],) + e[1:], qpow[e[0]]

        return f.transform(s0)
    if i == n:
        return f.transform(lambda e: (e[: n - 1] + (-e[n - 1],) + e[n:], None))
    return f.transform(lambda e: (e[: i - 1] + (e[i], e[i - 1]) + e[i + 1:], None))


def noumi_T(ctx: HeckeContext, i: int, f: LaurentPoly) -> LaurentPoly:
    ctx._index(i, 0, ctx.n)
    ctx._arity(f)
    m = f.nvars
    diff = f - weyl_act(ctx, i, f)
    if i == 0:
        z1 = ctx.z(1, m)
        inv = ctx.z(1, m, -1)
        head = f.scale(ctx.t0)
        if diff.is_zero():
            return head
        quo = laurent_divide_exact(diff, z1 - inv.scale(ctx.q))
        return head - (z1 - ctx.a) * (z1 - ctx.c) * inv * quo
    if i == ctx.n:
        zn = ctx.z(i, m)
        inv = ctx.z(i, m, -1)
        head = f.scale(ctx.tN)
        if diff.is_zero():
            return head
        quo = laurent_divide_exact(diff, zn - inv)
        return head + (zn.scale(ctx.b) - 1) * (zn.scale(ctx.d) - 1) * inv * quo
    zi, zj = ctx.z(i, m), ctx.z(i + 1, m)
    head = f.scale(ctx.t)
    if diff.is_zero():
        return head
    quo = laurent_divide_exact(diff, zi - zj)
    return head - (zi.scale(ctx.t) - zj) * quo


def noumi_T_inverse(ctx: HeckeContext, i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i^{-1} = t^{-1}(T_i - t + 1), from (T_i - t)(T_i + 1) = 0."""
    ctx._index(i, 1, ctx.n - 1)
    return (noumi_T(ctx, i, f) - f.scale(ctx.t - 1)).scale(ctx.t.inverse())


_OPS = ("T", "Tinv", "s")


@dataclass(frozen=True)
class OperatorExpr:
    """A word in T_i, T_i^{-1}, s_i; acts right-to-left like a product of operators."""

    word: Tuple[Tuple[str, int], ...]

    def __post_init__(self) -> None:
        for op, i in self.word:
            if op not in _OPS:
                raise ValueError(f"Unknown operator {op}")
            if i < 0:
                raise IndexOutOfRange(f"Negative index {i}")

    @classmethod
    def parse(cls, text: str) -> "OperatorExpr":
        out: List[Tuple[str, int]] = []
        for tok in text.split():
            if tok.endswith("^-1") and tok.startswith("T"):
                out.append(("Tinv", int(tok[1:-3])))
            elif tok.startswith("T"):
                out.append(("T", int(tok[1:])))
            elif tok.startswith("s"):
                out.append(("s", int(tok[1:])))
            else:
                raise ValueError(f"Cannot read operator {tok!r}")
        return cls(tuple(out))

    def __str__(self) -> str:
        names = {"T": "T{}", "Tinv": "T{}^-1", "s": "s{}"}
        return " ".join(names[op].format(i) for op, i in self.word)

    def __mul__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(self.word + other.word)

    def apply(self, ctx: HeckeContext, f: LaurentPoly) -> LaurentPoly:
        for op, i in reversed(self.word):
            if op == "T":
                f = noumi_T(ctx, i, f)
            elif op == "Tinv":
                f = noumi_T_inverse(ctx, i, f)
            else:
                f = weyl_act(ctx, i, f)
        return f


def cherednik_word(n: int, i: int) -> OperatorExpr:
    """Y_i = (T_i ... T_{N-1})(T_N ... T_0)(T_1^{-1} ... T_{i-1}^{-1})."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"Y_{i} undefined for N={n}")
    word = [("T", j) for j in range(i, n)]
    word += [("T", j) for j in range(n, -1, -1)]
    word += [("Tinv", j) for j in range(1, i)]
    return OperatorExpr(tuple(word))


def cherednik_Y(ctx: HeckeContext, i: int, f: LaurentPoly) -> LaurentPoly:
    return cherednik_word(ctx.n, i).apply(ctx, f)
