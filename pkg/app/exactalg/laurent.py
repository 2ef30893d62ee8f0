"""Laurent polynomials in z_1..z_N over the parameter field.

A LaurentPoly keeps one polynomial numerator in the parameters per
z-monomial, all over a single factored Denominator. Sums bring both sides to
the least common Denominator, products and exact quotients run in sympy's
sparse ring in the z's over the parameter polynomial ring, and equality
compares numerators after scaling to a common Denominator. A parameter gcd
is only taken when a coefficient is read out as a Scalar.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import symbols
from sympy.polys.domains import FractionField, PolynomialRing
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from ..errors import EngineError
from .denominator import Denominator
from .scalar import PARAM_FIELD, PARAM_RING, DivisionByZero, Scalar, ScalarParseError, as_scalar, format_scalar, is_multiterm

Exps = Tuple[int, ...]

_ONE = Denominator.one()


class ArityMismatch(EngineError):
    pass


class NotDivisible(EngineError):
    pass


@lru_cache(maxsize=None)
def _z_ring(nvars: int) -> PolyRing:
    return PolyRing(symbols(f"z1:{nvars + 1}"), PolynomialRing(PARAM_RING), lex)


@lru_cache(maxsize=None)
def _field_ring(nvars: int) -> PolyRing:
    return PolyRing(symbols(f"z1:{nvars + 1}"), FractionField(PARAM_FIELD), lex)


def _raw(value: Any) -> Any:
    if isinstance(value, Scalar):
        return value.raw
    if isinstance(value, PARAM_FIELD.dtype):
        return value
    return as_scalar(value).raw


def _split_scalar(value: Any) -> Tuple[Any, Denominator]:
    """(numerator polynomial, Denominator) with value = numerator / Denominator."""
    f = _raw(value)
    if not f:
        return PARAM_RING.zero, _ONE
    if f.denom == PARAM_RING.one:
        return f.numer, _ONE
    coeff, den = Denominator.of(f.denom)
    numer = f.numer if coeff == 1 else f.numer.quo_ground(coeff)
    return numer, den


def _times(p: Any, k: Optional[Any]) -> Any:
    if k is None or k == PARAM_RING.one:
        return p
    return p * k


class LaurentPoly:
    __slots__ = ("nvars", "_num", "_den")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Any] = None):
        nvars = int(nvars)
        if nvars < 1:
            raise ArityMismatch(f"nvars must be positive, got {nvars}")
        parts: Dict[Exps, List[Tuple[Any, Denominator]]] = {}
        common = _ONE
        for exps, coeff in (terms or {}).items():
            e = tuple(int(x) for x in exps)
            if len(e) != nvars:
                raise ArityMismatch(f"Exponent {e} has length {len(e)}, expected {nvars}")
            numer, den = _split_scalar(coeff)
            if numer:
                parts.setdefault(e, []).append((numer, den))
                common = common.lcm(den)
        num: Dict[Exps, Any] = {}
        for e, pieces in parts.items():
            total = PARAM_RING.zero
            for numer, den in pieces:
                total = total + _times(numer, den.cofactor(common))
            if total:
                num[e] = total
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", common if num else _ONE)

    def __setattr__(self, key: str, value: Any) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # --- constructors ---

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Any) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: Any = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """z_i^power, 1-based index."""
        if not 1 <= i <= nvars:
            raise ArityMismatch(f"Variable z{i} outside 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def over(cls, nvars: int, numerators: Mapping[Exps, Any], den: Denominator) -> "LaurentPoly":
        """Polynomial numerators (parameter ring elements) over a shared Denominator."""
        out = cls.__new__(cls)
        num = {e: p for e, p in numerators.items() if p}
        object.__setattr__(out, "nvars", nvars)
        object.__setattr__(out, "_num", num)
        object.__setattr__(out, "_den", den if num else _ONE)
        return out

    # --- access ---

    @property
    def denominator(self) -> Denominator:
        return self._den

    def numerators(self) -> Iterator[Tuple[Exps, Any]]:
        return iter(self._num.items())

    def _scalar(self, numer: Any) -> Scalar:
        return Scalar.from_polys(numer, self._den.expand())

    def items(self) -> Iterator[Tuple[Exps, Scalar]]:
        for e, p in self._num.items():
            yield e, self._scalar(p)

    def support(self) -> List[Exps]:
        return sorted(self._num, reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        e = tuple(int(x) for x in exps)
        if len(e) != self.nvars:
            raise ArityMismatch(f"Exponent {e} has length {len(e)}, expected {self.nvars}")
        p = self._num.get(e)
        return self._scalar(p) if p is not None else Scalar(0)

    def is_zero(self) -> bool:
        return not self._num

    def __len__(self) -> int:
        return len(self._num)

    def __bool__(self) -> bool:
        return bool(self._num)

    def widen(self, nvars: int) -> "LaurentPoly":
        """Same polynomial viewed in more variables."""
        if nvars < self.nvars:
            raise ArityMismatch(f"Cannot narrow {self.nvars} variables to {nvars}")
        pad = (0,) * (nvars - self.nvars)
        return LaurentPoly.over(nvars, {e + pad: p for e, p in self._num.items()}, self._den)

    def transform(self, fn: Callable[[Exps], Tuple[Exps, Any]]) -> "LaurentPoly":
        """Apply a monomial map: fn(e) -> (new exponent, Scalar multiplier or None)."""
        moved: List[Tuple[Exps, Any, Denominator]] = []
        common = _ONE
        for e, p in self._num.items():
            ne, mult = fn(e)
            if mult is None:
                moved.append((tuple(ne), p, _ONE))
                continue
            mn, md = _split_scalar(mult)
            if mn:
                moved.append((tuple(ne), _times(p, mn), md))
                common = common.lcm(md)
        out: Dict[Exps, Any] = {}
        for ne, p, md in moved:
            v = _times(p, md.cofactor(common))
            if ne in out:
                v = out[ne] + v
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return LaurentPoly.over(self.nvars, out, self._den * common)

    def evaluate_at_one(self) -> Scalar:
        total = PARAM_RING.zero
        for p in self._num.values():
            total = total + p
        return self._scalar(total)

    # --- arithmetic ---

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ArityMismatch(f"nvars differ: {self.nvars} vs {other.nvars}")

    def _coerce(self, other: Any) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.constant(self.nvars, other)

    def _aligned(self, other: "LaurentPoly") -> Tuple[Denominator, Optional[Any], Optional[Any]]:
        if self._den == other._den:
            return self._den, None, None
        common = self._den.lcm(other._den)
        return common, self._den.cofactor(common), other._den.cofactor(common)

    def __add__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if not o._num:
            return self
        if not self._num:
            return o
        common, ka, kb = self._aligned(o)
        out = {e: _times(p, ka) for e, p in self._num.items()}
        for e, p in o._num.items():
            v = _times(p, kb)
            if e in out:
                v = out[e] + v
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly.over(self.nvars, out, common)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.over(self.nvars, {e: -p for e, p in self._num.items()}, self._den)

    def __sub__(self, other: Any) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return self._coerce(other) - self

    def scale(self, c: Any) -> "LaurentPoly":
        numer, den = _split_scalar(c)
        if not numer:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly.over(self.nvars, {e: _times(p, numer) for e, p in self._num.items()}, self._den * den)

    def divided_by(self, den: Denominator, coeff: Any = 1) -> "LaurentPoly":
        """self / (coeff * den) for a rational constant coeff."""
        if coeff == 1:
            return LaurentPoly.over(self.nvars, self._num, self._den * den)
        return LaurentPoly.over(self.nvars, {e: p.quo_ground(coeff) for e, p in self._num.items()}, self._den * den)

    def __mul__(self, other: Any) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        if not self._num or not other._num:
            return LaurentPoly.zero(self.nvars)
        sa, pa = self._to_poly()
        sb, pb = other._to_poly()
        shift = tuple(x + y for x, y in zip(sa, sb))
        return LaurentPoly._from_poly(self.nvars, pa * pb, shift, self._den * other._den)

    def __rmul__(self, other: Any) -> "LaurentPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("Negative powers of Laurent polynomials are not Laurent polynomials in general")
        out = LaurentPoly.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, LaurentPoly):
            if self.nvars != other.nvars or self._num.keys() != other._num.keys():
                return False
            _, ka, kb = self._aligned(other)
            return all(_times(p, ka) == _times(other._num[e], kb) for e, p in self._num.items())
        if isinstance(other, (int, Scalar)):
            return self == LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.items())))

    # --- sympy bridge ---

    def _to_poly(self) -> Tuple[Exps, Any]:
        ring = _z_ring(self.nvars)
        shift = tuple(min(e[k] for e in self._num) for k in range(self.nvars))
        body = {tuple(x - s for x, s in zip(e, shift)): p for e, p in self._num.items()}
        return shift, ring.from_dict(body)

    @classmethod
    def _from_poly(cls, nvars: int, poly: Any, shift: Sequence[int], den: Denominator) -> "LaurentPoly":
        terms = {tuple(x + s for x, s in zip(m, shift)): p for m, p in poly.items()}
        return cls.over(nvars, terms, den)

    def _to_field_poly(self) -> Tuple[Exps, Any]:
        ring = _field_ring(self.nvars)
        shift = tuple(min(e[k] for e in self._num) for k in range(self.nvars))
        body = {tuple(x - s for x, s in zip(e, shift)): c.raw for e, c in self.items()}
        return shift, ring.from_dict(body)

    # --- text / JSON ---

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {format_laurent(self)!r})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "nvars": self.nvars,
            "terms": [list(e) + [self.coefficient(e).to_json()] for e in self.support()],
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "LaurentPoly":
        try:
            n = int(obj["nvars"])
            terms = {tuple(int(x) for x in row[:-1]): Scalar.from_json(row[-1]) for row in obj["terms"]}
        except (KeyError, TypeError, ValueError) as e:
            raise ScalarParseError(f"Malformed LaurentPoly JSON: {e}") from e
        return cls(n, terms)


def _z_monomial_text(e: Exps) -> str:
    parts = []
    for i, x in enumerate(e, start=1):
        if x == 1:
            parts.append(f"z{i}")
        elif x:
            parts.append(f"z{i}^{x}")
    return "*".join(parts)


def format_laurent(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    out = []
    for e in f.support():
        c = f.coefficient(e)
        mono = _z_monomial_text(e)
        ctext = format_scalar(c)
        neg = False
        if not is_multiterm(c) and ctext.startswith("-"):
            neg, ctext = True, ctext[1:]
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        elif is_multiterm(c):
            body = f"({ctext})*{mono}"
        else:
            body = f"{ctext}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def laurent_arith(lhs: LaurentPoly, rhs: LaurentPoly, op: str) -> LaurentPoly:
    if lhs.nvars != rhs.nvars:
        raise ArityMismatch(f"nvars differ: {lhs.nvars} vs {rhs.nvars}")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"Unknown op '{op}'")


def laurent_divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    if num.nvars != den.nvars:
        raise ArityMismatch(f"nvars differ: {num.nvars} vs {den.nvars}")
    if den.is_zero():
        raise DivisionByZero("Laurent division by zero")
    if num.is_zero():
        return LaurentPoly.zero(num.nvars)
    sn, pn = num._to_poly()
    sd, pd = den._to_poly()
    shift = tuple(x - y for x, y in zip(sn, sd))
    quo, rem = pn.div(pd)
    if not rem:
        # (pn / Dn) / (pd / Dd) = quo * Dd / Dn
        shared = num.denominator.gcd(den.denominator)
        out = LaurentPoly._from_poly(num.nvars, quo, shift, num.denominator / shared)
        extra = (den.denominator / shared).expand()
        return LaurentPoly.over(num.nvars, {e: _times(p, extra) for e, p in out.numerators()}, out.denominator)
    # the leading coefficient of the divisor is not a unit of the parameter ring
    sn, pn = num._to_field_poly()
    sd, pd = den._to_field_poly()
    quo, rem = pn.div(pd)
    if rem:
        raise NotDivisible(f"{den} does not divide {num}")
    return LaurentPoly(num.nvars, {tuple(x + s for x, s in zip(m, shift)): c for m, c in quo.items()})


def coefficient_of(f: LaurentPoly, exponent: Sequence[int]) -> Scalar:
    return f.coefficient(exponent)
