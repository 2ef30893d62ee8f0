"""Exact scalars: rational functions in the fixed parameter alphabet.

Design goals:
- One global field QQ(a,b,c,d,q,t,alpha,beta,gamma,delta), graded-lex order.
- Every value is kept as a cancelled fraction with a positive leading
  denominator coefficient, so equality is structural.
- Deterministic text and JSON forms.

The arithmetic itself is sympy's sparse FracField; this module only wraps it
with the engine's canonical printing, parsing and error types.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy import QQ, symbols
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracField
from sympy.polys.orderings import grlex

from ..errors import EngineError

ALPHABET: Tuple[str, ...] = ("a", "b", "c", "d", "q", "t", "alpha", "beta", "gamma", "delta")
GREEK = ("alpha", "beta", "gamma", "delta")
LATIN = ("a", "b", "c", "d", "q", "t")

# Greek factors print before Latin ones inside a monomial.
_PRINT_ORDER = (6, 7, 8, 9, 0, 1, 2, 3, 4, 5)

_ALIASES = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta"}

SYMBOLS = symbols(ALPHABET)
PARAM_FIELD = FracField(SYMBOLS, QQ, grlex)
PARAM_RING = PARAM_FIELD.ring

_LOCALS: Dict[str, Any] = dict(zip(ALPHABET, SYMBOLS))
for _glyph, _name in _ALIASES.items():
    _LOCALS[_glyph] = _LOCALS[_name]

_TRANSFORMS = standard_transformations + (convert_xor,)


class DivisionByZero(EngineError):
    pass


class ScalarParseError(EngineError):
    pass


def canonical_name(name: str) -> str:
    key = _ALIASES.get(name.strip(), name.strip())
    if key not in ALPHABET:
        raise ScalarParseError(f"Unknown parameter '{name}'")
    return key


def _qq(value: Union[int, Fraction]) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _as_fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class Scalar:
    """Immutable element of the parameter field."""

    __slots__ = ("_f",)

    def __init__(self, value: Any = 0):
        if isinstance(value, Scalar):
            f = value._f
        elif isinstance(value, PARAM_FIELD.dtype):
            f = value
        elif isinstance(value, (int, Fraction)):
            f = PARAM_FIELD.ground_new(_qq(value))
        elif isinstance(value, str):
            f = parse_scalar(value)._f
        else:
            raise TypeError(f"Cannot build a Scalar from {type(value).__name__}")
        object.__setattr__(self, "_f", f)

    def __setattr__(self, key: str, value: Any) -> None:
        raise AttributeError("Scalar is immutable")

    @classmethod
    def gen(cls, name: str) -> "Scalar":
        return cls(PARAM_FIELD.gens[ALPHABET.index(canonical_name(name))])

    @classmethod
    def from_polys(cls, numer: Any, denom: Any) -> "Scalar":
        if not denom:
            raise DivisionByZero("Zero denominator")
        return cls(PARAM_FIELD.new(numer, denom))

    # --- structure ---

    @property
    def raw(self) -> Any:
        return self._f

    @property
    def numerator(self) -> Any:
        return self._f.numer

    @property
    def denominator(self) -> Any:
        return self._f.denom

    def is_zero(self) -> bool:
        return not self._f

    def is_polynomial(self) -> bool:
        return self._f.denom == PARAM_RING.one

    def is_constant(self) -> bool:
        return self._f.numer.is_ground and self._f.denom.is_ground

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"Not a constant: {self}")
        n = self._f.numer.LC if self._f.numer else QQ(0)
        return _as_fraction(n) / _as_fraction(self._f.denom.LC)

    def canonicalize(self) -> "Scalar":
        return Scalar(PARAM_FIELD.new(self._f.numer, self._f.denom))

    # --- arithmetic ---

    def __add__(self, other: Any) -> "Scalar":
        o = as_scalar(other)
        return Scalar(self._f + o._f)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        return Scalar(self._f - as_scalar(other)._f)

    def __rsub__(self, other: Any) -> "Scalar":
        return Scalar(as_scalar(other)._f - self._f)

    def __mul__(self, other: Any) -> "Scalar":
        return Scalar(self._f * as_scalar(other)._f)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Scalar":
        o = as_scalar(other)
        if not o._f:
            raise DivisionByZero(f"Division of {self} by zero")
        return Scalar(self._f / o._f)

    def __rtruediv__(self, other: Any) -> "Scalar":
        return as_scalar(other) / self

    def __neg__(self) -> "Scalar":
        return Scalar(-self._f)

    def __pow__(self, n: int) -> "Scalar":
        n = int(n)
        if n >= 0:
            return Scalar(self._f ** n)
        if not self._f:
            raise DivisionByZero("Negative power of zero")
        return Scalar((PARAM_FIELD.one / self._f) ** (-n))

    def inverse(self) -> "Scalar":
        return self ** -1

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            return self._f == as_scalar(other)._f
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._f)

    def __bool__(self) -> bool:
        return bool(self._f)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def to_json(self) -> Dict[str, List[List[Any]]]:
        return {"num": _poly_to_json(self._f.numer), "den": _poly_to_json(self._f.denom)}

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "Scalar":
        try:
            num = _poly_from_json(obj["num"])
            den = _poly_from_json(obj["den"])
        except (KeyError, TypeError, ValueError) as e:
            raise ScalarParseError(f"Malformed Scalar JSON: {e}") from e
        return cls.from_polys(num, den)


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value: Any) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


def gens() -> Dict[str, Scalar]:
    return {name: Scalar.gen(name) for name in ALPHABET}


def scalar_arith(lhs: Scalar, rhs: Scalar, op: str) -> Scalar:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"Unknown op '{op}'")


# --- parsing ---

def parse_scalar(text: str) -> Scalar:
    text = (text or "").strip()
    if not text:
        raise ScalarParseError("Empty expression")
    try:
        expr = parse_expr(text, local_dict=dict(_LOCALS), transformations=_TRANSFORMS)
    except Exception as e:
        raise ScalarParseError(f"Cannot parse '{text}': {e}") from e
    unknown = set(getattr(expr, "free_symbols", set())) - set(SYMBOLS)
    if unknown:
        names = ", ".join(sorted(str(s) for s in unknown))
        raise ScalarParseError(f"Symbols outside the parameter alphabet: {names}")
    try:
        return Scalar(PARAM_FIELD.from_expr(expr))
    except Exception as e:
        raise ScalarParseError(f"Not a rational function: '{text}'") from e


# --- printing ---

def _monomial_text(monom: Sequence[int]) -> str:
    parts = []
    for idx in _PRINT_ORDER:
        e = monom[idx]
        if e == 1:
            parts.append(ALPHABET[idx])
        elif e:
            parts.append(f"{ALPHABET[idx]}^{e}")
    return "*".join(parts)


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(poly: Any) -> str:
    if not poly:
        return "0"
    out = []
    for monom, coeff in poly.terms():
        c = _as_fraction(coeff)
        mono = _monomial_text(monom)
        mag = abs(c)
        if not mono:
            body = _coeff_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_text(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def _wrap(poly: Any) -> str:
    text = format_poly(poly)
    return f"({text})" if len(poly) > 1 else text


def format_scalar(x: Scalar) -> str:
    f = x.raw
    if f.denom == PARAM_RING.one:
        return format_poly(f.numer)
    return f"{_wrap(f.numer)}/{_wrap(f.denom)}"


def is_multiterm(x: Scalar) -> bool:
    f = x.raw
    return f.denom != PARAM_RING.one or len(f.numer) > 1


# --- JSON ---

def _poly_to_json(poly: Any) -> List[List[Any]]:
    rows = []
    for monom, coeff in poly.terms():
        c = _as_fraction(coeff)
        rows.append(list(monom) + [f"{c.numerator}/{c.denominator}"])
    return rows


def _poly_from_json(rows: Sequence[Sequence[Any]]) -> Any:
    terms = {}
    for row in rows:
        if len(row) != len(ALPHABET) + 1:
            raise ValueError(f"Expected {len(ALPHABET)} exponents and a coefficient, got {row!r}")
        exps = tuple(int(e) for e in row[:-1])
        if any(e < 0 for e in exps):
            raise ValueError("Negative exponent in parameter monomial")
        terms[exps] = _qq(Fraction(str(row[-1])))
    return PARAM_RING.from_dict(terms)
