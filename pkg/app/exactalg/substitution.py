"""Parameter substitution (ring homomorphisms of the parameter field).

A Substitution assigns Scalars to a subset of the alphabet and leaves the
other symbols fixed. Images are computed on numerator and denominator
separately over a common denominator, so a Scalar is cancelled exactly once.
A LaurentPoly keeps its shared factored denominator: every numerator is
mapped over one common power of the image denominators and the atoms of the
old denominator are mapped one by one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..errors import EngineError
from .denominator import Denominator
from .laurent import LaurentPoly
from .scalar import ALPHABET, PARAM_FIELD, PARAM_RING, Scalar, as_scalar, canonical_name


class SubstitutionSingular(EngineError):
    pass


Value = Union[Scalar, int, Fraction, str]
Degrees = Tuple[int, ...]


class Substitution:
    def __init__(self, assignment: Mapping[str, Value], name: str = ""):
        self.name = name
        self.assignment: Dict[str, Scalar] = {}
        self._images: List[Optional[Tuple[Any, Any]]] = [None] * len(ALPHABET)
        for key, value in assignment.items():
            sym = canonical_name(key)
            s = as_scalar(value)
            self.assignment[sym] = s
            self._images[ALPHABET.index(sym)] = (s.numerator, s.denominator)
        self._active = tuple(k for k, img in enumerate(self._images) if img is not None)
        self._pows: Dict[Tuple[int, int, int], Any] = {}
        self._products: Dict[Tuple[Degrees, Degrees], Any] = {}
        self._den_splits: Dict[int, Tuple[Any, Denominator]] = {}

    def __repr__(self) -> str:
        label = self.name or ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"Substitution({label})"

    def is_identity(self) -> bool:
        return not self._active

    def _power(self, idx: int, which: int, e: int) -> Any:
        key = (idx, which, e)
        p = self._pows.get(key)
        if p is None:
            p = self._images[idx][which] ** e
            self._pows[key] = p
        return p

    def _degrees(self, polys: Iterable[Any]) -> Degrees:
        degs = [0] * len(self._active)
        for poly in polys:
            for monom in poly.itermonoms():
                for j, k in enumerate(self._active):
                    if monom[k] > degs[j]:
                        degs[j] = monom[k]
        return tuple(degs)

    def _image_product(self, sig: Degrees, degs: Degrees) -> Any:
        key = (sig, degs)
        out = self._products.get(key)
        if out is None:
            out = PARAM_RING.one
            for k, e, top in zip(self._active, sig, degs):
                if e:
                    out = out * self._power(k, 0, e)
                if top - e:
                    out = out * self._power(k, 1, top - e)
            self._products[key] = out
        return out

    def _numer_image(self, poly: Any, degs: Degrees) -> Any:
        """Image of poly times prod_k den_k^degs_k."""
        groups: Dict[Degrees, Dict[Tuple[int, ...], Any]] = {}
        for monom, coeff in poly.iterterms():
            sig = tuple(monom[k] for k in self._active)
            kept = tuple(0 if self._images[k] is not None else e for k, e in enumerate(monom))
            groups.setdefault(sig, {})[kept] = coeff
        num = PARAM_RING.zero
        for sig, body in groups.items():
            num = num + PARAM_RING.from_dict(body) * self._image_product(sig, degs)
        return num

    def _den_image(self, degs: Degrees) -> Any:
        den = PARAM_RING.one
        for k, top in zip(self._active, degs):
            if top:
                den = den * self._power(k, 1, top)
        return den

    def _poly_image(self, poly: Any) -> Tuple[Any, Any]:
        degs = self._degrees([poly])
        return self._numer_image(poly, degs), self._den_image(degs)

    def _split_den(self, k: int) -> Tuple[Any, Denominator]:
        hit = self._den_splits.get(k)
        if hit is None:
            hit = Denominator.of(self._images[k][1])
            self._den_splits[k] = hit
        return hit

    def _den_factored(self, degs: Degrees) -> Tuple[Any, Denominator]:
        coeff = PARAM_RING.domain.one
        den = Denominator.one()
        for k, top in zip(self._active, degs):
            if top:
                c, d = self._split_den(k)
                coeff = coeff * c ** top
                den = den * d ** top
        return coeff, den

    def scalar(self, x: Scalar) -> Scalar:
        if self.is_identity():
            return x
        f = x.raw
        an, ad = self._poly_image(f.numer)
        bn, bd = self._poly_image(f.denom)
        if not bn:
            raise SubstitutionSingular(f"Denominator of {x} vanishes under {self!r}")
        return Scalar(PARAM_FIELD.new(an * bd, ad * bn))

    def laurent(self, f: LaurentPoly) -> LaurentPoly:
        if self.is_identity() or f.is_zero():
            return f
        terms = list(f.numerators())
        degs = self._degrees(p for _, p in terms)
        nums = {e: self._numer_image(p, degs) for e, p in terms}
        below_c, below = self._den_factored(degs)
        above_c = PARAM_RING.domain.one
        above = Denominator.one()
        for atom, m in f.denominator.items():
            atom_degs = self._degrees([atom])
            an = self._numer_image(atom, atom_degs)
            if not an:
                raise SubstitutionSingular(f"Denominator factor {atom.as_expr()} vanishes under {self!r}")
            # 1/atom maps to den_image / an
            c, d = Denominator.of(an)
            below_c = below_c * c ** m
            below = below * d ** m
            c, d = self._den_factored(atom_degs)
            above_c = above_c * c ** m
            above = above * d ** m
        shared = above.gcd(below)
        above, below = above / shared, below / shared
        mult = above.expand().mul_ground(above_c / below_c)
        return LaurentPoly.over(f.nvars, {e: p * mult for e, p in nums.items()}, below)

    def __call__(self, x: Any) -> Any:
        if isinstance(x, LaurentPoly):
            return self.laurent(x)
        return self.scalar(as_scalar(x))

    def then(self, other: "Substitution") -> "Substitution":
        """Composite map: apply self, then other."""
        merged: Dict[str, Scalar] = {sym: other.scalar(v) for sym, v in self.assignment.items()}
        for sym, v in other.assignment.items():
            merged.setdefault(sym, v)
        return Substitution(merged, name=f"{self.name}>{other.name}".strip(">"))


def substitute_params(x: Any, mapping: Union[Substitution, Mapping[str, Value]]) -> Any:
    sub = mapping if isinstance(mapping, Substitution) else Substitution(mapping)
    return sub(x)


def _change_of_variables() -> Substitution:
    a, b, c, d, t = (Scalar.gen(n) for n in ("a", "b", "c", "d", "t"))
    left = (a - 1) * (c - 1)
    right = (b - 1) * (d - 1)
    return Substitution(
        {
            "alpha": -a * c * (1 - t) / left,
            "gamma": (1 - t) / left,
            "beta": -b * d * (1 - t) / right,
            "delta": (1 - t) / right,
        },
        name="change_of_variables",
    )


# Greek boundary rates in terms of the Askey-Wilson parameters a,b,c,d.
CHANGE_OF_VARIABLES = _change_of_variables()


def q_one() -> Substitution:
    return Substitution({"q": 1}, name="q=1")


def numeric_point(values: Mapping[str, Union[int, Fraction, str]]) -> Substitution:
    return Substitution({k: Fraction(str(v)) for k, v in values.items()}, name="point")
