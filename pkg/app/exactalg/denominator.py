"""Factored denominators.

A Denominator is a product of atoms of the parameter ring with positive
exponents. Atoms come out of sympy's factorisation (irreducible, primitive,
normalised sign), so a least common multiple is a max over exponents and a
cofactor is a product of the atoms left over. No polynomial gcd is taken.
"""

from __future__ import annotations

from typing import Any, Dict, ItemsView, Mapping, Optional, Tuple

from .scalar import PARAM_RING, DivisionByZero

Split = Tuple[Any, Tuple[Tuple[Any, int], ...]]

# Atoms met so far, in discovery order; new polynomials are trial-divided by
# these before sympy is asked to factor what is left.
_KNOWN_ATOMS: Dict[Any, None] = {}
_SPLITS: Dict[Any, Split] = {}


def _split(poly: Any) -> Split:
    """poly = coeff * prod(atom^k)."""
    hit = _SPLITS.get(poly)
    if hit is not None:
        return hit
    if not poly:
        raise DivisionByZero("Zero denominator")
    atoms: Dict[Any, int] = {}
    rest = poly
    for atom in list(_KNOWN_ATOMS):
        if rest.is_ground:
            break
        while not rest.is_ground:
            quo, rem = rest.div(atom)
            if rem:
                break
            atoms[atom] = atoms.get(atom, 0) + 1
            rest = quo
    if rest.is_ground:
        coeff = rest.LC
    else:
        coeff, factors = rest.factor_list()
        for atom, k in factors:
            _KNOWN_ATOMS.setdefault(atom, None)
            atoms[atom] = atoms.get(atom, 0) + k
    out = (coeff, tuple(atoms.items()))
    _SPLITS[poly] = out
    return out


class Denominator:
    __slots__ = ("_atoms", "_expanded")

    def __init__(self, atoms: Optional[Mapping[Any, int]] = None):
        clean = {}
        for atom, k in (atoms or {}).items():
            if k < 0:
                raise ValueError(f"Negative exponent {k} in a denominator")
            if k:
                clean[atom] = int(k)
        self._atoms: Dict[Any, int] = clean
        self._expanded: Optional[Any] = None

    @classmethod
    def one(cls) -> "Denominator":
        return cls()

    @classmethod
    def of(cls, poly: Any) -> Tuple[Any, "Denominator"]:
        """(c, D) with poly = c * D for a rational constant c."""
        coeff, atoms = _split(poly)
        return coeff, cls(dict(atoms))

    def is_one(self) -> bool:
        return not self._atoms

    def items(self) -> ItemsView[Any, int]:
        return self._atoms.items()

    def __mul__(self, other: "Denominator") -> "Denominator":
        if other.is_one():
            return self
        if self.is_one():
            return other
        merged = dict(self._atoms)
        for atom, k in other._atoms.items():
            merged[atom] = merged.get(atom, 0) + k
        return Denominator(merged)

    def __pow__(self, n: int) -> "Denominator":
        return Denominator({atom: k * n for atom, k in self._atoms.items()})

    def __truediv__(self, other: "Denominator") -> "Denominator":
        if other.is_one():
            return self
        out = dict(self._atoms)
        for atom, k in other._atoms.items():
            left = out.get(atom, 0) - k
            if left < 0:
                raise ValueError("Denominator does not divide")
            out[atom] = left
        return Denominator(out)

    def lcm(self, other: "Denominator") -> "Denominator":
        if other.is_one() or other == self:
            return self
        if self.is_one():
            return other
        out = dict(self._atoms)
        for atom, k in other._atoms.items():
            if k > out.get(atom, 0):
                out[atom] = k
        return Denominator(out)

    def gcd(self, other: "Denominator") -> "Denominator":
        return Denominator({atom: min(k, other._atoms[atom]) for atom, k in self._atoms.items() if atom in other._atoms})

    def cofactor(self, multiple: "Denominator") -> Any:
        """multiple / self as a polynomial."""
        return (multiple / self).expand()

    def expand(self) -> Any:
        if self._expanded is None:
            out = PARAM_RING.one
            for atom, k in self._atoms.items():
                out = out * atom ** k
            self._expanded = out
        return self._expanded

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Denominator):
            return self._atoms == other._atoms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._atoms.items()))

    def __repr__(self) -> str:
        parts = [f"({atom.as_expr()})^{k}" if k > 1 else f"({atom.as_expr()})" for atom, k in self._atoms.items()]
        return f"Denominator({' * '.join(parts) or '1'})"
