"""Exact multivariate rational functions with deterministic canonical forms.

Thin wrapper over sympy's sparse rational-function fields.  Fractions
are gcd-reduced with the monomial order fixed to graded lexicographic
over the declared variable tuple, so equal values always print the
same way.  Each value remembers its variable tuple; mixing coordinate
systems without an explicit substitution is an error.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracField, field as _sym_field
from sympy.polys.orderings import grlex

Names = Tuple[str, ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _field_for(names: Names) -> FracField:
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names: {names}")
    return _sym_field(list(names), QQ, order=grlex)[0]


def _to_qq(value: Scalar):
    f = Fraction(value)
    return QQ(f.numerator, f.denominator)


class RationalFunction:
    """An element of Q(x_1, ..., x_k), always in reduced form."""

    __slots__ = ("names", "elem")

    def __init__(self, names: Names, elem) -> None:
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "elem", elem)

    def __setattr__(self, *_):  # immutable
        raise AttributeError("RationalFunction is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def variable(cls, name: str, names: Names) -> "RationalFunction":
        names = tuple(names)
        fld = _field_for(names)
        if name not in names:
            raise ValueError(f"unknown variable {name!r}")
        return cls(names, fld.gens[names.index(name)])

    @classmethod
    def constant(cls, value: Scalar, names: Names) -> "RationalFunction":
        names = tuple(names)
        return cls(names, _field_for(names).ground_new(_to_qq(value)))

    # -- helpers -----------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.names != self.names:
                raise ValueError(
                    f"variable sets differ: {self.names} vs {other.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other, self.names)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RationalFunction(self.names, self.elem + o.elem)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RationalFunction(self.names, self.elem - o.elem)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RationalFunction(self.names, self.elem * o.elem)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.elem:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.names, self.elem / o.elem)

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RationalFunction(self.names, o.elem - self.elem)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return RationalFunction(self.names, -self.elem)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponents must be integers")
        if k < 0 and not self.elem:
            raise ZeroDivisionError("zero to a negative power")
        return RationalFunction(self.names, self.elem ** k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other, self.names)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.names == other.names and self.elem == other.elem

    def __hash__(self) -> int:
        return hash((self.names, self.elem))

    def __repr__(self) -> str:
        return f"RationalFunction({self.canonical()!r})"

    # -- structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.elem

    def numer_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Numerator terms, graded-lex descending, exact coefficients."""
        return [
            (tuple(mon), Fraction(int(c.numerator), int(c.denominator)))
            for mon, c in self.elem.numer.terms()
        ]

    def denom_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        return [
            (tuple(mon), Fraction(int(c.numerator), int(c.denominator)))
            for mon, c in self.elem.denom.terms()
        ]

    def uses(self, name: str) -> bool:
        """Whether the variable occurs in the reduced fraction."""
        i = self.names.index(name)
        return any(mon[i] for mon, _ in self.numer_terms()) or any(
            mon[i] for mon, _ in self.denom_terms()
        )

    # -- substitution and evaluation ----------------------------------

    def subs(
        self,
        mapping: Mapping[str, "RationalFunction"],
        target_names: Optional[Names] = None,
    ) -> "RationalFunction":
        """Image under the map sending each named variable to its value.

        Values must all live over one variable tuple (the target).
        Source variables absent from the mapping are sent to the
        same-named target variable; if the target lacks that name the
        variable must not occur.
        """
        if target_names is None:
            if mapping:
                target_names = next(iter(mapping.values())).names
            else:
                target_names = self.names
        target_names = tuple(target_names)
        for name, value in mapping.items():
            if name not in self.names:
                raise ValueError(f"unknown variable {name!r}")
            if value.names != target_names:
                raise ValueError("substitution values over mixed variable sets")
        images: List[RationalFunction] = []
        for name in self.names:
            if name in mapping:
                images.append(mapping[name])
            elif name in target_names:
                images.append(RationalFunction.variable(name, target_names))
            elif self.uses(name):
                raise ValueError(f"no image provided for occurring variable {name!r}")
            else:
                images.append(RationalFunction.constant(0, target_names))
        num = _eval_poly(self.elem.numer, images, target_names)
        den = _eval_poly(self.elem.denom, images, target_names)
        if den.is_zero:
            raise ZeroDivisionError("substitution sends the denominator to zero")
        return num / den

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; the denominator must not vanish."""
        point = []
        for name in self.names:
            if name not in values:
                if self.uses(name):
                    raise ValueError(f"no value for occurring variable {name!r}")
                point.append(Fraction(0))
            else:
                point.append(Fraction(values[name]))
        num = _eval_poly_scalar(self.elem.numer, point)
        den = _eval_poly_scalar(self.elem.denom, point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return num / den

    # -- printing ------------------------------------------------------

    def canonical(self) -> str:
        """Deterministic string: denominator scaled to leading coefficient 1."""
        if self.is_zero:
            return "0"
        lc = Fraction(int(self.elem.denom.LC.numerator), int(self.elem.denom.LC.denominator))
        num = _poly_str(self.numer_terms(), self.names, Fraction(1) / lc)
        den_terms = self.denom_terms()
        if len(den_terms) == 1 and den_terms[0][0] == (0,) * len(self.names):
            return num  # constant denominator folds into the numerator
        den = _poly_str(den_terms, self.names, Fraction(1) / lc)
        return f"({num})/({den})"


def _eval_poly(poly, images: List[RationalFunction], names: Names) -> RationalFunction:
    total = RationalFunction.constant(0, names)
    for mon, coeff in poly.terms():
        term = RationalFunction.constant(
            Fraction(int(coeff.numerator), int(coeff.denominator)), names
        )
        for img, e in zip(images, mon):
            if e:
                term = term * img ** e
        total = total + term
    return total


def _eval_poly_scalar(poly, point: List[Fraction]) -> Fraction:
    total = Fraction(0)
    for mon, coeff in poly.terms():
        term = Fraction(int(coeff.numerator), int(coeff.denominator))
        for v, e in zip(point, mon):
            if e:
                term *= v ** e
        total += term
    return total


def _poly_str(terms, names: Names, scale: Fraction) -> str:
    parts: List[str] = []
    for mon, coeff in terms:
        c = coeff * scale
        factors = [
            name if e == 1 else f"{name}**{e}"
            for name, e in zip(names, mon)
            if e
        ]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


Substitution = Dict[str, RationalFunction]


def identity_substitution(names: Names) -> Substitution:
    return {name: RationalFunction.variable(name, names) for name in names}


def compose(second: Substitution, first: Substitution) -> Substitution:
    """The substitution applying `first`, then `second`, to each variable."""
    return {name: value.subs(second) for name, value in first.items()}


def variables(names: Names) -> Dict[str, RationalFunction]:
    return {name: RationalFunction.variable(name, names) for name in tuple(names)}
