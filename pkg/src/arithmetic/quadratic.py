"""
Extension quadratique relative K = F(α1), α1 racine de x² + px + q (p, q ∈ O_F)

α2 n'est jamais stocké : la conjugaison relative agit par
(a + b·α1) ↦ (a - p·b) - b·α1, et la norme relative vaut a² - p·a·b + q·b².
Le plongement complexe ne sert qu'à l'affichage, aux réseaux et à la simulation.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import ParameterError, ReduciblePolynomialError
from .exact import FieldElem, RingElem, as_field, is_square_in_F

Coefficient = Union[int, Fraction, RingElem, FieldElem]


def _format_coefficient(c: RingElem, suffix: str) -> str:
    """Terme ' + c·suffix' d'un polynôme, signe extrait quand c est rationnel"""
    if c.is_zero():
        return ""
    if c.b == 0:
        magnitude = abs(c.a)
        sign = "-" if c.a < 0 else "+"
        body = suffix if (magnitude == 1 and suffix) else f"{magnitude}{suffix}"
        return f" {sign} {body}"
    if c.a == 0 and c.b < 0:
        return f" - ({-c}){suffix}"
    return f" + ({c}){suffix}"


@dataclass(frozen=True)
class QuadPoly:
    """Polynôme unitaire x² + px + q sur O_F"""

    d: int
    p: RingElem
    q: RingElem

    def __post_init__(self):
        if self.p.d != self.d or self.q.d != self.d:
            raise ParameterError(f"Coefficients hors de Q(√-{self.d}) : p = {self.p}, q = {self.q}")

    @classmethod
    def from_pairs(cls, d: int, p: Tuple[int, int], q: Tuple[int, int]) -> "QuadPoly":
        return cls(d, RingElem(d, *p), RingElem(d, *q))

    @property
    def disc(self) -> RingElem:
        return discriminant(self)

    def sqrt_disc(self) -> Optional[FieldElem]:
        return is_square_in_F(self.disc)

    def roots_complex(self) -> Tuple[complex, complex]:
        """(α1, α2) = ((-p + √disc)/2, (-p - √disc)/2), racine principale"""
        root = _principal_sqrt(self.disc.to_complex())
        minus_p = -self.p.to_complex()
        return (minus_p + root) / 2, (minus_p - root) / 2

    def __str__(self) -> str:
        text = "x^2" + _format_coefficient(self.p, "x") + _format_coefficient(self.q, "")
        return text


def _principal_sqrt(z: complex) -> complex:
    # -0.0 en partie imaginaire ferait basculer la coupure sur -i√|z|
    return cmath.sqrt(complex(z.real, z.imag + 0.0))


def discriminant(poly: QuadPoly) -> RingElem:
    """p² - 4q"""
    return poly.p * poly.p - 4 * poly.q


def is_irreducible(poly: QuadPoly) -> bool:
    return is_square_in_F(discriminant(poly)) is None


def require_irreducible(poly: QuadPoly) -> None:
    root = is_square_in_F(discriminant(poly))
    if root is not None:
        raise ReduciblePolynomialError(poly, root)


def translate(poly: QuadPoly, p0: RingElem) -> QuadPoly:
    """Polynôme de racines α1 + p0, α2 + p0 (même discriminant)"""
    return QuadPoly(poly.d, poly.p - 2 * p0, poly.q - p0 * poly.p + p0 * p0)


def _as_coordinate(poly: QuadPoly, value: Coefficient) -> FieldElem:
    if isinstance(value, (FieldElem, RingElem)):
        if value.d != poly.d:
            raise ParameterError(f"Coordonnée hors de Q(√-{poly.d}) : {value}")
        return as_field(value)
    return FieldElem.from_scalar(poly.d, value)


@dataclass(frozen=True)
class ExtElem:
    """Élément a + b·α1 de K, coordonnées a, b dans F"""

    poly: QuadPoly
    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        object.__setattr__(self, "a", _as_coordinate(self.poly, self.a))
        object.__setattr__(self, "b", _as_coordinate(self.poly, self.b))

    @classmethod
    def one(cls, poly: QuadPoly) -> "ExtElem":
        return cls(poly, 1, 0)

    @classmethod
    def alpha(cls, poly: QuadPoly) -> "ExtElem":
        return cls(poly, 0, 1)

    def _coerce(self, other) -> "ExtElem":
        if isinstance(other, ExtElem):
            if other.poly != self.poly:
                raise ParameterError(f"Extensions différentes : {self.poly} et {other.poly}")
            return other
        if isinstance(other, (int, Fraction, RingElem, FieldElem)) and not isinstance(other, bool):
            return ExtElem(self.poly, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.poly, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "ExtElem":
        return ExtElem(self.poly, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.poly, self.a - o.a, self.b - o.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p, q = as_field(self.poly.p), as_field(self.poly.q)
        # α1² = -p·α1 - q
        be = self.b * o.b
        return ExtElem(
            self.poly,
            self.a * o.a - be * q,
            self.a * o.b + self.b * o.a - be * p,
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        if self.a.is_zero():
            return f"({self.b})α1"
        return f"({self.a}) + ({self.b})α1"


def rel_norm(x: ExtElem) -> FieldElem:
    """N_{K/F}(a + b·α1) = a² - p·a·b + q·b²"""
    p, q = as_field(x.poly.p), as_field(x.poly.q)
    return x.a * x.a - p * x.a * x.b + q * x.b * x.b


def conjugate(x: ExtElem) -> ExtElem:
    """Image de x par α1 ↦ α2 = -p - α1"""
    p = as_field(x.poly.p)
    return ExtElem(x.poly, x.a - p * x.b, -x.b)


def embed_complex(x: ExtElem, which: int = 1) -> complex:
    """σ_which(x) = a + b·α_which en double précision"""
    if which not in (1, 2):
        raise ParameterError(f"Plongement inconnu : {which} (1 ou 2 attendu)")
    alpha = x.poly.roots_complex()[which - 1]
    return x.a.to_complex() + x.b.to_complex() * alpha
