"""
Arithmétique exacte dans Q, dans F = Q(√-d) et dans son anneau d'entiers O_F

- Rational : fractions.Fraction (toujours réduite, dénominateur > 0)
- FieldElem : x + y√-d avec x, y rationnels
- RingElem : a + b·ω_d avec a, b entiers, où ω_d = (1+√-d)/2 si -d ≡ 1 (mod 4), sinon ω_d = √-d

Toutes les comparaisons de modules passent par |u|² exact : aucun flottant ne décide d'une branche.
Chaque élément porte son paramètre d (pas de contexte global), ce qui permet de
parcourir plusieurs corps dans une même recherche.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Union

from .errors import DomainError, ParameterError

Rational = Fraction
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def check_field_parameter(d: int) -> int:
    """Valide d (entier ≥ 1 sans facteur carré), une seule fois par valeur"""
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ParameterError(f"Paramètre de corps invalide : d = {d!r} (entier positif attendu)")
    for k in range(2, math.isqrt(d) + 1):
        if d % (k * k) == 0:
            raise ParameterError(f"Paramètre de corps invalide : d = {d} n'est pas sans facteur carré")
    return d


def omega_is_half(d: int) -> bool:
    """True si -d ≡ 1 (mod 4), i.e. ω_d = (1+√-d)/2"""
    return d % 4 == 3


def omega_norm(d: int) -> int:
    """|ω_d|² : (1+d)/4 ou d"""
    return (1 + d) // 4 if omega_is_half(d) else d


def to_rational(value) -> Fraction:
    """Conversion stricte vers Fraction (int, Fraction ou chaîne "num/den")"""
    if isinstance(value, float):
        raise ParameterError(f"Flottant refusé sur le chemin exact : {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ParameterError(f"Rationnel invalide : {value!r}") from e


def rational_sqrt(r: Fraction) -> Optional[Fraction]:
    """Racine carrée rationnelle exacte, ou None"""
    if r < 0:
        return None
    n, m = r.numerator, r.denominator
    sn, sm = math.isqrt(n), math.isqrt(m)
    if sn * sn == n and sm * sm == m:
        return Fraction(sn, sm)
    return None


def format_rational(r: Fraction) -> str:
    """Sérialisation "num/den" (dénominateur toujours présent)"""
    return f"{r.numerator}/{r.denominator}"


def _radical_label(d: int) -> str:
    return "i" if d == 1 else f"√-{d}"


def _format_pair(first: str, coeff, unit: str, coeff_is_zero: bool, first_is_zero: bool) -> str:
    if coeff_is_zero:
        return first
    if coeff == 1:
        term = unit
    elif coeff == -1:
        term = f"-{unit}"
    else:
        term = f"{coeff}{unit}" if not isinstance(coeff, Fraction) or coeff.denominator == 1 else f"({coeff}){unit}"
    if first_is_zero:
        return term
    return f"{first}{term}" if term.startswith("-") else f"{first}+{term}"


@dataclass(frozen=True)
class FieldElem:
    """Élément x + y√-d de F = Q(√-d)"""

    d: int
    x: Fraction
    y: Fraction

    def __post_init__(self):
        check_field_parameter(self.d)
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def from_scalar(cls, d: int, value: Scalar) -> "FieldElem":
        return cls(d, to_rational(value), Fraction(0))

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.d != self.d:
                raise ParameterError(f"Corps différents : d = {self.d} et d = {other.d}")
            return other
        if isinstance(other, RingElem):
            if other.d != self.d:
                raise ParameterError(f"Corps différents : d = {self.d} et d = {other.d}")
            return other.to_field()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElem(self.d, Fraction(other), Fraction(0))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (FieldElem, RingElem, int, Fraction)):
            try:
                o = self._coerce(other)
            except ParameterError:
                return False
            return self.x == o.x and self.y == o.y
        return NotImplemented

    def __hash__(self) -> int:
        # Valeurs rationnelles : même hash que int / Fraction, cohérent avec __eq__
        if self.y == 0:
            return hash(self.x)
        return hash((self.d, self.x, self.y))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.d, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.d, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.d, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.d,
            self.x * o.x - self.d * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        norm = self.abs_sq
        if norm == 0:
            raise DomainError("Inversion de zéro dans F")
        return FieldElem(self.d, self.x / norm, -self.y / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElem(self.d, Fraction(1), Fraction(0))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "FieldElem":
        """Conjugaison complexe x - y√-d"""
        return FieldElem(self.d, self.x, -self.y)

    @property
    def abs_sq(self) -> Fraction:
        return self.x * self.x + self.d * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_complex(self) -> complex:
        return complex(float(self.x), float(self.y) * math.sqrt(self.d))

    def __str__(self) -> str:
        return _format_pair(str(self.x), self.y, _radical_label(self.d), self.y == 0, self.x == 0 and self.y != 0)


@dataclass(frozen=True)
class RingElem:
    """Élément a + b·ω_d de O_F, coordonnées entières dans la base intégrale {1, ω_d}"""

    d: int
    a: int
    b: int

    def __post_init__(self):
        check_field_parameter(self.d)
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise ParameterError(f"Coordonnées entières attendues : ({self.a!r}, {self.b!r})")

    @classmethod
    def from_field(cls, z: FieldElem) -> "RingElem":
        r = cls.try_from_field(z)
        if r is None:
            raise DomainError(f"{z} n'est pas un entier de Q(√-{z.d})")
        return r

    @classmethod
    def try_from_field(cls, z: FieldElem) -> Optional["RingElem"]:
        if omega_is_half(z.d):
            b = 2 * z.y
            a = z.x - z.y
        else:
            a, b = z.x, z.y
        if a.denominator != 1 or b.denominator != 1:
            return None
        return cls(z.d, int(a), int(b))

    def __hash__(self) -> int:
        return hash(self.to_field())

    def to_field(self) -> FieldElem:
        if omega_is_half(self.d):
            half = Fraction(self.b, 2)
            return FieldElem(self.d, self.a + half, half)
        return FieldElem(self.d, Fraction(self.a), Fraction(self.b))

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.d != self.d:
                raise ParameterError(f"Corps différents : d = {self.d} et d = {other.d}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElem(self.d, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElem(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return RingElem(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElem(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b, c, e = self.a, self.b, o.a, o.b
        if omega_is_half(self.d):
            # ω² = ω - (1+d)/4
            k = (1 + self.d) // 4
            return RingElem(self.d, a * c - k * b * e, a * e + b * c + b * e)
        # ω² = -d
        return RingElem(self.d, a * c - self.d * b * e, a * e + b * c)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElem":
        if exponent < 0:
            raise DomainError("Puissance négative hors de O_F")
        result = RingElem(self.d, 1, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "RingElem":
        """Conjugaison complexe (ω̄ = 1 - ω ou -ω)"""
        if omega_is_half(self.d):
            return RingElem(self.d, self.a + self.b, -self.b)
        return RingElem(self.d, self.a, -self.b)

    @property
    def abs_sq(self) -> int:
        if omega_is_half(self.d):
            return self.a * self.a + self.a * self.b + omega_norm(self.d) * self.b * self.b
        return self.a * self.a + self.d * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_divisible_by(self, n: int) -> bool:
        return self.a % n == 0 and self.b % n == 0

    def exact_div(self, n: int) -> "RingElem":
        if not self.is_divisible_by(n):
            raise DomainError(f"{self} n'est pas divisible par {n} dans O_F")
        return RingElem(self.d, self.a // n, self.b // n)

    def to_complex(self) -> complex:
        return self.to_field().to_complex()

    def pair(self) -> List[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        unit = "ω" if omega_is_half(self.d) else _radical_label(self.d)
        return _format_pair(str(self.a), self.b, unit, self.b == 0, self.a == 0 and self.b != 0)


def as_field(z: Union[FieldElem, RingElem]) -> FieldElem:
    return z.to_field() if isinstance(z, RingElem) else z


def canonical_key(z: RingElem):
    """Ordre canonique des éléments : (|z|², a, b)"""
    return (z.abs_sq, z.a, z.b)


def field_add(u: FieldElem, v: FieldElem) -> FieldElem:
    return as_field(u) + as_field(v)


def field_mul(u: FieldElem, v: FieldElem) -> FieldElem:
    return as_field(u) * as_field(v)


def field_neg(u: FieldElem) -> FieldElem:
    return -as_field(u)


def field_inv(u: FieldElem) -> FieldElem:
    return as_field(u).inverse()


def abs_sq(u: Union[FieldElem, RingElem]) -> Fraction:
    """|u|² exact"""
    return Fraction(u.abs_sq)


def is_square_in_F(z: Union[FieldElem, RingElem]) -> Optional[FieldElem]:
    """
    Racine carrée de z dans F, ou None

    On résout (u + v√-d)² = z, i.e. u² - d·v² = x et 2uv = y :
    - y = 0 : soit v = 0 et u² = x, soit u = 0 et v² = -x/d
    - y ≠ 0 : t = √(x² + d·y²) doit être rationnel, puis u² = (x + t)/2 et v = y/(2u)
    """
    z = as_field(z)
    d, x, y = z.d, z.x, z.y
    if y == 0:
        r = rational_sqrt(x)
        if r is not None:
            return FieldElem(d, r, Fraction(0))
        r = rational_sqrt(-x / d)
        if r is not None:
            return FieldElem(d, Fraction(0), r)
        return None
    t = rational_sqrt(x * x + d * y * y)
    if t is None:
        return None
    u = rational_sqrt((x + t) / 2)
    if u is None or u == 0:
        return None
    w = FieldElem(d, u, y / (2 * u))
    return w if w * w == z else None


def enumerate_disk(d: int, bound_sq) -> List[RingElem]:
    """Tous les z de O_F avec |z|² < bound_sq (strict), triés par (|z|², a, b)"""
    check_field_parameter(d)
    bound = to_rational(bound_sq)
    if bound <= 0:
        return []
    x_limit = math.isqrt(math.ceil(bound)) + 1
    points = []
    if omega_is_half(d):
        # |a + bω|² = (a + b/2)² + d·b²/4
        b_max = math.isqrt(math.ceil(4 * bound / d)) + 1
        for b in range(-b_max, b_max + 1):
            spread = x_limit + abs(b) // 2 + 1
            for a in range(-spread, spread + 1):
                z = RingElem(d, a, b)
                if z.abs_sq < bound:
                    points.append(z)
    else:
        b_max = math.isqrt(math.ceil(bound / d)) + 1
        for b in range(-b_max, b_max + 1):
            for a in range(-x_limit, x_limit + 1):
                z = RingElem(d, a, b)
                if z.abs_sq < bound:
                    points.append(z)
    points.sort(key=canonical_key)
    return points
