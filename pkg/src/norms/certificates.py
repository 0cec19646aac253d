"""
Certificats de norme relative pour K = F(α1) sur F

Deux chemins certifiés :
- IsNorm : témoin explicite x avec N_{K/F}(x) = γ (vérifié exactement)
- NotNorm : obstruction par congruence pour γ = -1
    * mod 3 : dF ≡ 1 (mod 3) et K = F(√-3)
    * mod 8 : dF ≡ 1 (mod 8) et K = F(i)
  étendue à γ = -N(w) quand -γ possède un témoin w
Tout le reste est Unknown : l'absence de témoin ne prouve rien.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from config.settings import NORM_CONFIG
from src.arithmetic import (
    DomainError,
    ExtElem,
    FieldElem,
    ParameterError,
    QuadPoly,
    RingElem,
    as_field,
    check_field_parameter,
    enumerate_disk,
    is_square_in_F,
    rel_norm,
    require_irreducible,
    to_rational,
)

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    IS_NORM = "IsNorm"
    NOT_NORM = "NotNorm"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Obstruction:
    """Hypothèse de congruence vérifiée pour les entrées"""

    prime: int  # 2 ou 3
    congruence: str
    reduction: Optional[str] = None  # γ = -N(w) quand on se ramène à γ = -1


@dataclass(frozen=True)
class NormStatus:
    verdict: Verdict
    witness: Optional[ExtElem] = None
    obstruction: Optional[Obstruction] = None
    note: Optional[str] = None

    def __post_init__(self):
        if (self.verdict is Verdict.IS_NORM) != (self.witness is not None):
            raise DomainError("IsNorm exige un témoin, et seulement IsNorm")
        if (self.verdict is Verdict.NOT_NORM) != (self.obstruction is not None):
            raise DomainError("NotNorm exige une obstruction, et seulement NotNorm")

    def with_note(self, note: str) -> "NormStatus":
        return NormStatus(self.verdict, self.witness, self.obstruction, note)


@dataclass(frozen=True)
class NormBudget:
    """Effort de recherche de témoins : x = (u + v·α1)/m, |u|², |v|² < radius_sq·m²"""

    radius_sq: Fraction = field(default_factory=lambda: Fraction(NORM_CONFIG["radius_sq"]))
    denominators: Tuple[int, ...] = NORM_CONFIG["denominators"]

    def __post_init__(self):
        object.__setattr__(self, "radius_sq", to_rational(self.radius_sq))
        if self.radius_sq <= 0:
            raise ParameterError(f"radius_sq doit être > 0 : {self.radius_sq}")
        dens = tuple(sorted(set(int(m) for m in self.denominators)))
        if not dens or dens[0] < 1:
            raise ParameterError(f"Dénominateurs invalides : {self.denominators}")
        object.__setattr__(self, "denominators", dens)


def _field_of(dF: int) -> Optional[int]:
    """d tel que F = Q(√dF) = Q(√-d), ou None si dF ne décrit pas un corps imaginaire"""
    d = -dF
    try:
        return check_field_parameter(d)
    except ParameterError:
        return None


def _is_twisted_square(ext_disc: RingElem, d: int, twist: int) -> bool:
    """ext_disc = twist · (carré non nul de F)"""
    if ext_disc.d != d or ext_disc.is_zero():
        return False
    return is_square_in_F(as_field(ext_disc) / twist) is not None


def obstruction_minus_one_mod3(dF: int, ext_disc: RingElem) -> bool:
    """-1 n'est pas une norme de F(√-3)/F quand dF ≡ 1 (mod 3)"""
    d = _field_of(dF)
    if d is None or dF % 3 != 1:
        return False
    return _is_twisted_square(ext_disc, d, -3)


def obstruction_minus_one_mod8(dF: int, ext_disc: RingElem) -> bool:
    """-1 n'est pas une norme de F(i)/F quand dF ≡ 1 (mod 8)"""
    d = _field_of(dF)
    if d is None or dF % 8 != 1:
        return False
    return _is_twisted_square(ext_disc, d, -1)


def find_obstruction(poly: QuadPoly) -> Optional[Obstruction]:
    """Obstruction applicable à γ = -1 pour l'extension définie par poly"""
    dF = -poly.d
    disc = poly.disc
    if obstruction_minus_one_mod3(dF, disc):
        return Obstruction(3, f"dF = {dF} ≡ 1 (mod 3), K = F(√-3)")
    if obstruction_minus_one_mod8(dF, disc):
        return Obstruction(2, f"dF = {dF} ≡ 1 (mod 8), K = F(√-1)")
    return None


def _ring_key(z: RingElem):
    """Ordre canonique miroir (|z|², -a, -b) : à module égal, coordonnées positives d'abord (γ = 1 → 1, γ = q → α1)"""
    return (z.abs_sq, -z.a, -z.b)


def witness_search(
    poly: QuadPoly,
    gamma: Union[FieldElem, RingElem],
    radius_sq=None,
    denominators=None,
) -> Optional[ExtElem]:
    """
    Cherche x = (u + v·α1)/m avec N(x) = γ

    Pour v fixé, N(u + v·α1) = γ·m² est quadratique en u :
    u = (p·v ± s)/2 avec s² = disc·v² + 4γ·m², donc un test de carré par v.

    Args:
        poly: Polynôme définissant K
        gamma: Valeur cible dans F
        radius_sq: |u|², |v|² < radius_sq·m² (défaut NORM_CONFIG)
        denominators: Dénominateurs m parcourus dans l'ordre croissant

    Returns:
        Premier témoin dans l'ordre (m, v, u) canonique, ou None
    """
    budget = NormBudget(
        radius_sq if radius_sq is not None else NORM_CONFIG["radius_sq"],
        tuple(denominators) if denominators is not None else NORM_CONFIG["denominators"],
    )
    d = poly.d
    gamma = as_field(gamma)
    if gamma.d != d:
        raise ParameterError(f"γ = {gamma} hors de Q(√-{d})")
    p = poly.p.to_field()
    disc = poly.disc.to_field()

    for m in budget.denominators:
        bound = budget.radius_sq * m * m
        shift = 4 * gamma * (m * m)
        for v in sorted(enumerate_disk(d, bound), key=_ring_key):
            vf = v.to_field()
            s = is_square_in_F(disc * vf * vf + shift)
            if s is None:
                continue
            roots = set()
            for sign in (1, -1):
                u = RingElem.try_from_field((p * vf + s * sign) / 2)
                if u is not None and u.abs_sq < bound:
                    roots.add(u)
            for u in sorted(roots, key=_ring_key):
                x = ExtElem(poly, u.to_field() / m, vf / m)
                if rel_norm(x) == gamma:
                    logger.debug("Témoin trouvé pour γ = %s sur %s : %s", gamma, poly, x)
                    return x
    return None


def decide_norm(
    poly: QuadPoly,
    gamma: Union[FieldElem, RingElem],
    effort: Optional[NormBudget] = None,
) -> NormStatus:
    """
    Statut de γ vis-à-vis de N_{K/F}

    Raises:
        DomainError: γ = 0
        ReduciblePolynomialError: poly réductible sur F
    """
    budget = effort or NormBudget()
    gamma = as_field(gamma)
    if gamma.is_zero():
        raise DomainError("γ doit être non nul")
    require_irreducible(poly)

    witness = witness_search(poly, gamma, budget.radius_sq, budget.denominators)
    if witness is not None:
        return NormStatus(Verdict.IS_NORM, witness=witness)

    obstruction = find_obstruction(poly)
    if obstruction is not None:
        if gamma == -1:
            return NormStatus(Verdict.NOT_NORM, obstruction=obstruction)
        # γ = -N(w) : si γ = N(y) alors -1 = N(y/w)
        w = witness_search(poly, -gamma, budget.radius_sq, budget.denominators)
        if w is not None:
            reduced = Obstruction(obstruction.prime, obstruction.congruence, f"γ = -N({w})")
            return NormStatus(Verdict.NOT_NORM, obstruction=reduced)

    logger.info("⚠️ Statut inconnu pour γ = %s sur %s", gamma, poly)
    return NormStatus(Verdict.UNKNOWN)
