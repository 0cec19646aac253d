"""
Famille de codes C(F, α1, α2, γ) :

    X = [[a + b·α1,        c + d·α1],
         [γ(c + d·α2),     a + b·α2]]

avec a, b, c, d ∈ O_F. det X = N(a + b·α1) - γ·N(c + d·α1) ∈ O_F, donc |det X| ≥ 1 dès que
γ n'est pas une norme relative.

c_det² = |γ|²·|disc|²·|det M|⁴ et ρ = 1/c_det² sont exacts (Fraction).
"""
import cmath
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from src.arithmetic import (
    DomainError,
    ExtElem,
    FieldElem,
    GammaIsNormError,
    ParameterError,
    QuadPoly,
    RingElem,
    embed_complex,
    rel_norm,
)
from src.lattice import DensityReport, base_gen_matrix, code_lattice_layers, density
from src.norms import NormBudget, NormStatus, Verdict, decide_norm

logger = logging.getLogger(__name__)

Symbol = Union[int, RingElem, Tuple[int, int]]


class Comparison(str, Enum):
    BETTER = "better"
    EQUAL = "equal"
    WORSE = "worse"


@dataclass(frozen=True)
class CodeSpec:
    d: int
    poly: QuadPoly
    gamma: RingElem
    c_det_sq: Fraction
    rho: Fraction
    norm_status: NormStatus
    label: Optional[str] = None

    @property
    def verified(self) -> bool:
        """True si γ est certifié non-norme (sinon le code est signalé « non vérifié »)"""
        return self.norm_status.verdict is Verdict.NOT_NORM

    @property
    def rho_float(self) -> float:
        return float(self.rho)

    def density(self) -> DensityReport:
        return density(Fraction(1), self.c_det_sq, 2)

    def layers(self):
        return code_lattice_layers(self.poly, self.gamma)

    def __str__(self) -> str:
        return self.label or f"C(Q(√-{self.d}), {self.poly}, γ = {self.gamma})"


@dataclass(frozen=True)
class Codeword:
    spec: CodeSpec
    symbols: Tuple[RingElem, RingElem, RingElem, RingElem]

    @property
    def x1(self) -> ExtElem:
        a, b, _, _ = self.symbols
        return ExtElem(self.spec.poly, a, b)

    @property
    def x2(self) -> ExtElem:
        _, _, c, d = self.symbols
        return ExtElem(self.spec.poly, c, d)

    def matrix(self) -> np.ndarray:
        g = self.spec.gamma.to_complex()
        x1, x2 = self.x1, self.x2
        return np.array([
            [embed_complex(x1, 1), embed_complex(x2, 1)],
            [g * embed_complex(x2, 2), embed_complex(x1, 2)],
        ], dtype=complex)


def reduced_c_det_sq(spec: CodeSpec) -> Fraction:
    """|γ|²·|disc|², la quantité comparée dans les preuves une fois |det M|⁴ retiré"""
    return Fraction(spec.gamma.abs_sq * spec.poly.disc.abs_sq)


def c_det_sq_of(poly: QuadPoly, gamma: RingElem) -> Fraction:
    _, det_m_sq = base_gen_matrix(poly.d)
    return Fraction(gamma.abs_sq * poly.disc.abs_sq) * det_m_sq ** 2


def make_code(
    d: int,
    poly: QuadPoly,
    gamma: RingElem,
    effort: Optional[NormBudget] = None,
    note: Optional[str] = None,
    label: Optional[str] = None,
) -> CodeSpec:
    """
    Construit le code et son certificat de norme

    Args:
        note: Annotation attachée au statut quand il reste Unknown (ex. « cited »)

    Raises:
        ReduciblePolynomialError, DomainError (γ = 0), GammaIsNormError
    """
    if poly.d != d or gamma.d != d:
        raise ParameterError(f"Polynôme ou γ hors de Q(√-{d})")
    if gamma.is_zero():
        raise DomainError("γ doit être non nul")
    status = decide_norm(poly, gamma, effort)
    if status.verdict is Verdict.IS_NORM:
        raise GammaIsNormError(gamma, status.witness)
    if status.verdict is Verdict.UNKNOWN:
        if note:
            status = status.with_note(note)
        logger.info("⚠️ Code non vérifié : γ = %s sur %s", gamma, poly)
    c_det_sq = c_det_sq_of(poly, gamma)
    return CodeSpec(d, poly, gamma, c_det_sq, 1 / c_det_sq, status, label)


def _as_symbol(d: int, value: Symbol) -> RingElem:
    if isinstance(value, RingElem):
        if value.d != d:
            raise ParameterError(f"Symbole {value} hors de Q(√-{d})")
        return value
    if isinstance(value, int):
        return RingElem(d, value, 0)
    a, b = value
    return RingElem(d, int(a), int(b))


def encode(spec: CodeSpec, symbols: Sequence[Symbol]) -> Codeword:
    """Mot de code symbolique ; Codeword.matrix() donne la matrice 2×2 complexe"""
    if len(symbols) != 4:
        raise ParameterError(f"4 symboles attendus, reçu {len(symbols)}")
    return Codeword(spec, tuple(_as_symbol(spec.d, s) for s in symbols))


def det_codeword(w: Codeword) -> FieldElem:
    return rel_norm(w.x1) - w.spec.gamma * rel_norm(w.x2)


def _ring_norm(poly: QuadPoly, a: RingElem, b: RingElem) -> RingElem:
    """N(a + b·α1) en arithmétique entière"""
    return a * a - poly.p * a * b + poly.q * b * b


def detmin_enumerate(spec: CodeSpec, box: int = 1) -> Fraction:
    """
    min |det X|² sur les mots non nuls à coordonnées dans [-box, box]⁸

    N(x) = 0 seulement pour x = 0, donc seules les valeurs distinctes de N(x1) et N(x2)
    comptent, la paire (0, 0) étant exclue.
    """
    if box < 1:
        raise ParameterError(f"box doit être ≥ 1 : {box}")
    d, poly = spec.d, spec.poly
    coords = range(-box, box + 1)
    ring = [RingElem(d, a, b) for a, b in itertools.product(coords, coords)]
    norms = {_ring_norm(poly, a, b) for a, b in itertools.product(ring, ring)}
    zero = RingElem(d, 0, 0)
    scaled = {spec.gamma * n for n in norms}
    best = None
    for n1 in norms:
        for g2 in scaled:
            if n1 == zero and g2 == zero:
                continue
            value = (n1 - g2).abs_sq
            if best is None or value < best:
                best = value
    return Fraction(best)


def principal_sqrt(gamma: RingElem) -> complex:
    g = gamma.to_complex()
    return cmath.sqrt(complex(g.real, g.imag + 0.0))


def balanced_encode(spec: CodeSpec, symbols: Sequence[Symbol]) -> np.ndarray:
    """Variante √γ sur les deux anti-diagonales : même déterminant, énergie équilibrée"""
    w = encode(spec, symbols)
    s = principal_sqrt(spec.gamma)
    x1, x2 = w.x1, w.x2
    return np.array([
        [embed_complex(x1, 1), s * embed_complex(x2, 1)],
        [s * embed_complex(x2, 2), embed_complex(x1, 2)],
    ], dtype=complex)


def compare(c1: CodeSpec, c2: CodeSpec) -> Comparison:
    """Critère du déterminant : à det_min égal, le plus petit c_det l'emporte"""
    if c1.c_det_sq < c2.c_det_sq:
        return Comparison.BETTER
    if c1.c_det_sq > c2.c_det_sq:
        return Comparison.WORSE
    return Comparison.EQUAL
