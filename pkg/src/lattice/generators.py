"""
Matrices génératrices de réseaux réels et complexes

- realify : G complexe n×n → 𝒢 réelle 2n×2n, blocs [[Re g, -Im g], [Im g, Re g]]
- base_gen_matrix : M du réseau O_F ⊂ C ≅ R², avec |det M|² exact
- composed_abs_det : ∏ |det G_l|² · |det M_l|ⁿ
- density : ρ = det_min^{2n} / |det 𝒢|, δ = ρ^{1/2n}

Les déterminants sont en double précision ; les valeurs exactes (|det M|², |γ|², |disc|²)
sont transportées à côté sous forme de Fraction et priment dans les rapports.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.arithmetic import (
    DomainError,
    ParameterError,
    QuadPoly,
    RingElem,
    check_field_parameter,
    omega_is_half,
)

RANK_TOLERANCE = 1e-12
_ROTATION = np.array([[0.0, -1.0], [1.0, 0.0]])


def _check_full_rank(entries: np.ndarray, label: str) -> None:
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ParameterError(f"{label} : matrice carrée attendue, reçu {entries.shape}")
    scale = float(np.prod(np.linalg.norm(entries, axis=1))) or 1.0
    if abs(np.linalg.det(entries)) <= RANK_TOLERANCE * scale:
        raise DomainError(f"{label} : matrice de rang incomplet")


@dataclass(frozen=True, eq=False)
class RealGen:
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        _check_full_rank(entries, "RealGen")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def abs_det(self) -> float:
        return abs(float(np.linalg.det(self.entries)))


@dataclass(frozen=True, eq=False)
class ComplexGen:
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        _check_full_rank(entries, "ComplexGen")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def abs_det_sq(self) -> float:
        return abs(complex(np.linalg.det(self.entries))) ** 2


@dataclass(frozen=True)
class DensityReport:
    n: int
    det_min: Fraction
    gram_abs_det: Union[Fraction, float]
    rho: Union[Fraction, float]
    delta: float

    def __post_init__(self):
        expected = float(self.rho) ** (1.0 / (2 * self.n))
        if not math.isclose(self.delta, expected, rel_tol=1e-12):
            raise DomainError(f"δ = {self.delta} incohérent avec ρ = {self.rho}")


def realify(G: ComplexGen) -> RealGen:
    """𝒢 entrelacée : chaque coefficient g devient [[Re g, -Im g], [Im g, Re g]]"""
    return RealGen(np.kron(G.entries.real, np.eye(2)) + np.kron(G.entries.imag, _ROTATION))


def base_gen_matrix(d: int) -> Tuple[RealGen, Fraction]:
    """
    M de O_F et |det M|² exact

    Returns:
        (M, d/4) si -d ≡ 1 (mod 4), (M, d) sinon
    """
    check_field_parameter(d)
    root = math.sqrt(d)
    if omega_is_half(d):
        return RealGen([[1.0, 0.5], [0.0, root / 2]]), Fraction(d, 4)
    return RealGen([[1.0, 0.0], [0.0, root]]), Fraction(d)


def composed_abs_det(layers: Sequence[Tuple[ComplexGen, RealGen]]) -> float:
    """∏ |det G_l|² · |det M_l|ⁿ"""
    if not layers:
        raise ParameterError("Au moins une couche attendue")
    n = layers[0][0].n
    if any(G.n != n for G, _ in layers):
        raise ParameterError("Toutes les couches doivent partager la dimension n")
    result = 1.0
    for G, M in layers:
        result *= G.abs_det_sq() * M.abs_det() ** n
    return result


def _block_diag(blocks: List[np.ndarray]) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    out = np.zeros((size, size), dtype=np.result_type(*blocks))
    offset = 0
    for b in blocks:
        k = b.shape[0]
        out[offset:offset + k, offset:offset + k] = b
        offset += k
    return out


def assemble_composed(layers: Sequence[Tuple[ComplexGen, RealGen]]) -> RealGen:
    """Génératrice réelle complète : realify(diag(G_l)) · diag(I_n ⊗ M_l)"""
    n = layers[0][0].n
    complex_part = ComplexGen(_block_diag([G.entries for G, _ in layers]))
    real_part = _block_diag([np.kron(np.eye(n), M.entries) for _, M in layers])
    return RealGen(realify(complex_part).entries @ real_part)


def code_lattice_layers(poly: QuadPoly, gamma: RingElem) -> List[Tuple[ComplexGen, RealGen]]:
    """Les deux couches (G1, M), (G2, M) du code C(F, α1, α2, γ)"""
    alpha1, alpha2 = poly.roots_complex()
    g = gamma.to_complex()
    M, _ = base_gen_matrix(poly.d)
    G1 = ComplexGen([[1, alpha1], [1, alpha2]])
    G2 = ComplexGen([[1, alpha1], [g, g * alpha2]])
    return [(G1, M), (G2, M)]


def density(det_min, gram_abs_det, n: int) -> DensityReport:
    """ρ = det_min^{2n}/gram, exact si les deux entrées sont rationnelles"""
    if isinstance(det_min, float) or isinstance(gram_abs_det, float):
        det_min_value, gram = float(det_min), float(gram_abs_det)
    else:
        det_min_value, gram = Fraction(det_min), Fraction(gram_abs_det)
    if det_min_value <= 0 or gram <= 0:
        raise DomainError(f"det_min et |det 𝒢| doivent être > 0 : {det_min}, {gram_abs_det}")
    rho = det_min_value ** (2 * n) / gram
    delta = float(rho) ** (1.0 / (2 * n))
    return DensityReport(n, Fraction(det_min_value), gram, rho, delta)
