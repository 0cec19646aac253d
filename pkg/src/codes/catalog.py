"""
Codes de référence : table des densités publiées, Golden code, optima par corps

Coordonnées dans la base intégrale {1, ω_d} ; pour d = 3, ω = ζ6 = (1+√-3)/2.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from src.arithmetic import QuadPoly, RingElem

Pair = Tuple[int, int]

# Statut de non-norme attribué aux travaux antérieurs (pas de certificat local)
CITED_NOTE = "cited"


@dataclass(frozen=True)
class CatalogEntry:
    d: int
    p: Pair
    q: Pair
    gamma: Pair
    printed_rho: float
    cited: bool = False
    label: str = ""

    @property
    def poly(self) -> QuadPoly:
        return QuadPoly.from_pairs(self.d, self.p, self.q)

    @property
    def gamma_elem(self) -> RingElem:
        return RingElem(self.d, *self.gamma)

    @property
    def field(self) -> str:
        return "Q(i)" if self.d == 1 else f"Q(√-{self.d})"

    @property
    def extension(self) -> str:
        return f"{self.field}(√({self.poly.disc}))"

    @property
    def algebra(self) -> str:
        return f"({self.poly.disc}, {self.gamma_elem})"


TABLE_ROWS: Tuple[CatalogEntry, ...] = (
    # Ligne imprimée x² - i·x + 1, γ = 1 + i : la formule donne 1/50, pas 0.0556
    CatalogEntry(1, (0, -1), (1, 0), (1, 1), 0.0556, cited=True, label="table-d1"),
    CatalogEntry(2, (-1, 0), (1, 0), (-1, 0), 0.0278, label="table-d2"),
    # x² - (1 + ζ6)x + √-3, γ = ζ6
    CatalogEntry(3, (-1, -1), (-1, 2), (0, 1), 0.0845, cited=True, label="table-d3"),
    CatalogEntry(7, (0, 0), (1, 0), (-1, 0), 0.0204, label="table-d7"),
    CatalogEntry(11, (-1, 0), (1, 0), (-1, 0), 0.0147, label="table-d11"),
)

GOLDEN_CODE = CatalogEntry(1, (-1, 0), (-1, 0), (0, 1), 0.04, cited=True, label="golden")

# Optima par corps et cibles |γ|·|disc| des preuves d'énumération
REFERENCE_CODES: Dict[int, CatalogEntry] = {
    2: TABLE_ROWS[1],
    7: TABLE_ROWS[3],
    11: TABLE_ROWS[4],
}
PROOF_TARGETS: Dict[int, Fraction] = {
    2: Fraction(3),
    7: Fraction(4),
    11: Fraction(3),
}

# Seuil |det M|² < 3.44 de la restriction des corps
FIELD_THRESHOLD = Fraction("3.44")

