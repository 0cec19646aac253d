from pydantic import BaseModel, Field
from typing import List, Optional


class ObstructionRecord(BaseModel):
    """Hypothèse de congruence d'un certificat NotNorm"""
    prime: int = Field(description="Premier de l'argument local (2 ou 3)")
    congruence: str
    reduction: Optional[str] = Field(default=None, description="γ = -N(w) quand on se ramène à γ = -1")


class NormStatusRecord(BaseModel):
    """Certificat de norme : {verdict, witness_coords?, obstruction?}"""
    verdict: str
    witness_coords: Optional[List[List[str]]] = Field(
        default=None, description="[[x, y] de a, [x, y] de b] pour x = a + b·α1, a = x + y√-d"
    )
    obstruction: Optional[ObstructionRecord] = None
    note: Optional[str] = None


class CodeSpecRecord(BaseModel):
    """Code C(F, α1, α2, γ) avec c_det² et ρ exacts"""
    d: int
    p: List[int]
    q: List[int]
    gamma: List[int]
    polynomial: str
    label: Optional[str] = None
    c_det_sq: str = Field(description="Rationnel num/den")
    rho: str = Field(description="Rationnel num/den")
    rho_float: float
    verified: bool
    norm_status: NormStatusRecord


class SurvivorRecord(BaseModel):
    """Paire (polynôme, γ) sous la borne et son statut"""
    polynomial: str
    p: List[int]
    q: List[int]
    gamma: List[int]
    norm_status: NormStatusRecord


class ReducibleRecord(BaseModel):
    polynomial: str
    sqrt_disc: List[str]


class SearchReportRecord(BaseModel):
    """Rapport d'optimalité pour un corps"""
    d: int
    target: str
    bound_sq: str
    include_boundary: bool
    certified: bool
    candidates: List[str]
    survivors: List[SurvivorRecord]
    unresolved: List[SurvivorRecord]
    reducible: List[ReducibleRecord]
    best: Optional[CodeSpecRecord] = None


class GlobalReportRecord(BaseModel):
    threshold_sq: str
    fields: List[int]
    cited: List[int]
    certified: bool
    optimum: CodeSpecRecord
    searches: List[SearchReportRecord]


class TableRowRecord(BaseModel):
    """Ligne de la table des densités"""
    d: int
    field: str
    extension: str
    polynomial: str
    algebra: str
    rho: str
    rho_float: float
    printed_rho: float
    flagged: bool
    cited: bool
    code: CodeSpecRecord


class ReadingRecord(BaseModel):
    label: str
    polynomial: str
    gamma: str
    rho: Optional[str] = None
    rho_float: float
    matches_printed: bool


class TableReportRecord(BaseModel):
    """Table et lectures de la ligne Q(i) dans un seul document"""

    rows: List[TableRowRecord]
    readings: List[ReadingRecord]


class CodewordRecord(BaseModel):
    """Matrice 2×2 complexe : [[re, im], ...] par coefficient"""
    symbols: List[List[int]]
    balanced: bool
    det: List[str] = Field(description="det X exact, coordonnées x, y dans F")
    matrix: List[List[List[float]]]


class SimPointRecord(BaseModel):
    snr_db: float
    cer: float
    halfwidth: float
    trials: int
    errors: int
