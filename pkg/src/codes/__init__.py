"""
Package des codes espace-temps : famille C(F, α1, α2, γ), catalogue et recherche certifiée

from src.codes import make_code, optimal_search, reproduce_table
"""

from .catalog import (
    CITED_NOTE,
    FIELD_THRESHOLD,
    GOLDEN_CODE,
    PROOF_TARGETS,
    REFERENCE_CODES,
    TABLE_ROWS,
    CatalogEntry,
)
from .search import (
    Candidate,
    ReducibleCandidate,
    GlobalReport,
    Reading,
    SearchReport,
    Survivor,
    TableRow,
    candidate_fields,
    d1_readings,
    enumerate_candidates,
    global_optimality,
    golden_code,
    optimal_search,
    p_bound_sq,
    reduce_p,
    reduced_p_values,
    reproduce_table,
    scan_candidates,
)
from .stbc import (
    CodeSpec,
    Codeword,
    Comparison,
    balanced_encode,
    c_det_sq_of,
    compare,
    det_codeword,
    detmin_enumerate,
    encode,
    make_code,
    reduced_c_det_sq,
)

__all__ = [
    # Famille de codes
    'CodeSpec',
    'Codeword',
    'Comparison',
    'make_code',
    'encode',
    'det_codeword',
    'detmin_enumerate',
    'balanced_encode',
    'compare',
    'reduced_c_det_sq',
    'c_det_sq_of',

    # Catalogue
    'CatalogEntry',
    'TABLE_ROWS',
    'GOLDEN_CODE',
    'REFERENCE_CODES',
    'PROOF_TARGETS',
    'FIELD_THRESHOLD',
    'CITED_NOTE',

    # Recherche
    'Candidate',
    'ReducibleCandidate',
    'Survivor',
    'SearchReport',
    'GlobalReport',
    'TableRow',
    'Reading',
    'p_bound_sq',
    'reduce_p',
    'reduced_p_values',
    'scan_candidates',
    'enumerate_candidates',
    'optimal_search',
    'candidate_fields',
    'global_optimality',
    'reproduce_table',
    'golden_code',
    'd1_readings',
]
