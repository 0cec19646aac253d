"""
Package d'arithmétique exacte

Simplifie les imports : from src.arithmetic import RingElem, QuadPoly, rel_norm
au lieu de from src.arithmetic.exact import RingElem
"""

from .errors import (
    ConfigError,
    DomainError,
    GammaIsNormError,
    ParameterError,
    ReduciblePolynomialError,
    StbcError,
)
from .exact import (
    FieldElem,
    Rational,
    RingElem,
    abs_sq,
    as_field,
    canonical_key,
    check_field_parameter,
    enumerate_disk,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    format_rational,
    is_square_in_F,
    omega_is_half,
    rational_sqrt,
    to_rational,
)
from .quadratic import (
    ExtElem,
    QuadPoly,
    conjugate,
    discriminant,
    embed_complex,
    is_irreducible,
    rel_norm,
    require_irreducible,
    translate,
)

__all__ = [
    # Erreurs
    'StbcError',
    'ParameterError',
    'DomainError',
    'ReduciblePolynomialError',
    'GammaIsNormError',
    'ConfigError',

    # Corps F = Q(√-d) et anneau O_F
    'Rational',
    'FieldElem',
    'RingElem',
    'check_field_parameter',
    'omega_is_half',
    'to_rational',
    'rational_sqrt',
    'format_rational',
    'as_field',
    'canonical_key',
    'field_add',
    'field_mul',
    'field_neg',
    'field_inv',
    'abs_sq',
    'is_square_in_F',
    'enumerate_disk',

    # Extension K = F(α1)
    'QuadPoly',
    'ExtElem',
    'discriminant',
    'is_irreducible',
    'require_irreducible',
    'translate',
    'rel_norm',
    'conjugate',
    'embed_complex',
]
