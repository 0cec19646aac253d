"""
Package des réseaux : matrices génératrices, déterminants, densité normalisée
"""

from .generators import (
    ComplexGen,
    DensityReport,
    RealGen,
    assemble_composed,
    base_gen_matrix,
    code_lattice_layers,
    composed_abs_det,
    density,
    realify,
)

__all__ = [
    'RealGen',
    'ComplexGen',
    'DensityReport',
    'realify',
    'base_gen_matrix',
    'composed_abs_det',
    'assemble_composed',
    'code_lattice_layers',
    'density',
]
