"""
Package de simulation Monte Carlo (canal de Rayleigh, décodage ML exhaustif)
"""

from .channel import (
    Ranking,
    RankEntry,
    SimConfig,
    SimPoint,
    SimResult,
    build_codebook,
    noise_sigma,
    normalization_scale,
    rank_codes,
    run,
    trial_stream,
)

__all__ = [
    'SimConfig',
    'SimPoint',
    'SimResult',
    'RankEntry',
    'Ranking',
    'build_codebook',
    'normalization_scale',
    'noise_sigma',
    'trial_stream',
    'run',
    'rank_codes',
]
