"""
Simulateur Monte Carlo MIMO 2×2

- Canal de Rayleigh quasi-statique : H à entrées CN(0, 1), connu du récepteur
- Y = H·X + σ·N sur deux instants, ‖X‖²_F moyen normalisé à 2 (une unité par instant)
- Décodage ML exhaustif sur le dictionnaire fini, taux d'erreur mot (CER)

Chaque essai t tire ses variables d'un flux Philox(clé = seed, compteur = t << 64) :
les résultats ne dépendent ni du découpage en blocs ni du nombre de workers.
Le bruit est tiré une fois par essai puis mis à l'échelle pour chaque SNR.
"""
import itertools
import logging
import math
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import SIM_CONFIG
from src.arithmetic import ConfigError, RingElem
from src.codes.stbc import CodeSpec, principal_sqrt
from src.utils import parallel_map

logger = logging.getLogger(__name__)

ALPHABETS = ("full", "rational")


@dataclass(frozen=True)
class SimConfig:
    spec: CodeSpec
    symbol_box: int = 1
    snr_grid_db: Tuple[float, ...] = SIM_CONFIG["default_snr_db"]
    trials: int = SIM_CONFIG["default_trials"]
    seed: int = SIM_CONFIG["default_seed"]
    balanced: bool = False
    alphabet: str = "rational"
    codebook_cap: int = SIM_CONFIG["codebook_cap"]
    chunk_elements: int = SIM_CONFIG["chunk_elements"]
    confidence_z: float = SIM_CONFIG["confidence_z"]
    threads: Optional[int] = None

    def __post_init__(self):
        if self.alphabet not in ALPHABETS:
            raise ConfigError(f"Alphabet inconnu : {self.alphabet} (attendu : {ALPHABETS})")
        if self.symbol_box < 0:
            raise ConfigError(f"symbol_box doit être ≥ 0 : {self.symbol_box}")
        if self.trials < 1:
            raise ConfigError(f"trials doit être ≥ 1 : {self.trials}")
        if not self.snr_grid_db:
            raise ConfigError("Grille SNR vide")
        object.__setattr__(self, "snr_grid_db", tuple(float(s) for s in self.snr_grid_db))

    @property
    def codebook_size(self) -> int:
        per_symbol = (2 * self.symbol_box + 1) ** (2 if self.alphabet == "full" else 1)
        return per_symbol ** 4


@dataclass(frozen=True)
class SimPoint:
    snr_db: float
    cer: float
    errors: int
    trials: int
    halfwidth: float


@dataclass(frozen=True)
class SimResult:
    points: Tuple[SimPoint, ...]
    codebook_size: int
    scale: float

    def at(self, snr_db: float) -> SimPoint:
        for point in self.points:
            if point.snr_db == snr_db:
                return point
        raise KeyError(snr_db)


def _symbol_values(config: SimConfig) -> np.ndarray:
    """Images complexes des symboles de O_F autorisés"""
    d, box = config.spec.d, config.symbol_box
    coords = range(-box, box + 1)
    if config.alphabet == "full":
        pairs = itertools.product(coords, coords)
    else:
        pairs = ((a, 0) for a in coords)
    return np.array([RingElem(d, a, b).to_complex() for a, b in pairs], dtype=complex)


def build_codebook(config: SimConfig) -> np.ndarray:
    """
    Dictionnaire (K, 2, 2), mots ordonnés comme itertools.product(x1, x2)

    Raises:
        ConfigError: K au-delà du plafond de décodage exhaustif
    """
    size = config.codebook_size
    if size > config.codebook_cap:
        raise ConfigError(
            f"Dictionnaire de {size} mots au-delà du plafond {config.codebook_cap} "
            f"(réduire symbol_box ou utiliser alphabet='rational')"
        )
    spec = config.spec
    alpha1, alpha2 = spec.poly.roots_complex()
    s = _symbol_values(config)
    # x = s_a + s_b·α pour chaque paire de symboles
    e1 = (s[:, None] + s[None, :] * alpha1).ravel()
    e2 = (s[:, None] + s[None, :] * alpha2).ravel()
    g = spec.gamma.to_complex()
    if config.balanced:
        root = principal_sqrt(spec.gamma)
        upper, lower = root * e1, root * e2
    else:
        upper, lower = e1, g * e2
    m = e1.size
    book = np.empty((m, m, 2, 2), dtype=complex)
    book[:, :, 0, 0] = e1[:, None]
    book[:, :, 1, 1] = e2[:, None]
    book[:, :, 0, 1] = upper[None, :]
    book[:, :, 1, 0] = lower[None, :]
    return book.reshape(m * m, 2, 2)


def normalization_scale(codebook: np.ndarray) -> float:
    """√(2/E), E = moyenne de ‖X‖²_F ; 1 pour un dictionnaire d'énergie nulle"""
    energy = float(np.mean(np.sum(np.abs(codebook) ** 2, axis=(1, 2))))
    if energy == 0.0:
        return 1.0
    return math.sqrt(2.0 / energy)


def noise_sigma(snr_db: float) -> float:
    if math.isinf(snr_db) and snr_db > 0:
        return 0.0
    return math.sqrt(10.0 ** (-snr_db / 10.0))


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed % 2 ** 64, counter=trial << 64))


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    parts = rng.standard_normal(shape + (2,))
    return (parts[..., 0] + 1j * parts[..., 1]) / math.sqrt(2.0)


def _draw(seed: int, start: int, stop: int, size: int):
    count = stop - start
    H = np.empty((count, 2, 2), dtype=complex)
    N = np.empty((count, 2, 2), dtype=complex)
    idx = np.empty(count, dtype=np.int64)
    for i, t in enumerate(range(start, stop)):
        rng = trial_stream(seed, t)
        H[i] = _complex_normal(rng, (2, 2))
        idx[i] = rng.integers(size)
        N[i] = _complex_normal(rng, (2, 2))
    return H, idx, N


def _simulate_chunk(job) -> List[int]:
    """Erreurs par SNR pour les essais [start, stop)"""
    codebook, seed, start, stop, sigmas = job
    H, idx, N = _draw(seed, start, stop, len(codebook))
    # HX pour tous les mots : (essais, K, 2, 2)
    received = np.einsum("tij,kjl->tkil", H, codebook)
    clean = received[np.arange(len(idx)), idx]
    errors = []
    for sigma in sigmas:
        Y = clean + sigma * N
        distances = np.sum(np.abs(Y[:, None, :, :] - received) ** 2, axis=(2, 3))
        decoded = np.argmin(distances, axis=1)
        errors.append(int(np.count_nonzero(decoded != idx)))
    return errors


def run(config: SimConfig) -> SimResult:
    """Courbe CER(SNR) déterministe pour (config, seed)"""
    codebook = build_codebook(config)
    scale = normalization_scale(codebook)
    codebook = codebook * scale
    size = len(codebook)
    per_chunk = max(1, config.chunk_elements // (size * 4))
    sigmas = [noise_sigma(s) for s in config.snr_grid_db]
    jobs = [
        (codebook, config.seed, start, min(start + per_chunk, config.trials), sigmas)
        for start in range(0, config.trials, per_chunk)
    ]
    counts = parallel_map(_simulate_chunk, jobs, config.threads)
    totals = np.sum(np.array(counts, dtype=np.int64), axis=0)

    points = []
    for snr_db, errors in zip(config.snr_grid_db, totals.tolist()):
        cer = errors / config.trials
        halfwidth = config.confidence_z * math.sqrt(cer * (1.0 - cer) / config.trials)
        points.append(SimPoint(snr_db, cer, int(errors), config.trials, halfwidth))
    logger.info("Simulation %s : %d mots, %d essais", config.spec, size, config.trials)
    return SimResult(tuple(points), size, scale)


@dataclass(frozen=True)
class RankEntry:
    spec: CodeSpec
    result: SimResult
    cer: float
    halfwidth: float


@dataclass(frozen=True)
class Ranking:
    snr_db: float
    entries: Tuple[RankEntry, ...]
    indistinguishable: Tuple[Tuple[int, int], ...]  # paires d'indices dans entries

    @property
    def conclusive(self) -> bool:
        return not self.indistinguishable


def rank_codes(specs: Sequence[CodeSpec], shared: SimConfig) -> Ranking:
    """
    Classe les codes par CER au SNR le plus élevé de la grille

    Deux codes dont les intervalles de confiance se recouvrent sont signalés indiscernables.
    """
    if not specs:
        raise ConfigError("Aucun code à classer")
    configs = [replace(shared, spec=spec) for spec in specs]
    if len({c.codebook_size for c in configs}) != 1:
        raise ConfigError("Les codes classés doivent partager la taille d'alphabet")
    top = max(shared.snr_grid_db)
    entries = []
    for config in configs:
        result = run(config)
        point = result.at(top)
        entries.append(RankEntry(config.spec, result, point.cer, point.halfwidth))
    entries.sort(key=lambda e: e.cer)
    flags = []
    for i, j in itertools.combinations(range(len(entries)), 2):
        a, b = entries[i], entries[j]
        if abs(a.cer - b.cer) <= a.halfwidth + b.halfwidth:
            flags.append((i, j))
    return Ranking(top, tuple(entries), tuple(flags))
