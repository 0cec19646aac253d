"""
Tests du simulateur Monte Carlo
"""
import itertools
import math
import sys
from dataclasses import replace
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

from src.arithmetic import ConfigError, QuadPoly, RingElem
from src.codes import TABLE_ROWS, CodeSpec, encode, golden_code, make_code
from src.simulation import (
    SimConfig,
    build_codebook,
    noise_sigma,
    normalization_scale,
    rank_codes,
    run,
    trial_stream,
)


@lru_cache(maxsize=None)
def code_d2() -> CodeSpec:
    return make_code(2, QuadPoly.from_pairs(2, (-1, 0), (1, 0)), RingElem(2, -1, 0))


@lru_cache(maxsize=None)
def code_d3() -> CodeSpec:
    entry = TABLE_ROWS[2]
    return make_code(entry.d, entry.poly, entry.gamma_elem, note="cited", label=entry.label)


def small_config(**overrides) -> SimConfig:
    base = SimConfig(spec=code_d2(), snr_grid_db=(0.0, 6.0, 12.0), trials=300, seed=11)
    return replace(base, **overrides)


class TestConfig:
    """Validation de SimConfig"""

    def test_codebook_sizes(self):
        assert small_config().codebook_size == 81
        assert small_config(alphabet="full").codebook_size == 6561
        assert small_config(symbol_box=0).codebook_size == 1

    def test_over_cap(self):
        with pytest.raises(ConfigError):
            build_codebook(small_config(alphabet="full"))

    @pytest.mark.parametrize("overrides", [{"alphabet": "bogus"}, {"trials": 0}, {"symbol_box": -1},
                                           {"snr_grid_db": ()}])
    def test_invalid(self, overrides):
        with pytest.raises(ConfigError):
            small_config(**overrides)


class TestCodebook:
    """Dictionnaire et normalisation d'énergie"""

    def test_matches_encode(self):
        config = small_config()
        book = build_codebook(config)
        words = list(itertools.product(range(-1, 2), repeat=4))
        assert book.shape == (81, 2, 2)
        for k, symbols in enumerate(words):
            np.testing.assert_allclose(book[k], encode(config.spec, list(symbols)).matrix(), atol=1e-12)

    def test_full_alphabet_matches_encode(self):
        config = small_config(alphabet="full", codebook_cap=6561)
        book = build_codebook(config)
        symbols = list(itertools.product(range(-1, 2), repeat=2))
        rng = np.random.default_rng(3)
        for k in rng.integers(len(book), size=50):
            u, rest = divmod(int(k), 729)
            v, rest = divmod(rest, 81)
            w, z = divmod(rest, 9)
            word = [symbols[u], symbols[v], symbols[w], symbols[z]]
            np.testing.assert_allclose(book[k], encode(config.spec, word).matrix(), atol=1e-12)

    @pytest.mark.parametrize("balanced", [False, True])
    def test_energy_normalization(self, balanced):
        for spec in (code_d2(), code_d3(), golden_code()):
            book = build_codebook(small_config(spec=spec, balanced=balanced))
            scaled = book * normalization_scale(book)
            energy = float(np.mean(np.sum(np.abs(scaled) ** 2, axis=(1, 2))))
            assert math.isclose(energy, 2.0, rel_tol=1e-9)

    def test_zero_codebook(self):
        book = build_codebook(small_config(symbol_box=0))
        assert normalization_scale(book) == 1.0

    def test_noise_sigma(self):
        assert noise_sigma(float("inf")) == 0.0
        assert math.isclose(noise_sigma(10.0), math.sqrt(0.1), rel_tol=1e-12)

    def test_trial_streams_are_independent_of_order(self):
        a = trial_stream(5, 42).standard_normal(4)
        trial_stream(5, 41).standard_normal(4)
        b = trial_stream(5, 42).standard_normal(4)
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, trial_stream(5, 43).standard_normal(4))


class TestRun:
    """Courbes CER(SNR)"""

    def test_noiseless(self):
        result = run(small_config(snr_grid_db=(float("inf"),)))
        assert result.at(float("inf")).cer == 0.0

    def test_single_codeword(self):
        result = run(small_config(symbol_box=0, snr_grid_db=(-10.0, 0.0)))
        assert result.codebook_size == 1
        assert all(p.cer == 0.0 for p in result.points)

    def test_deterministic(self):
        config = small_config()
        assert run(config) == run(config)

    def test_chunking_does_not_change_results(self):
        config = small_config()
        reference = run(config)
        assert run(replace(config, chunk_elements=81 * 4 * 7)) == reference
        assert run(replace(config, chunk_elements=81 * 4 * 50, threads=2)) == reference

    def test_points(self):
        result = run(small_config())
        for point in result.points:
            assert 0.0 <= point.cer <= 1.0
            assert point.trials == 300
            assert point.errors == round(point.cer * 300)
            assert point.halfwidth >= 0.0

    def test_monotone_in_snr(self):
        result = run(small_config(snr_grid_db=(0.0, 6.0, 12.0, 18.0), trials=500))
        for low, high in zip(result.points, result.points[1:]):
            assert high.cer <= low.cer + low.halfwidth + high.halfwidth

    def test_balanced_matches_plain_for_unit_gamma(self):
        plain = run(small_config(snr_grid_db=(6.0,), trials=2000))
        balanced = run(small_config(snr_grid_db=(6.0,), trials=2000, balanced=True))
        p, b = plain.points[0], balanced.points[0]
        assert abs(p.cer - b.cer) <= 2 * (p.halfwidth + b.halfwidth)


class TestRanking:
    """Classement empirique des codes"""

    def test_single_code(self):
        ranking = rank_codes([code_d2()], small_config())
        assert len(ranking.entries) == 1
        assert ranking.conclusive
        assert ranking.snr_db == 12.0

    def test_duplicates_are_indistinguishable(self):
        ranking = rank_codes([code_d2(), code_d2()], small_config())
        assert ranking.entries[0].cer == ranking.entries[1].cer
        assert ranking.indistinguishable == ((0, 1),)
        assert not ranking.conclusive

    def test_sorted_by_cer(self):
        ranking = rank_codes([golden_code(), code_d2(), code_d3()], small_config())
        cers = [e.cer for e in ranking.entries]
        assert cers == sorted(cers)

    def test_empty(self):
        with pytest.raises(ConfigError):
            rank_codes([], small_config())

    @pytest.mark.slow
    def test_eisenstein_code_against_golden_code(self):
        shared = SimConfig(spec=golden_code(), snr_grid_db=(18.0,), trials=20_000, seed=2024)
        ranking = rank_codes([golden_code(), code_d3()], shared)
        assert ranking.entries[0].spec.label == "table-d3" or not ranking.conclusive


# Permet l'exécution directe du fichier
if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
