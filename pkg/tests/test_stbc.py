"""
Tests de la famille de codes C(F, α1, α2, γ)
"""
import sys
from functools import lru_cache
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

from src.arithmetic import (
    DomainError,
    GammaIsNormError,
    ParameterError,
    QuadPoly,
    ReduciblePolynomialError,
    RingElem,
    rel_norm,
    translate,
)
from src.codes import (
    GOLDEN_CODE,
    TABLE_ROWS,
    CodeSpec,
    Comparison,
    balanced_encode,
    c_det_sq_of,
    compare,
    det_codeword,
    detmin_enumerate,
    encode,
    golden_code,
    make_code,
    reduced_c_det_sq,
)
from src.norms import NormStatus, Verdict

small = st.integers(min_value=-3, max_value=3)
symbol_tuples = st.lists(st.tuples(small, small), min_size=4, max_size=4)


@lru_cache(maxsize=None)
def code_d2() -> CodeSpec:
    return make_code(2, QuadPoly.from_pairs(2, (-1, 0), (1, 0)), RingElem(2, -1, 0))


@lru_cache(maxsize=None)
def code_d7() -> CodeSpec:
    return make_code(7, QuadPoly.from_pairs(7, (0, 0), (1, 0)), RingElem(7, -1, 0))


def spec_for(entry) -> CodeSpec:
    return make_code(entry.d, entry.poly, entry.gamma_elem, note="cited" if entry.cited else None)


class TestMakeCode:
    """Construction et certificat"""

    def test_q_sqrt_minus_two(self):
        spec = code_d2()
        assert spec.rho == Fraction(1, 36)
        assert spec.c_det_sq == 36
        assert spec.rho * spec.c_det_sq == 1
        assert spec.verified
        assert spec.norm_status.verdict is Verdict.NOT_NORM

    def test_q_sqrt_minus_seven(self):
        spec = code_d7()
        assert spec.rho == Fraction(1, 49)
        assert abs(spec.rho_float - 0.0204) < 5e-4

    def test_gamma_is_norm(self):
        poly = QuadPoly.from_pairs(2, (0, 1), (-1, 0))
        with pytest.raises(GammaIsNormError) as e:
            make_code(2, poly, RingElem(2, 1, 0))
        assert rel_norm(e.value.witness) == 1
        assert "gamma-is-norm" in str(e.value)

    def test_zero_gamma(self):
        with pytest.raises(DomainError):
            make_code(2, QuadPoly.from_pairs(2, (-1, 0), (1, 0)), RingElem(2, 0, 0))

    def test_reducible(self):
        with pytest.raises(ReduciblePolynomialError):
            make_code(11, QuadPoly.from_pairs(11, (1, 0), (0, 0)), RingElem(11, -1, 0))

    def test_mismatched_field(self):
        with pytest.raises(ParameterError):
            make_code(7, QuadPoly.from_pairs(2, (-1, 0), (1, 0)), RingElem(2, -1, 0))

    def test_unknown_is_flagged_with_note(self):
        spec = golden_code()
        assert not spec.verified
        assert spec.norm_status.verdict is Verdict.UNKNOWN
        assert spec.norm_status.note == "cited"
        assert spec.c_det_sq == 25

    def test_density_report(self):
        report = code_d7().density()
        assert report.rho == Fraction(1, 49)
        assert abs(report.delta - 7 ** -0.5) < 1e-12


class TestEncode:
    """Mots de code et déterminants"""

    def test_identity(self):
        w = encode(code_d2(), [1, 0, 0, 0])
        np.testing.assert_allclose(w.matrix(), np.eye(2), atol=1e-12)
        assert det_codeword(w) == 1

    def test_zero(self):
        assert det_codeword(encode(code_d2(), [0, 0, 0, 0])) == 0

    def test_off_diagonal(self):
        w = encode(code_d2(), [0, 0, 1, 0])
        np.testing.assert_allclose(w.matrix(), [[0, 1], [-1, 0]], atol=1e-12)

    def test_q_sqrt_minus_seven(self):
        w = encode(code_d7(), [1, 1, 0, 0])
        np.testing.assert_allclose(w.matrix(), [[1 + 1j, 0], [0, 1 - 1j]], atol=1e-12)
        assert det_codeword(w) == 2

    def test_pairs_and_ring_elements(self):
        spec = code_d2()
        w = encode(spec, [(1, 1), RingElem(2, 0, 1), 0, -1])
        assert w.symbols[0] == RingElem(2, 1, 1)
        assert w.symbols[3] == RingElem(2, -1, 0)

    def test_wrong_arity(self):
        with pytest.raises(ParameterError):
            encode(code_d2(), [1, 0, 0])

    def test_mismatched_symbol(self):
        with pytest.raises(ParameterError):
            encode(code_d2(), [RingElem(7, 1, 0), 0, 0, 0])

    @given(symbol_tuples)
    @settings(max_examples=300, deadline=None)
    def test_det_matches_matrix(self, symbols):
        for spec in (code_d2(), code_d7()):
            w = encode(spec, symbols)
            det = det_codeword(w)
            numeric = complex(np.linalg.det(w.matrix()))
            assert abs(numeric - det.to_complex()) < 1e-9 * max(1.0, abs(numeric))
            # det X ∈ O_F
            assert RingElem.try_from_field(det) is not None
            if any(s != (0, 0) for s in symbols):
                assert det.abs_sq >= 1


class TestDetmin:
    """Vérification exhaustive de det_min = 1"""

    @pytest.mark.parametrize("entry", TABLE_ROWS + (GOLDEN_CODE,), ids=lambda e: e.label)
    def test_box_one(self, entry):
        assert detmin_enumerate(spec_for(entry), box=1) == 1

    def test_invalid_box(self):
        with pytest.raises(ParameterError):
            detmin_enumerate(code_d2(), box=0)


class TestBalancedEncode:
    """Variante √γ"""

    def test_unit_gamma_is_plain(self):
        poly = QuadPoly.from_pairs(2, (-1, 0), (1, 0))
        spec = CodeSpec(2, poly, RingElem(2, 1, 0), Fraction(9), Fraction(1, 9), NormStatus(Verdict.UNKNOWN))
        symbols = [(1, 2), (0, -1), (2, 1), (-1, 1)]
        np.testing.assert_allclose(balanced_encode(spec, symbols), encode(spec, symbols).matrix(), atol=1e-12)

    def test_minus_one(self):
        np.testing.assert_allclose(balanced_encode(code_d2(), [0, 0, 1, 0]), [[0, 1j], [1j, 0]], atol=1e-12)

    @given(symbol_tuples)
    @settings(max_examples=300, deadline=None)
    def test_same_determinant(self, symbols):
        spec = code_d7()
        plain = complex(np.linalg.det(encode(spec, symbols).matrix()))
        balanced = complex(np.linalg.det(balanced_encode(spec, symbols)))
        assert abs(plain - balanced) < 1e-9 * max(1.0, abs(plain))


class TestCompare:
    """Critère du déterminant"""

    def test_example_one(self):
        eisenstein = code_d2()
        sqrt_minus_three = make_code(2, QuadPoly.from_pairs(2, (0, 0), (3, 0)), RingElem(2, -1, 0))
        assert sqrt_minus_three.c_det_sq == 576
        assert reduced_c_det_sq(sqrt_minus_three) == 16 * reduced_c_det_sq(eisenstein)
        assert compare(eisenstein, sqrt_minus_three) is Comparison.BETTER
        assert compare(sqrt_minus_three, eisenstein) is Comparison.WORSE

    def test_self(self):
        assert compare(code_d7(), code_d7()) is Comparison.EQUAL

    def test_eisenstein_field_beats_golden(self):
        d3 = spec_for(TABLE_ROWS[2])
        assert d3.c_det_sq == Fraction(189, 16)
        assert compare(d3, golden_code()) is Comparison.BETTER

    @given(small, small)
    @settings(max_examples=200, deadline=None)
    def test_translation_invariance(self, a, b):
        for entry in TABLE_ROWS:
            p0 = RingElem(entry.d, a, b)
            moved = translate(entry.poly, p0)
            assert c_det_sq_of(moved, entry.gamma_elem) == c_det_sq_of(entry.poly, entry.gamma_elem)


# Permet l'exécution directe du fichier
if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
