"""
Tests des certificats de norme relative
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

from src.arithmetic import (
    DomainError,
    ExtElem,
    QuadPoly,
    ReduciblePolynomialError,
    RingElem,
    rel_norm,
)
from src.norms import (
    NormBudget,
    NormStatus,
    Verdict,
    decide_norm,
    find_obstruction,
    obstruction_minus_one_mod3,
    obstruction_minus_one_mod8,
    witness_search,
)


def sqrt2_poly(sign: int = 1) -> QuadPoly:
    """x² ± √-2·x - 1 sur Q(√-2)"""
    return QuadPoly.from_pairs(2, (0, sign), (-1, 0))


def eisenstein_poly(d: int) -> QuadPoly:
    """x² - x + 1, racines (1 ± √-3)/2"""
    return QuadPoly.from_pairs(d, (-1, 0), (1, 0))


def gaussian_poly(d: int) -> QuadPoly:
    """x² + 1"""
    return QuadPoly.from_pairs(d, (0, 0), (1, 0))


class TestObstructions:
    """Obstructions par congruence pour γ = -1"""

    def test_mod3_q_sqrt_minus_two(self):
        assert obstruction_minus_one_mod3(-2, RingElem(2, -3, 0))

    def test_mod3_q_sqrt_minus_eleven(self):
        assert obstruction_minus_one_mod3(-11, RingElem(11, -3, 0))

    def test_mod3_not_applicable(self):
        assert not obstruction_minus_one_mod3(-3, RingElem(3, -3, 0))
        # K = F(i) n'est pas F(√-3)
        assert not obstruction_minus_one_mod3(-2, RingElem(2, -4, 0))

    def test_mod8_q_sqrt_minus_seven(self):
        assert obstruction_minus_one_mod8(-7, RingElem(7, -4, 0))

    @pytest.mark.parametrize("dF", [-1, -2])
    def test_mod8_not_applicable(self, dF):
        assert not obstruction_minus_one_mod8(dF, RingElem(-dF, -4, 0))

    def test_find_obstruction(self):
        assert find_obstruction(eisenstein_poly(2)).prime == 3
        assert find_obstruction(gaussian_poly(7)).prime == 2
        assert find_obstruction(eisenstein_poly(7)) is None


class TestWitnessSearch:
    """Recherche de témoins explicites"""

    @pytest.mark.parametrize("poly", [sqrt2_poly(), eisenstein_poly(11), gaussian_poly(7)])
    def test_one_is_a_norm(self, poly):
        assert witness_search(poly, RingElem(poly.d, 1, 0)) == ExtElem.one(poly)

    def test_q_is_norm_of_alpha(self):
        poly = sqrt2_poly()
        assert witness_search(poly, poly.q) == ExtElem.alpha(poly)

    def test_half_integer_witness(self):
        poly = eisenstein_poly(7)
        w = witness_search(poly, RingElem(7, -1, 0))
        assert w is not None
        assert rel_norm(w) == -1
        assert any(c.denominator == 2 for c in (w.a.x, w.a.y, w.b.x, w.b.y))

    @pytest.mark.parametrize("sign", [1, -1])
    @pytest.mark.parametrize("gamma", [(1, 0), (-1, 0), (0, 1), (0, -1)])
    def test_facts_over_q_sqrt_minus_two(self, sign, gamma):
        poly = sqrt2_poly(sign)
        g = RingElem(2, *gamma)
        w = witness_search(poly, g)
        assert w is not None
        assert rel_norm(w) == g

    @pytest.mark.parametrize("p", [(1, 0), (-1, 0)])
    @pytest.mark.parametrize("gamma", [(1, 0), (-1, 0)])
    def test_facts_over_q_sqrt_minus_seven(self, p, gamma):
        poly = QuadPoly.from_pairs(7, p, (1, 0))
        g = RingElem(7, *gamma)
        w = witness_search(poly, g)
        assert w is not None
        assert rel_norm(w) == g

    @given(st.integers(-3, 3), st.integers(-3, 3))
    @settings(max_examples=100, deadline=None)
    def test_soundness(self, a, b):
        poly = sqrt2_poly()
        g = RingElem(2, a, b)
        w = witness_search(poly, g, radius_sq=10, denominators=(1,))
        if w is not None:
            assert rel_norm(w) == g


class TestDecideNorm:
    """Orchestration des deux chemins certifiés"""

    def test_not_norm_mod3(self):
        status = decide_norm(eisenstein_poly(2), RingElem(2, -1, 0))
        assert status.verdict is Verdict.NOT_NORM
        assert status.obstruction.prime == 3
        assert status.witness is None

    def test_not_norm_mod8(self):
        status = decide_norm(gaussian_poly(7), RingElem(7, -1, 0))
        assert status.verdict is Verdict.NOT_NORM
        assert status.obstruction.prime == 2

    def test_is_norm(self):
        status = decide_norm(sqrt2_poly(), RingElem(2, 0, 1))
        assert status.verdict is Verdict.IS_NORM
        assert rel_norm(status.witness) == RingElem(2, 0, 1)
        assert status.obstruction is None

    def test_reduction_to_minus_one(self):
        # 3 = N(1 + α1) pour x² - x + 1, donc -3 n'est pas une norme
        status = decide_norm(eisenstein_poly(2), RingElem(2, -3, 0))
        assert status.verdict is Verdict.NOT_NORM
        assert status.obstruction.reduction is not None

    def test_golden_gamma_unknown(self):
        poly = QuadPoly.from_pairs(1, (-1, 0), (-1, 0))
        status = decide_norm(poly, RingElem(1, 0, 1))
        assert status.verdict is Verdict.UNKNOWN
        assert status.witness is None and status.obstruction is None

    def test_zero_gamma(self):
        with pytest.raises(DomainError):
            decide_norm(sqrt2_poly(), RingElem(2, 0, 0))

    def test_reducible(self):
        with pytest.raises(ReduciblePolynomialError):
            decide_norm(QuadPoly.from_pairs(11, (1, 0), (0, 0)), RingElem(11, -1, 0))

    @pytest.mark.slow
    @pytest.mark.parametrize("poly", [eisenstein_poly(2), gaussian_poly(7), eisenstein_poly(11)])
    def test_not_norm_consistent_with_larger_search(self, poly):
        gamma = RingElem(poly.d, -1, 0)
        assert decide_norm(poly, gamma).verdict is Verdict.NOT_NORM
        assert witness_search(poly, gamma, radius_sq=100, denominators=(1, 2, 3, 4)) is None


class TestNormStatus:
    """Cohérence verdict / certificat"""

    def test_is_norm_requires_witness(self):
        with pytest.raises(DomainError):
            NormStatus(Verdict.IS_NORM)

    def test_not_norm_requires_obstruction(self):
        with pytest.raises(DomainError):
            NormStatus(Verdict.NOT_NORM)

    def test_with_note(self):
        status = NormStatus(Verdict.UNKNOWN).with_note("cited")
        assert status.note == "cited"
        assert status.verdict is Verdict.UNKNOWN

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            NormBudget(0, (1,))
        with pytest.raises(ValueError):
            NormBudget(10, ())
        assert NormBudget(10, (2, 1, 2)).denominators == (1, 2)


# Permet l'exécution directe du fichier
if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
