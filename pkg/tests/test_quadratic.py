"""
Tests de l'extension quadratique relative K = F(α1)
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

from src.arithmetic import (
    ExtElem,
    QuadPoly,
    ReduciblePolynomialError,
    RingElem,
    conjugate,
    discriminant,
    embed_complex,
    is_irreducible,
    rel_norm,
    require_irreducible,
    translate,
)

FIELDS = [1, 2, 3, 7, 11]

small = st.integers(min_value=-4, max_value=4)
coords = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw):
    d = draw(st.sampled_from(FIELDS))
    return QuadPoly.from_pairs(d, (draw(small), draw(small)), (draw(small), draw(small)))


@st.composite
def ext_pairs(draw):
    poly = draw(polys())
    d = poly.d

    def elem():
        from src.arithmetic import FieldElem
        return ExtElem(poly, FieldElem(d, draw(coords), draw(coords)), FieldElem(d, draw(coords), draw(coords)))

    return elem(), elem()


class TestDiscriminant:
    """p² - 4q"""

    def test_examples(self):
        assert discriminant(QuadPoly.from_pairs(2, (-1, 0), (1, 0))) == RingElem(2, -3, 0)
        assert discriminant(QuadPoly.from_pairs(7, (0, 0), (1, 0))) == RingElem(7, -4, 0)
        assert discriminant(QuadPoly.from_pairs(5, (0, 0), (0, 0))) == RingElem(5, 0, 0)

    def test_rendering(self):
        assert str(QuadPoly.from_pairs(2, (-1, 0), (1, 0))) == "x^2 - x + 1"
        assert str(QuadPoly.from_pairs(7, (0, 0), (1, 0))) == "x^2 + 1"

    @given(polys(), small, small)
    @settings(max_examples=300, deadline=None)
    def test_translation_invariance(self, poly, a, b):
        p0 = RingElem(poly.d, a, b)
        assert discriminant(translate(poly, p0)) == discriminant(poly)


class TestIrreducibility:
    """Irréductibilité sur F"""

    @pytest.mark.parametrize("sign", [1, -1])
    def test_optimal_polynomials_over_q_sqrt_minus_two(self, sign):
        assert is_irreducible(QuadPoly.from_pairs(2, (0, sign), (-1, 0)))

    @pytest.mark.parametrize("sign", [1, -1])
    def test_reducible_over_q_sqrt_minus_eleven(self, sign):
        assert not is_irreducible(QuadPoly.from_pairs(11, (sign, 0), (0, 0)))

    @pytest.mark.parametrize("sign", [1, -1])
    def test_eisenstein_polynomials_over_q_sqrt_minus_seven(self, sign):
        assert is_irreducible(QuadPoly.from_pairs(7, (sign, 0), (1, 0)))

    def test_require_irreducible(self):
        poly = QuadPoly.from_pairs(2, (0, 0), (0, 0))
        with pytest.raises(ReduciblePolynomialError) as e:
            require_irreducible(poly)
        assert "reducible" in str(e.value)
        assert e.value.root == 0


class TestRelativeNorm:
    """N_{K/F}"""

    def test_examples(self):
        poly = QuadPoly.from_pairs(2, (0, 1), (-1, 0))
        assert rel_norm(ExtElem.one(poly)) == 1
        assert rel_norm(ExtElem.alpha(poly)) == poly.q
        assert rel_norm(ExtElem.alpha(poly)) == -1

    @given(ext_pairs())
    @settings(max_examples=1000, deadline=None)
    def test_multiplicative(self, pair):
        x, y = pair
        assert rel_norm(x * y) == rel_norm(x) * rel_norm(y)

    @given(ext_pairs())
    @settings(max_examples=300, deadline=None)
    def test_conjugate(self, pair):
        x, _ = pair
        assert x * conjugate(x) == ExtElem(x.poly, rel_norm(x), 0)


class TestEmbeddings:
    """Plongements complexes"""

    def test_one(self):
        poly = QuadPoly.from_pairs(7, (0, 0), (1, 0))
        assert embed_complex(ExtElem.one(poly), 1) == 1 + 0j
        assert embed_complex(ExtElem.one(poly), 2) == 1 + 0j

    def test_square_root_of_minus_one(self):
        alpha = ExtElem.alpha(QuadPoly.from_pairs(7, (0, 0), (1, 0)))
        assert abs(embed_complex(alpha, 1) - 1j) < 1e-12
        assert abs(embed_complex(alpha, 2) + 1j) < 1e-12

    def test_sixth_root_of_unity(self):
        alpha = ExtElem.alpha(QuadPoly.from_pairs(2, (-1, 0), (1, 0)))
        assert abs(embed_complex(alpha, 1) - complex(0.5, 0.8660254037844386)) < 1e-12

    @given(ext_pairs())
    @settings(max_examples=300, deadline=None)
    def test_product_of_embeddings_is_norm(self, pair):
        x, _ = pair
        product = embed_complex(x, 1) * embed_complex(x, 2)
        expected = rel_norm(x).to_complex()
        assert abs(product - expected) < 1e-9 * max(1.0, abs(expected))

    @given(polys())
    @settings(max_examples=300, deadline=None)
    def test_root_difference_squared_is_discriminant(self, poly):
        alpha1, alpha2 = poly.roots_complex()
        disc = poly.disc.to_complex()
        assert abs((alpha1 - alpha2) ** 2 - disc) < 1e-9 * max(1.0, abs(disc))


# Permet l'exécution directe du fichier
if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
