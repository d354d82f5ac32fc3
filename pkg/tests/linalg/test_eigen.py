import numpy as np
import pytest

from src.exceptions.custom_exceptions import RootFindingFailure, ValidationError
from src.linalg.eigen import eigen_all, eigenvalues, normalize_vector, null_vector
from src.linalg.roots import is_real_root, polynomial_roots
from src.models.matrix import Polynomial, RealMatrix

def _sorted(z):
    return sorted(z, key=lambda c: (round(c.real, 6), round(c.imag, 6)))

class TestRoots:
    """Test polynomial root finding"""

    def test_linear(self):
        """Test degree one"""
        assert polynomial_roots(Polynomial((-4.0, 2.0))) == pytest.approx([2.0])

    def test_constant_has_no_roots(self):
        """Test degree zero"""
        assert len(polynomial_roots(Polynomial((3.0,)))) == 0

    def test_quadratic_complex(self):
        """Test x^2 + 1"""
        roots = _sorted(polynomial_roots(Polynomial((1.0, 0.0, 1.0))))
        assert roots[0] == pytest.approx(-1j)
        assert roots[1] == pytest.approx(1j)

    def test_cubic_real(self):
        """Test (x - 1)(x - 2)(x - 3)"""
        roots = polynomial_roots(Polynomial((-6.0, 11.0, -6.0, 1.0)))
        assert sorted(r.real for r in roots) == pytest.approx([1.0, 2.0, 3.0])
        assert all(r.imag == 0.0 for r in roots)

    def test_cubic_one_real(self):
        """Test x^3 - 1"""
        roots = polynomial_roots(Polynomial((-1.0, 0.0, 0.0, 1.0)))
        real = [r for r in roots if is_real_root(r, 1e-9)]
        assert len(real) == 1
        assert real[0].real == pytest.approx(1.0)

    def test_double_root_merged(self):
        """Test (x - 1)^2 gives a real double root"""
        roots = polynomial_roots(Polynomial((1.0, -2.0, 1.0)))
        assert all(r.imag == 0.0 for r in roots)
        assert [r.real for r in roots] == pytest.approx([1.0, 1.0])

    def test_leading_zeros_trimmed(self):
        """Test formal leading zeros do not add roots"""
        assert len(polynomial_roots(Polynomial((-6.0, 11.0, -6.0, 1.0, 0.0)))) == 3

    def test_quartic_matches_numpy(self):
        """Test Aberth iteration against numpy on (x^2 + 1)(x - 2)(x + 3)"""
        coeffs = np.polymul(np.polymul([1, 0, 1], [1, -2]), [1, 3])
        roots = polynomial_roots(Polynomial(tuple(coeffs[::-1])))
        expected = np.roots(coeffs)
        for got, want in zip(_sorted(roots), _sorted(expected)):
            assert got == pytest.approx(want, abs=1e-9)

    def test_aberth_budget(self):
        """Test non-convergence raises instead of returning garbage"""
        with pytest.raises(RootFindingFailure):
            polynomial_roots(Polynomial((24.0, -50.0, 35.0, -10.0, 1.0)), max_iter=0)

    @pytest.mark.parametrize("z,expected", [
        (complex(1.0, 0.0), True),
        (complex(1.0, 1e-12), True),
        (complex(1.0, 1e-3), False),
    ])
    def test_is_real_root(self, z, expected):
        """Test relative realness tolerance"""
        assert is_real_root(z, 1e-9) == expected

class TestEigen:
    """Test real eigenpairs"""

    def test_symmetric_pairs(self):
        """Test [[2,1],[1,2]] has eigenpairs 3 and 1"""
        pairs = eigen_all(RealMatrix.from_text("2 1; 1 2"))
        assert [p.value for p in pairs] == pytest.approx([3.0, 1.0])
        assert pairs[0].right == pytest.approx([1.0, 1.0])
        assert pairs[0].left == pytest.approx([1.0, 1.0])
        assert pairs[0].gap == pytest.approx(2.0)
        assert pairs[0].simple
        assert pairs[0].min_entry == pytest.approx(1.0)

    def test_complex_spectrum(self):
        """Test rotation has no real eigenpairs"""
        assert eigen_all(RealMatrix.from_text("0 -1; 1 0")) == []

    def test_repeated_eigenvalue(self):
        """Test the identity has no simple eigenvalue"""
        pairs = eigen_all(RealMatrix.identity(2))
        assert pairs
        assert not any(p.simple for p in pairs)

    def test_residual_bound(self, positive_matrix):
        """Test A u = lambda u up to tol * ||A||"""
        for pair in eigen_all(positive_matrix):
            assert pair.residual <= 1e-9
            assert np.max(np.abs(pair.right)) == pytest.approx(1.0)

    def test_normalization(self, cycle3):
        """Test first nonzero coordinate is positive"""
        (pair,) = eigen_all(cycle3)
        assert pair.value == pytest.approx(1.0)
        assert pair.right == pytest.approx([1.0, 1.0, 1.0])

    def test_eigenvalues_match_numpy(self, positive_matrix):
        """Test the full root set"""
        got = sorted(eigenvalues(positive_matrix), key=lambda z: (z.real, z.imag))
        want = sorted(np.linalg.eigvals(positive_matrix.data), key=lambda z: (z.real, z.imag))
        assert np.allclose(got, want, atol=1e-8)

    def test_invalid_arguments(self, cycle3):
        """Test tolerance and dimension cap"""
        with pytest.raises(ValidationError):
            eigen_all(cycle3, tol=0.0)
        with pytest.raises(ValidationError):
            eigen_all(cycle3, max_n=2)

class TestNullVector:
    """Test elimination-based null vectors"""

    def test_rank_one_deficient(self):
        """Test [[-1,1],[1,-1]] has null vector (1,1)"""
        x, nullity = null_vector(np.array([[-1.0, 1.0], [1.0, -1.0]]))
        assert nullity == 1
        assert x == pytest.approx([1.0, 1.0])

    def test_nullity_two(self):
        """Test the zero matrix reports nullity two"""
        _, nullity = null_vector(np.zeros((3, 3)))
        assert nullity == 2

    def test_normalize_vector(self):
        """Test max-norm and sign convention"""
        assert normalize_vector(np.array([0.0, -2.0, 1.0])) == pytest.approx([0.0, 1.0, -0.5])
        assert np.array_equal(normalize_vector(np.zeros(2)), np.zeros(2))
