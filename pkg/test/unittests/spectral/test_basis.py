import math
from unittest import TestCase
import numpy as np
from fracgal.spectral import (
    DomainGeometry, QuadratureRule, SpectralBasis, build_basis, ModalVector,
    modal_norms, project)
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalUsageError)


class TestGeometry(TestCase):

    def test_interval(self):
        geometry = DomainGeometry.interval(2.0)
        self.assertEqual(geometry.dim, 1)
        self.assertEqual(geometry.volume, 2.0)
        self.assertEqual(geometry, DomainGeometry(2.0))

    def test_rectangle(self):
        geometry = DomainGeometry.rectangle(2.0, 3.0)
        self.assertEqual(geometry.dim, 2)
        self.assertEqual(geometry.volume, 6.0)

    def test_invalid(self):
        with self.assertRaises(FracGalInvalidParameterError):
            DomainGeometry((1.0, 1.0, 1.0))
        with self.assertRaises(FracGalInvalidParameterError):
            DomainGeometry((1.0, -1.0))


class TestSpectralBasis(TestCase):

    def test_interval_eigenvalues(self):
        basis = build_basis(DomainGeometry.interval(2.0), 4)
        np.testing.assert_allclose(
            basis.eigenvalues, (np.arange(1, 5) * math.pi / 2.0) ** 2)
        self.assertEqual(basis.modes, ((1,), (2,), (3,), (4,)))

    def test_square_ordering(self):
        basis = build_basis(DomainGeometry.rectangle(1.0, 1.0), 5)
        self.assertEqual(basis.modes,
                         ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3)))
        np.testing.assert_allclose(
            basis.eigenvalues, math.pi ** 2 * np.array([2, 5, 5, 8, 10]))
        self.assertTrue(np.all(np.diff(basis.eigenvalues) >= 0.0))

    def test_rectangle_ordering(self):
        basis = build_basis(DomainGeometry.rectangle(2.0, 1.0), 3)
        # pi^2 (k^2 / 4 + l^2): 1.25, 2 and 3.25 below (1, 2) at 4.25
        self.assertEqual(basis.modes, ((1, 1), (2, 1), (3, 1)))

    def test_orthonormal(self):
        for geometry, size in ((DomainGeometry.interval(3.0), 8),
                               (DomainGeometry.rectangle(1.0, 2.0), 6)):
            basis = build_basis(geometry, size)
            points, weights = QuadratureRule.for_basis(basis).nodes(geometry)
            E = basis.values(points)
            np.testing.assert_allclose(E.T.dot(weights[:, None] * E),
                                       np.eye(size), atol=1e-12)

    def test_gradients(self):
        # int |grad e_k|^2 = lambda_k
        geometry = DomainGeometry.rectangle(1.0, 1.5)
        basis = build_basis(geometry, 4)
        points, weights = QuadratureRule.for_basis(basis).nodes(geometry)
        G = basis.gradients(points)
        stiffness = sum(g.T.dot(weights[:, None] * g) for g in G)
        np.testing.assert_allclose(stiffness, np.diag(basis.eigenvalues),
                                   atol=1e-10)

    def test_truncated(self):
        basis = build_basis(DomainGeometry.interval(), 6)
        small = basis.truncated(3)
        self.assertEqual(small, build_basis(DomainGeometry.interval(), 3))
        self.assertTrue(small.is_prefix_of(basis))
        self.assertFalse(basis.is_prefix_of(small))
        with self.assertRaises(FracGalUsageError):
            small.truncated(4)

    def test_invalid(self):
        with self.assertRaises(FracGalInvalidParameterError):
            build_basis(DomainGeometry.interval(), 0)
        with self.assertRaises(FracGalInvalidParameterError):
            SpectralBasis(DomainGeometry.interval(), [(0,)])


class TestModalVector(TestCase):

    def setUp(self):
        self.basis = build_basis(DomainGeometry.interval(math.pi), 2)

    def test_norms(self):
        # lambda = 1, 4 on (0, pi)
        l2, h10, hm1 = modal_norms(ModalVector([1.0, 2.0], self.basis))
        self.assertAlmostEqual(l2, math.sqrt(5.0), places=12)
        self.assertAlmostEqual(h10, math.sqrt(17.0), places=12)
        self.assertAlmostEqual(hm1, math.sqrt(2.0), places=12)

    def test_embed_restrict(self):
        large = build_basis(DomainGeometry.interval(math.pi), 4)
        v = ModalVector([1.0, 2.0], self.basis)
        embedded = v.embedded(large)
        np.testing.assert_array_equal(embedded.coefficients,
                                      [1.0, 2.0, 0.0, 0.0])
        self.assertEqual(embedded.restricted(self.basis), v)
        with self.assertRaises(FracGalUsageError):
            embedded.embedded(self.basis)

    def test_size_mismatch(self):
        with self.assertRaises(FracGalInvalidParameterError):
            ModalVector([1.0], self.basis)

    def test_unit(self):
        v = ModalVector.unit(2, self.basis)
        np.testing.assert_array_equal(v.coefficients, [0.0, 1.0])


class TestProject(TestCase):

    def test_basis_function(self):
        basis = build_basis(DomainGeometry.interval(1.0), 4)
        projection = project(
            lambda x: math.sqrt(2.0) * np.sin(2.0 * math.pi * x), basis)
        np.testing.assert_allclose(projection.coefficients, [0, 1, 0, 0],
                                   atol=1e-12)

    def test_evaluate(self):
        basis = build_basis(DomainGeometry.interval(1.0), 3)
        v = ModalVector([0.5, 0.0, -1.0], basis)
        x = np.array([0.1, 0.5])
        expected = math.sqrt(2.0) * (0.5 * np.sin(math.pi * x)
                                     - np.sin(3.0 * math.pi * x))
        np.testing.assert_allclose(v.evaluate((x,)), expected, atol=1e-14)

    def test_polynomial(self):
        # Sine coefficients of x (1 - x): 4 sqrt(2) / (k pi)^3 for odd k
        basis = build_basis(DomainGeometry.interval(1.0), 3)
        projection = project(lambda x: x * (1.0 - x), basis)
        expected = [4.0 * math.sqrt(2.0) / (k * math.pi) ** 3
                    if k % 2 else 0.0 for k in (1, 2, 3)]
        np.testing.assert_allclose(projection.coefficients, expected,
                                   atol=1e-10)
