import math
from unittest import TestCase
import numpy as np
from fracgal.fraccalc import TimeGrid
from fracgal.spectral import (
    DomainGeometry, build_basis, CoefficientSet, ModalForcing, FormAssembler,
    assemble, check_ellipticity, garding_constants, poincare_constant,
    continuity_constant)
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalEllipticityError,
    FracGalSymmetryError)


def interval_basis(length=math.pi, size=3):
    return build_basis(DomainGeometry.interval(length), size)


class TestCoefficientSet(TestCase):

    def test_defaults(self):
        coeffs = CoefficientSet((1.0, 1.0), 1.0)
        self.assertEqual(coeffs.a(1, 1)(0.0, 0.5, 0.5), 1.0)
        self.assertEqual(coeffs.a(2, 1)(0.0, 0.5, 0.5), 0.0)
        self.assertFalse(coeffs.has_advection)
        self.assertEqual(len(coeffs.fields()), 6)

    def test_symmetric(self):
        coeffs = CoefficientSet((1.0, 1.0), 1.0,
                                a={(1, 2): '0.1 * t', (2, 1): 't * 0.1'})
        self.assertEqual(coeffs.a(2, 1), coeffs.a(1, 2))
        with self.assertRaises(FracGalSymmetryError):
            CoefficientSet((1.0, 1.0), 1.0,
                           a={(1, 2): '0.1 * t', (2, 1): '0.2 * t'})

    def test_invalid(self):
        with self.assertRaises(FracGalInvalidParameterError):
            CoefficientSet((1.0,), 1.0, a={(1, 2): '1'})
        with self.assertRaises(FracGalInvalidParameterError):
            CoefficientSet((1.0,), 1.0, b=['1', '2'])

    def test_min_eigenvalues(self):
        coeffs = CoefficientSet((1.0, 1.0), 1.0,
                                a={(1, 1): '2', (1, 2): '1', (2, 2): '2'})
        self.assertAlmostEqual(float(coeffs.min_eigenvalues(0.0, 0.5, 0.5)),
                               1.0, places=14)


class TestModalForcing(TestCase):

    def test_vector(self):
        forcing = ModalForcing({1: '1', 3: 't'})
        np.testing.assert_array_equal(forcing.vector(0.5, 2), [1.0, 0.0])
        np.testing.assert_array_equal(forcing.vector(0.5, 4),
                                      [1.0, 0.0, 0.5, 0.0])
        self.assertEqual(forcing.max_mode, 3)
        self.assertFalse(forcing.is_zero)

    def test_zero(self):
        self.assertTrue(ModalForcing.zero().is_zero)
        self.assertTrue(ModalForcing({2: 0.0}).is_zero)
        grid = TimeGrid(1.0, 4)
        self.assertEqual(ModalForcing.zero().series(grid, 2).shape, (2,))

    def test_h_minus1(self):
        # lambda_1 = 1 on (0, pi)
        forcing = ModalForcing({1: '2 - t'})
        self.assertAlmostEqual(
            forcing.h_minus1_sup(TimeGrid(1.0, 8), interval_basis()), 2.0)

    def test_invalid_mode(self):
        with self.assertRaises(FracGalInvalidParameterError):
            ModalForcing({0: '1'})


class TestAssembly(TestCase):

    def test_laplacian(self):
        basis = interval_basis()
        coeffs = CoefficientSet.identity((math.pi,), 1.0)
        form = assemble(basis, coeffs, None, 0.0)
        np.testing.assert_allclose(form.matrix, np.diag([1.0, 4.0, 9.0]),
                                   atol=1e-10)
        np.testing.assert_array_equal(form.load, np.zeros(3))

    def test_reaction(self):
        basis = build_basis(DomainGeometry.rectangle(1.0, 1.0), 3)
        coeffs = CoefficientSet.identity((1.0, 1.0), 1.0, c='2')
        form = assemble(basis, coeffs, ModalForcing({2: '1'}), 0.3)
        np.testing.assert_allclose(
            form.matrix, np.diag(basis.eigenvalues + 2.0), atol=1e-9)
        np.testing.assert_array_equal(form.load, [0.0, 1.0, 0.0])

    def test_time_dependent(self):
        basis = interval_basis()
        coeffs = CoefficientSet((math.pi,), 2.0, a={(1, 1): '1 + t'})
        assembler = FormAssembler(basis, coeffs)
        np.testing.assert_allclose(assembler.matrix(1.5),
                                   2.5 * np.diag([1.0, 4.0, 9.0]),
                                   atol=1e-9)

    def test_advection_skew(self):
        # int e_j' e_i is skew for Dirichlet modes
        basis = interval_basis(size=4)
        coeffs = CoefficientSet((math.pi,), 1.0, b=['1'])
        A = assemble(basis, coeffs, None, 0.0).matrix
        self.assertGreater(np.max(np.abs(A - A.T)), 0.1)
        np.testing.assert_allclose(A + A.T, 2.0 * np.diag(basis.eigenvalues),
                                   atol=1e-10)

    def test_series(self):
        basis = interval_basis(size=2)
        coeffs = CoefficientSet.identity((math.pi,), 1.0)
        grid = TimeGrid(1.0, 4)
        A, f = FormAssembler(basis, coeffs).series(grid,
                                                   ModalForcing({1: 't'}))
        self.assertEqual(A.shape, (2, 2))
        self.assertEqual(f.shape, (2,))
        np.testing.assert_allclose(f.values[:, 0], grid.nodes)

    def test_not_elliptic(self):
        coeffs = CoefficientSet((1.0,), 1.0, a={(1, 1): 't - 0.5'})
        assembler = FormAssembler(build_basis(DomainGeometry.interval(), 2),
                                  coeffs)
        with self.assertRaises(FracGalEllipticityError):
            assembler.matrix(0.0)

    def test_domain_mismatch(self):
        with self.assertRaises(FracGalInvalidParameterError):
            FormAssembler(interval_basis(),
                          CoefficientSet.identity((1.0,), 1.0))


class TestConstants(TestCase):

    def test_ellipticity(self):
        coeffs = CoefficientSet((1.0,), 1.0, a={(1, 1): '1 - 0.4 * t'})
        report = check_ellipticity(coeffs, 0.5)
        self.assertAlmostEqual(report.theta_hat, 0.6, places=12)
        self.assertTrue(report.passed)
        self.assertFalse(check_ellipticity(coeffs, 0.7))
        with self.assertRaises(FracGalInvalidParameterError):
            check_ellipticity(coeffs, 0.0)

    def test_garding_reaction(self):
        coeffs = CoefficientSet.identity((1.0,), 1.0, c='-2')
        beta, nu = garding_constants(coeffs, 1.0)
        self.assertEqual(beta, 0.5)
        self.assertAlmostEqual(nu, 2.1, places=12)

    def test_garding_advection(self):
        coeffs = CoefficientSet((1.0,), 1.0, b=['1'])
        beta, nu = garding_constants(coeffs, 2.0)
        self.assertEqual(beta, 1.0)
        self.assertAlmostEqual(nu, 1.05 ** 2 / 4.0, places=12)

    def test_poincare(self):
        self.assertAlmostEqual(poincare_constant(interval_basis()), 1.0,
                               places=14)
        self.assertAlmostEqual(
            poincare_constant(interval_basis(length=2.0)), 2.0 / math.pi,
            places=14)

    def test_continuity(self):
        basis = interval_basis()
        coeffs = CoefficientSet((math.pi,), 1.0, a={(1, 1): '2'}, c='1')
        # 1.05 (2 + C_P^2 1) with C_P = 1
        self.assertAlmostEqual(continuity_constant(coeffs, basis), 3.15,
                               places=12)
