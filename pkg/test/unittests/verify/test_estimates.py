import math
from unittest import TestCase
import numpy as np
from fracgal.fraccalc import TimeGrid, GridSeries, gamma
from fracgal.spectral import DomainGeometry, build_basis
from fracgal.fode import ModalTrajectory
from fracgal.problem import parse_problem
from fracgal.verify import (
    dual_norms, energy_bound_check, h1_bound_check,
    dual_derivative_bound_check, comparison_bound_check, convexity_check,
    garding_check, continuity_check)
from fracgal.utils.testing import SCALAR_PROBLEM
from fracgal.exceptions import FracGalGridMismatchError


class TestDualNorms(TestCase):

    def test_modal(self):
        basis = build_basis(DomainGeometry.interval(math.pi), 2)
        # lambda = 1, 4
        np.testing.assert_allclose(dual_norms([[1.0, 2.0], [0.0, 4.0]],
                                              basis), [math.sqrt(2.0), 2.0])


class TestEstimatesOnScalarProblem(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.problem = parse_problem(SCALAR_PROBLEM).with_overrides(steps=256)
        cls.problem.validate()
        cls.beta, cls.nu = cls.problem.garding_constants()
        cls.ivp = cls.problem.ivp()
        cls.traj, _ = cls.problem.solve(ivp=cls.ivp)

    def test_constants(self):
        self.assertAlmostEqual(self.beta, 0.5 / 1.05, places=6)
        self.assertEqual(self.nu, 0.0)

    def test_energy(self):
        entry = energy_bound_check(self.traj, self.beta, self.nu, 1.0)
        self.assertTrue(entry.passed)
        # T^alpha E_{alpha,alpha+1}(0) / (2 beta) with T = 1
        self.assertAlmostEqual(entry.rhs, 1.05 / gamma(1.5), places=5)
        self.assertEqual(entry.constants['beta'], self.beta)

    def test_h1(self):
        self.assertTrue(h1_bound_check(self.traj, self.beta, self.nu,
                                       1.0).passed)

    def test_dual_derivative(self):
        C2 = self.problem.continuity_constant()
        pointwise, aggregate = dual_derivative_bound_check(
            self.traj, self.ivp.A, self.ivp.f, C2)
        self.assertEqual(pointwise.name, 'dual_derivative_bound')
        self.assertEqual(aggregate.name, 'dual_derivative_bound_l2')
        self.assertTrue(pointwise.passed)
        self.assertTrue(aggregate.passed)

    def test_comparison(self):
        entry = comparison_bound_check(self.traj, self.ivp.f, self.beta,
                                       self.nu)
        self.assertTrue(entry.passed)
        self.assertIn('node', entry.constants)

    def test_convexity(self):
        entry = convexity_check(self.traj)
        self.assertTrue(entry.passed)
        self.assertLess(entry.lhs, 1e-8)

    def test_garding_continuity(self):
        basis = self.problem.basis
        self.assertTrue(garding_check(self.ivp.A, basis, self.beta,
                                      self.nu).passed)
        C2 = self.problem.continuity_constant()
        self.assertTrue(continuity_check(self.ivp.A, basis, C2).passed)
        # Seeded
        self.assertEqual(garding_check(self.ivp.A, basis, self.beta, self.nu,
                                       seed=3),
                         garding_check(self.ivp.A, basis, self.beta, self.nu,
                                       seed=3))

    def test_violation(self):
        # A coercivity constant well above the true one breaks the bound
        self.assertFalse(garding_check(self.ivp.A, self.problem.basis, 2.0,
                                       0.0).passed)
        self.assertFalse(continuity_check(self.ivp.A, self.problem.basis,
                                          0.5).passed)

    def test_mismatch(self):
        f = GridSeries(TimeGrid(1.0, 8), np.zeros((9, 1)))
        with self.assertRaises(FracGalGridMismatchError):
            comparison_bound_check(self.traj, f, self.beta, self.nu)


class TestConvexityCheck(TestCase):

    def test_multi_mode(self):
        grid = TimeGrid(1.0, 64)
        t = grid.nodes
        values = np.stack([np.sin(3.0 * t), t ** 0.5 - t, -t ** 2], axis=1)
        traj = ModalTrajectory(grid, values, 0.4, 'l1')
        self.assertTrue(convexity_check(traj).passed)
