from unittest import TestCase
import numpy as np
from fracgal.fraccalc import (
    TimeGrid, GridSeries, Kernel, PowerKernel, MLParams, mittag_leffler,
    convolve, convolve_kernels, convolution_derivative, rl_integral,
    rl_derivative)
from fracgal.exceptions import FracGalInvalidParameterError


class TestKernel(TestCase):

    def test_invalid(self):
        with self.assertRaises(FracGalInvalidParameterError):
            Kernel('Q', 0.5)
        with self.assertRaises(FracGalInvalidParameterError):
            Kernel.k(1.0)
        with self.assertRaises(FracGalInvalidParameterError):
            Kernel.kn(0.5, 0)
        with self.assertRaises(FracGalInvalidParameterError):
            Kernel.kn(0.5, 2.5)
        with self.assertRaises(FracGalInvalidParameterError):
            Kernel('L', 0.5, n=3)

    def test_equality(self):
        self.assertEqual(Kernel.k(0.5), Kernel('k', 0.5))
        self.assertNotEqual(Kernel.k(0.5), Kernel.l(0.5))
        self.assertNotEqual(Kernel.kn(0.5, 1), Kernel.kn(0.5, 2))
        self.assertEqual(repr(Kernel.kn(0.5, 3)),
                         "Kernel('KN', alpha=0.5, n=3)")

    def test_yosida_values(self):
        kernel = Kernel.kn(0.5, 10)
        s = np.array([0.01, 0.1, 1.0])
        np.testing.assert_allclose(
            kernel(s), 10.0 * mittag_leffler(MLParams(0.5), -10.0 * s ** 0.5),
            rtol=1e-14)

    def test_power_primitive(self):
        kernel = PowerKernel(0.5)
        x = np.array([0.25, 1.0, 4.0])
        # int_0^x s^(-1/2) / Gamma(1/2) ds = 2 sqrt(x) / sqrt(pi)
        np.testing.assert_allclose(kernel.primitive(x, 0),
                                   2.0 * np.sqrt(x / np.pi), rtol=1e-13)


class TestConvolution(TestCase):

    def test_matches_integral(self):
        grid = TimeGrid(1.0, 64)
        x = GridSeries.from_function(grid, np.cos)
        np.testing.assert_allclose(convolve(x, Kernel.l(0.4)).values,
                                   rl_integral(x, 0.4).values, atol=1e-14)

    def test_yosida_constant(self):
        # (k_n * 1)(t) = n t E_{alpha,2}(-n t^alpha), exact for constants
        grid = TimeGrid(1.0, 32)
        x = GridSeries.from_function(grid, lambda t: np.ones_like(t))
        conv = convolve(x, Kernel.kn(0.5, 10))
        t = grid.nodes
        expected = 10.0 * t * mittag_leffler(MLParams(0.5, 2.0),
                                             -10.0 * t ** 0.5)
        np.testing.assert_allclose(conv.values, expected, rtol=1e-10,
                                   atol=1e-14)

    def test_derivative_matches_rl(self):
        grid = TimeGrid(1.0, 128)
        x = GridSeries.from_function(grid, lambda t: 1.0 + t ** 2)
        np.testing.assert_allclose(
            convolution_derivative(x, Kernel.k(0.5)).values,
            rl_derivative(x, 0.5).values, rtol=1e-10)

    def test_derivative_convexity(self):
        grid = TimeGrid(1.0, 128)
        x = GridSeries.from_function(grid, lambda t: np.sin(3.0 * t))
        sq = x.with_values(x.values ** 2)
        for kernel in (Kernel.k(0.5), Kernel.kn(0.5, 10), Kernel.kn(0.3, 1)):
            dx = convolution_derivative(x, kernel).values
            dsq = convolution_derivative(sq, kernel).values
            self.assertGreaterEqual(
                np.min((2.0 * x.values * dx - dsq)[1:]), -1e-10)

    def test_kernel_identity(self):
        # l * k = 1 for t > 0
        for alpha in (0.3, 0.5, 0.7):
            conv = convolve_kernels(Kernel.l(alpha), Kernel.k(alpha),
                                    TimeGrid(1.0, 1024))
            self.assertEqual(conv.values[0], 0.0)
            self.assertLess(np.max(np.abs(conv.values[1:] - 1.0)), 2e-3)

    def test_yosida_kernel_identity(self):
        # k_n + n (l * k_n) = n
        alpha, n = 0.5, 10
        grid = TimeGrid(1.0, 1024)
        conv = convolve_kernels(Kernel.l(alpha), Kernel.kn(alpha, n), grid)
        kn = Kernel.kn(alpha, n)(grid.nodes[1:])
        residual = np.abs(kn + n * conv.values[1:] - n) / n
        self.assertLess(np.max(residual), 1e-3)
