import math
from unittest import TestCase
import numpy as np
from scipy.special import erfcx
from fracgal.fraccalc import MLParams, mittag_leffler, gamma
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalOverflowError)


class TestMLParams(TestCase):

    def test_defaults(self):
        p = MLParams(0.5)
        self.assertEqual(p.alpha, 0.5)
        self.assertEqual(p.beta, 1.0)
        self.assertEqual(p.tol, MLParams.DEFAULT_TOL)

    def test_invalid(self):
        for args in ((0.0,), (1.5,), (-0.2,), (0.5, 0.0), (0.5, -1.0),
                     (0.5, 1.0, 0.0), (0.5, 1.0, 1.0)):
            with self.assertRaises(FracGalInvalidParameterError):
                MLParams(*args)

    def test_equality(self):
        self.assertEqual(MLParams(0.5, 2.0), MLParams(0.5, 2.0))
        self.assertNotEqual(MLParams(0.5, 2.0), MLParams(0.5, 1.0))
        self.assertEqual(MLParams(0.5).with_beta(2.0), MLParams(0.5, 2.0))


class TestMittagLeffler(TestCase):

    def test_exponential(self):
        p = MLParams(1.0, 1.0)
        for z in np.linspace(-30.0, 30.0, 101):
            self.assertAlmostEqual(mittag_leffler(p, z) / math.exp(z), 1.0,
                                   places=12)
        self.assertAlmostEqual(mittag_leffler(p, 1.0), math.e, places=14)

    def test_zero_argument(self):
        self.assertAlmostEqual(mittag_leffler(MLParams(0.5, 1.5), 0.0),
                               1.0 / gamma(1.5), places=15)
        self.assertEqual(mittag_leffler(MLParams(0.3), 0.0), 1.0)

    def test_half_order_negative(self):
        # E_{1/2}(-x) = exp(x^2) erfc(x)
        p = MLParams(0.5)
        x = np.linspace(0.0, 5.0, 51)
        np.testing.assert_allclose(mittag_leffler(p, -x), erfcx(x),
                                   rtol=1e-10)

    def test_half_order_positive(self):
        # E_{1/2}(x) = exp(x^2) erfc(-x)
        p = MLParams(0.5)
        for x in (0.5, 1.0, 3.0, 10.0):
            self.assertAlmostEqual(mittag_leffler(p, x) / erfcx(-x), 1.0,
                                   places=10)

    def test_half_order_asymptotic(self):
        p = MLParams(0.5)
        for x in (45.0, 100.0, 1000.0):
            self.assertAlmostEqual(mittag_leffler(p, -x) / erfcx(x), 1.0,
                                   places=10)

    def test_integer_beta(self):
        # E_{1,1}(z) with integer beta reduction: E_{1,2}(z) = (e^z - 1) / z
        p = MLParams(1.0, 2.0)
        for z in (-5.0, -0.5, 0.5, 2.0):
            self.assertAlmostEqual(mittag_leffler(p, z),
                                   math.expm1(z) / z, places=12)

    def test_completely_monotone(self):
        s = np.linspace(0.0, 35.0, 71)
        for alpha in (0.3, 0.5, 0.7):
            values = mittag_leffler(MLParams(alpha), -s)
            self.assertTrue(np.all(values > 0.0))
            self.assertTrue(np.all(values <= 1.0))
            self.assertTrue(np.all(np.diff(values) < 0.0))

    def test_vectorised(self):
        p = MLParams(0.7, 1.2)
        z = np.array([[-2.0, 0.0], [0.5, 1.5]])
        values = mittag_leffler(p, z)
        self.assertEqual(values.shape, (2, 2))
        for idx in np.ndindex(z.shape):
            self.assertEqual(values[idx], mittag_leffler(p, z[idx]))

    def test_overflow(self):
        with self.assertRaises(FracGalOverflowError):
            mittag_leffler(MLParams(0.5), 30.0)
        with self.assertRaises(FracGalOverflowError):
            mittag_leffler(MLParams(1.0), 800.0)

    def test_non_finite(self):
        with self.assertRaises(FracGalInvalidParameterError):
            mittag_leffler(MLParams(0.5), float('nan'))
