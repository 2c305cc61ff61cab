from unittest import TestCase
import numpy as np
from fracgal.exprfield import CoefficientField, sup_bound, parse
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalUnknownIdentifierError)


class TestCoefficientField(TestCase):

    def test_constant(self):
        field = CoefficientField.constant(-2.0, (1.0,), 1.0)
        self.assertTrue(field.is_constant)
        self.assertEqual(field(0.3, 0.2), -2.0)
        self.assertAlmostEqual(field.sup_bound(), 2.1, places=14)
        self.assertAlmostEqual(sup_bound(field), 2.1, places=14)

    def test_sup_bound(self):
        # Maximum of |1 + t x| is attained at the corner t = 1, x = 2
        field = CoefficientField('1 + t * x', (2.0,), 1.0)
        self.assertAlmostEqual(field.sup_bound(), 1.05 * 3.0, places=12)
        self.assertEqual(field.dim, 1)
        self.assertFalse(field.is_constant)

    def test_two_dimensional(self):
        field = CoefficientField('x * y', (1.0, 3.0), 2.0)
        samples = field.tensor_samples(samples=5)
        self.assertEqual(samples.shape, (5, 5, 5))
        self.assertAlmostEqual(field.sup_bound(samples=5), 1.05 * 3.0,
                               places=12)

    def test_sample_broadcasts(self):
        field = CoefficientField('2', (1.0,), 1.0)
        x = np.linspace(0.0, 1.0, 7)
        self.assertEqual(field.sample(0.5, x).shape, (7,))

    def test_undeclared_variable(self):
        with self.assertRaises(FracGalUnknownIdentifierError):
            CoefficientField('y', (1.0,), 1.0)

    def test_invalid_box(self):
        with self.assertRaises(FracGalInvalidParameterError):
            CoefficientField('1', (1.0, 1.0, 1.0), 1.0)
        with self.assertRaises(FracGalInvalidParameterError):
            CoefficientField('1', (0.0,), 1.0)

    def test_equality(self):
        self.assertEqual(CoefficientField('t + 1', (1.0,), 1.0),
                         CoefficientField(parse('t+1'), (1,), 1))
        self.assertNotEqual(CoefficientField('t + 1', (1.0,), 1.0),
                            CoefficientField('t + 1', (2.0,), 1.0))
