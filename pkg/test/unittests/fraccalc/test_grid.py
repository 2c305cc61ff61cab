from unittest import TestCase
import numpy as np
from fracgal.fraccalc import TimeGrid, GridSeries
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalGridMismatchError)


class TestTimeGrid(TestCase):

    def test_nodes(self):
        grid = TimeGrid(2.0, 8)
        self.assertEqual(len(grid), 9)
        self.assertEqual(grid.dt, 0.25)
        self.assertEqual(grid.nodes[0], 0.0)
        self.assertEqual(grid.nodes[-1], 2.0)
        np.testing.assert_allclose(np.diff(grid.nodes), 0.25)

    def test_invalid(self):
        for horizon, steps in ((0.0, 4), (-1.0, 4), (float('inf'), 4),
                               (1.0, 0), (1.0, 2.5)):
            with self.assertRaises(FracGalInvalidParameterError):
                TimeGrid(horizon, steps)

    def test_equality(self):
        self.assertEqual(TimeGrid(1.0, 4), TimeGrid(1, 4))
        self.assertNotEqual(TimeGrid(1.0, 4), TimeGrid(1.0, 8))
        self.assertEqual(TimeGrid(1.0, 4).refined(), TimeGrid(1.0, 8))
        self.assertEqual(len({TimeGrid(1.0, 4), TimeGrid(1.0, 4)}), 1)
        with self.assertRaises(FracGalGridMismatchError):
            TimeGrid(1.0, 4).check_same(TimeGrid(2.0, 4))


class TestGridSeries(TestCase):

    def setUp(self):
        self.grid = TimeGrid(1.0, 4)

    def test_from_function(self):
        series = GridSeries.from_function(self.grid, lambda t: t ** 2)
        np.testing.assert_allclose(series.values, self.grid.nodes ** 2)
        const = GridSeries.from_function(self.grid, lambda t: 3.0)
        np.testing.assert_array_equal(const.values, np.full(5, 3.0))

    def test_shapes(self):
        series = GridSeries.zeros(self.grid, (3,))
        self.assertEqual(series.shape, (3,))
        self.assertEqual(len(series), 5)
        with self.assertRaises(FracGalGridMismatchError):
            GridSeries(self.grid, np.zeros(4))

    def test_non_finite(self):
        values = np.zeros(5)
        values[2] = float('nan')
        with self.assertRaises(FracGalInvalidParameterError):
            GridSeries(self.grid, values)

    def test_read_only(self):
        series = GridSeries.zeros(self.grid)
        with self.assertRaises(ValueError):
            series.values[0] = 1.0

    def test_reflected(self):
        series = GridSeries.from_function(self.grid, lambda t: t)
        np.testing.assert_allclose(series.reflected().values,
                                   1.0 - self.grid.nodes, atol=1e-15)
        self.assertEqual(series.reflected().reflected(), series)
