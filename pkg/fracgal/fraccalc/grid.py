from builtins import object
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalGridMismatchError)


class TimeGrid(object):
    """
    Uniform grid of time nodes t_m = m T / M, m = 0..M, on [0, T]

    Parameters
    ----------
    horizon : float
        The final time T
    steps : int
        The number of steps M
    """

    def __init__(self, horizon, steps):
        horizon = float(horizon)
        if not (np.isfinite(horizon) and horizon > 0.0):
            raise FracGalInvalidParameterError(
                "Time horizon must be positive ({} provided)".format(horizon))
        if int(steps) != steps or steps < 1:
            raise FracGalInvalidParameterError(
                "Number of time steps must be a positive integer ({} "
                "provided)".format(steps))
        self._horizon = horizon
        self._steps = int(steps)
        nodes = np.arange(self._steps + 1) * (horizon / self._steps)
        nodes[-1] = horizon
        nodes.setflags(write=False)
        self._nodes = nodes

    @property
    def horizon(self):
        return self._horizon

    @property
    def steps(self):
        return self._steps

    @property
    def dt(self):
        return self._horizon / self._steps

    @property
    def nodes(self):
        return self._nodes

    def __len__(self):
        return self._steps + 1

    def __eq__(self, other):
        try:
            return (self._horizon == other._horizon
                    and self._steps == other._steps)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __hash__(self):
        return hash((self._horizon, self._steps))

    def __repr__(self):
        return "TimeGrid(horizon={}, steps={})".format(self.horizon,
                                                       self.steps)

    def refined(self, factor=2):
        return type(self)(self.horizon, self.steps * factor)

    def check_same(self, other):
        if self != other:
            raise FracGalGridMismatchError(
                "Grid mismatch between {} and {}".format(self, other))


class GridSeries(object):
    """
    Samples of a scalar, vector or matrix valued function of time on the
    nodes of a TimeGrid. The first axis of 'values' runs over the nodes.

    Parameters
    ----------
    grid : TimeGrid
        The grid the series is sampled on
    values : array-like
        Values with shape (M + 1,) + shape
    """

    def __init__(self, grid, values):
        values = np.array(values, dtype=float)
        if values.ndim == 0 or values.shape[0] != len(grid):
            raise FracGalGridMismatchError(
                "Number of values ({}) does not match the number of nodes "
                "of {}".format(values.shape[:1], grid))
        if not np.all(np.isfinite(values)):
            bad = np.argwhere(~np.isfinite(values.reshape(len(grid), -1)))
            raise FracGalInvalidParameterError(
                "Non-finite values in grid series at node {}"
                .format(bad[0][0]))
        values.setflags(write=False)
        self._grid = grid
        self._values = values

    @classmethod
    def from_function(cls, grid, func):
        """
        Samples 'func' at the grid nodes. 'func' is called with the array
        of nodes and should broadcast, otherwise it is called per node
        """
        try:
            values = np.asarray(func(grid.nodes), dtype=float)
            if values.shape[:1] != (len(grid),):
                values = np.broadcast_to(values, (len(grid),) + values.shape)
        except (TypeError, ValueError):
            values = np.array([func(t) for t in grid.nodes], dtype=float)
        return cls(grid, values)

    @classmethod
    def zeros(cls, grid, shape=()):
        return cls(grid, np.zeros((len(grid),) + tuple(shape)))

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    @property
    def shape(self):
        "The shape of the value at each node"
        return self._values.shape[1:]

    def __len__(self):
        return len(self._values)

    def __getitem__(self, index):
        return self._values[index]

    def with_values(self, values):
        return type(self)(self.grid, values)

    def reflected(self):
        "The series of x(T - t)"
        return self.with_values(self._values[::-1])

    def check_same_grid(self, other):
        self.grid.check_same(other.grid)

    def __eq__(self, other):
        try:
            return (self.grid == other.grid
                    and np.array_equal(self.values, other.values))
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return "GridSeries(grid={}, shape={})".format(self.grid, self.shape)
