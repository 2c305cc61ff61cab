from builtins import object
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalGridMismatchError)
from fracgal.fraccalc import GridSeries
from fracgal.spectral import modal_norm_squares


class ModalTrajectory(object):
    """
    Modal coefficients c(t_m) = (c^1(t_m), .., c^N(t_m)) of a Galerkin
    solution u_N(t) = sum_i c^i(t) e_i at the nodes of a time grid

    Parameters
    ----------
    grid : TimeGrid
        The time grid
    values : np.ndarray
        Coefficients of shape (M + 1, N), zero at node 0
    alpha : float
        The fractional order of the problem the trajectory solves
    provenance : str
        How the trajectory was produced, one of 'picard', 'l1' or 'oracle'
    basis : SpectralBasis | None
        The basis the coefficients refer to, required for the norms
    """

    PROVENANCES = ('picard', 'l1', 'oracle')
    INITIAL_TOL = 1e-13

    def __init__(self, grid, values, alpha, provenance, basis=None):
        if provenance not in self.PROVENANCES:
            raise FracGalInvalidParameterError(
                "Unrecognised trajectory provenance '{}', can be one of '{}'"
                .format(provenance, "', '".join(self.PROVENANCES)))
        values = np.array(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        series = GridSeries(grid, values)
        if basis is not None and values.shape[1] != basis.size:
            raise FracGalGridMismatchError(
                "Trajectory has {} modes but {} has {}".format(
                    values.shape[1], basis, basis.size))
        if np.max(np.abs(values[0])) > self.INITIAL_TOL:
            raise FracGalInvalidParameterError(
                "Trajectories start from zero initial data (c(0) = {})"
                .format(values[0]))
        self._series = series
        self._alpha = float(alpha)
        self._provenance = provenance
        self._basis = basis

    @property
    def grid(self):
        return self._series.grid

    @property
    def values(self):
        return self._series.values

    @property
    def series(self):
        return self._series

    @property
    def alpha(self):
        return self._alpha

    @property
    def provenance(self):
        return self._provenance

    @property
    def basis(self):
        return self._basis

    @property
    def size(self):
        return self._series.shape[0]

    def __len__(self):
        return len(self._series)

    def mode(self, index):
        "Scalar series of the coefficient c^index (1-based)"
        return GridSeries(self.grid, self.values[:, index - 1])

    def _require_basis(self):
        if self._basis is None:
            raise FracGalInvalidParameterError(
                "Trajectory has no associated basis to compute norms in")
        return self._basis

    def norm_squares(self):
        """
        Squared L2, H1_0 and H^-1 norms of u_N(t_m) at every node
        """
        return modal_norm_squares(self.values,
                                  self._require_basis().eigenvalues)

    def l2_norms(self):
        return np.sqrt(self.norm_squares()[0])

    def h10_norms(self):
        return np.sqrt(self.norm_squares()[1])

    def embedded(self, basis):
        "Zero-pads the coefficients into a larger basis"
        own = self._require_basis()
        if not own.is_prefix_of(basis):
            raise FracGalGridMismatchError(
                "{} is not a prefix of {}".format(own, basis))
        values = np.zeros((len(self), basis.size))
        values[:, :own.size] = self.values
        return type(self)(self.grid, values, self._alpha, self._provenance,
                          basis=basis)

    def restricted(self, basis):
        own = self._require_basis()
        if not basis.is_prefix_of(own):
            raise FracGalGridMismatchError(
                "{} is not a prefix of {}".format(basis, own))
        return type(self)(self.grid, self.values[:, :basis.size],
                          self._alpha, self._provenance, basis=basis)

    def check_comparable(self, other):
        self.grid.check_same(other.grid)
        if self.size != other.size or self._basis != other._basis:
            raise FracGalGridMismatchError(
                "Trajectories are expressed in different bases ({} and {})"
                .format(self._basis, other._basis))

    def __eq__(self, other):
        try:
            return (self._series == other._series
                    and self._alpha == other._alpha
                    and self._provenance == other._provenance
                    and self._basis == other._basis)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return "ModalTrajectory({}, N={}, alpha={}, provenance='{}')".format(
            self.grid, self.size, self._alpha, self._provenance)
