from builtins import object
import logging
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalGridMismatchError)
from fracgal.fraccalc import GridSeries
from fracgal.spectral import FormAssembler

logger = logging.getLogger('fracgal')


class FractionalIVP(object):
    """
    The Galerkin system

        ^C D^alpha c(t) + A(t) c(t) = f(t),    c(0) = 0

    with A and f sampled at the nodes of a time grid

    Parameters
    ----------
    alpha : float
        Fractional order in (0, 1)
    A : GridSeries
        Matrix-valued series of shape (M + 1, N, N)
    f : GridSeries
        Vector-valued series of shape (M + 1, N)
    basis : SpectralBasis | None
        The basis the system was assembled on, passed on to trajectories
    """

    def __init__(self, alpha, A, f, basis=None):
        alpha = float(alpha)
        if not 0.0 < alpha < 1.0:
            raise FracGalInvalidParameterError(
                "Fractional order must be in (0, 1) ({} provided)"
                .format(alpha))
        A.check_same_grid(f)
        if A.values.ndim == 1:
            A = A.with_values(A.values[:, None, None])
        if f.values.ndim == 1:
            f = f.with_values(f.values[:, None])
        N = f.shape[0] if f.shape else 0
        if len(f.shape) != 1 or A.shape != (N, N):
            raise FracGalGridMismatchError(
                "Matrix series of shape {} is not compatible with forcing "
                "series of shape {}".format(A.shape, f.shape))
        if basis is not None and basis.size != N:
            raise FracGalGridMismatchError(
                "System dimension {} does not match {}".format(N, basis))
        self._alpha = alpha
        self._A = A
        self._f = f
        self._basis = basis

    @classmethod
    def scalar(cls, alpha, grid, lam, forcing):
        """
        The scalar problem ^C D^alpha c + lam c = f

        Parameters
        ----------
        lam : float | callable
            Constant or function of time
        forcing : float | callable | GridSeries
            Constant, function of time or sampled forcing
        """
        A = GridSeries.from_function(
            grid, lam if callable(lam) else (lambda t: np.full_like(t, lam)))
        if not isinstance(forcing, GridSeries):
            forcing = GridSeries.from_function(
                grid, forcing if callable(forcing)
                else (lambda t: np.full_like(t, forcing)))
        return cls(alpha, A, forcing)

    @property
    def alpha(self):
        return self._alpha

    @property
    def grid(self):
        return self._f.grid

    @property
    def A(self):
        return self._A

    @property
    def f(self):
        return self._f

    @property
    def basis(self):
        return self._basis

    @property
    def dim(self):
        return self._f.shape[0]

    def operator_norms(self):
        "Operator 2-norm |A(t_m)| at every node"
        return np.linalg.norm(self._A.values, ord=2, axis=(1, 2))

    def max_operator_norm(self):
        "M_A = max_m |A(t_m)|"
        return float(np.max(self.operator_norms()))

    def __repr__(self):
        return "FractionalIVP(alpha={}, N={}, {})".format(
            self._alpha, self.dim, self.grid)


def galerkin_ivp(alpha, grid, basis, coeffs, forcing, quad=None):
    """
    Assembles the Galerkin system of the problem on the basis at every node
    of the grid

    Parameters
    ----------
    alpha : float
        Fractional order
    grid : TimeGrid
        The time grid
    basis : SpectralBasis
        The Galerkin basis
    coeffs : CoefficientSet
        Coefficients of the elliptic operator
    forcing : ModalForcing
        The forcing expansion
    quad : QuadratureRule | None
        Spatial quadrature (default rule for the basis if None)

    Returns
    -------
    ivp : FractionalIVP
        The assembled system
    """
    A, f = FormAssembler(basis, coeffs, quad=quad).series(grid, forcing)
    return FractionalIVP(alpha, A, f, basis=basis)
