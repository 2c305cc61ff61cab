"""
Closed-form solutions of scalar problems with constant coefficients,
used as oracles for the solvers
"""
import numpy as np
from fracgal.exceptions import FracGalInvalidParameterError
from fracgal.fraccalc import (
    GridSeries, MLParams, mittag_leffler, convolve)
from fracgal.fraccalc.kernel import BaseKernel
from .trajectory import ModalTrajectory


class RelaxationKernel(BaseKernel):
    """
    The resolvent kernel s^(alpha-1) E_{alpha,alpha}(-lam s^alpha) of the
    scalar problem ^C D^alpha c + lam c = f. A negative lam gives the
    growing kernel of the comparison principle

    Parameters
    ----------
    alpha : float
        Fractional order in (0, 1)
    lam : float
        Real decay rate
    """

    def __init__(self, alpha, lam):
        alpha = float(alpha)
        if not 0.0 < alpha < 1.0:
            raise FracGalInvalidParameterError(
                "Fractional order must be in (0, 1) ({} provided)"
                .format(alpha))
        self._alpha = alpha
        self._lam = float(lam)

    @property
    def alpha(self):
        return self._alpha

    @property
    def lam(self):
        return self._lam

    def _ml(self, beta, z):
        return mittag_leffler(MLParams(self._alpha, beta), z)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        return s ** (self._alpha - 1.0) * self._ml(
            self._alpha, -self._lam * s ** self._alpha)

    def primitive(self, x, degree):
        x = np.asarray(x, dtype=float)
        a = self._alpha
        z = -self._lam * x ** a
        if degree == 0:
            return x ** a * self._ml(a + 1.0, z)
        elif degree == 1:
            # 1 / (Gamma(b) (b + 1)) = 1 / Gamma(b + 1) - 1 / Gamma(b + 2)
            return x ** (a + 1.0) * (self._ml(a + 1.0, z)
                                     - self._ml(a + 2.0, z))
        raise FracGalInvalidParameterError(
            "Only moments of degree 0 and 1 are available ({})"
            .format(degree))

    def __eq__(self, other):
        try:
            return (type(self) is type(other) and self._alpha == other._alpha
                    and self._lam == other._lam)
        except AttributeError:
            return False

    def __hash__(self):
        return hash((type(self).__name__, self._alpha, self._lam))

    def __repr__(self):
        return "RelaxationKernel(alpha={}, lam={})".format(self._alpha,
                                                           self._lam)


def variation_of_constants(lam, f, alpha):
    """
    Solution of ^C D^alpha c + lam c = f, c(0) = 0,

        c(t) = int_0^t (t - tau)^(alpha-1) E_{alpha,alpha}(-lam (t -
               tau)^alpha) f(tau) dtau

    by product integration of the kernel against the piecewise-linear
    interpolant of f

    Parameters
    ----------
    lam : float
        The (real) coefficient, any sign
    f : GridSeries
        The scalar forcing
    alpha : float
        Fractional order in (0, 1)

    Returns
    -------
    c : GridSeries
        The solution at the nodes of the forcing's grid
    """
    return convolve(f, RelaxationKernel(alpha, lam))


def relaxation_solution(lam, q, alpha, grid):
    """
    The solution (q / lam) (1 - E_alpha(-lam t^alpha)) of the scalar
    problem with constant forcing q (q t^alpha / Gamma(alpha + 1) if
    lam = 0)
    """
    t = grid.nodes
    if lam == 0.0:
        values = q * mittag_leffler(MLParams(alpha, alpha + 1.0), 0.0) * (
            t ** alpha)
    else:
        values = (q / lam) * (1.0 - mittag_leffler(MLParams(alpha),
                                                    -lam * t ** alpha))
    return GridSeries(grid, values)


def oracle_trajectory(lam, f, alpha, basis=None):
    "The variation-of-constants solution wrapped as a one-mode trajectory"
    c = variation_of_constants(lam, f, alpha)
    return ModalTrajectory(f.grid, c.values, alpha, 'oracle', basis=basis)
