"""
Yosida approximations k_n(t) = n E_alpha(-n t^alpha) of the kernel
k(t) = t^-alpha / Gamma(1 - alpha) of the Riemann-Liouville derivative.

With s = k_n / n and l(t) = t^(alpha-1) / Gamma(alpha),

    s + n (l * s) = 1,      l * k = 1

and d/dt (k_n * u) approaches d/dt (k * u) as n grows, which is measured on
computed trajectories by

    D_n = |d/dt (k_n * u) - d/dt (k * u)|    (discrete L2, H^-1 in space)
    h_n = int_0^T |(d/dt ((k_n - k) * u), u)| dt
"""
from builtins import object
import logging
import numpy as np
from scipy.integrate import trapezoid
from fracgal.exceptions import FracGalInvalidParameterError
from fracgal.fraccalc import (
    TimeGrid, GridSeries, Kernel, convolve_kernels, convolution_derivative)
from fracgal.processor import SingleProc
from .report import EstimateEntry
from .estimates import CONVEXITY_REL_TOL
from .galerkin import check_increasing

logger = logging.getLogger('fracgal')


# Gauss-Legendre points per panel of the kernel identities. The product
# rules are scale invariant so their error doesn't decay with the step
IDENTITY_GAUSS_POINTS = 8


def kernel_identity_residual(alpha, steps, horizon=1.0,
                             n_points=IDENTITY_GAUSS_POINTS):
    """
    max_m |(l * k)(t_m) - 1| over the nodes m >= 1 of a uniform grid

    Parameters
    ----------
    alpha : float
        Fractional order in (0, 1)
    steps : int
        Number of time steps M
    horizon : float
        Final time
    n_points : int
        Gauss points per panel
    """
    grid = TimeGrid(horizon, steps)
    conv = convolve_kernels(Kernel.l(alpha), Kernel.k(alpha), grid,
                            n_points=n_points)
    return float(np.max(np.abs(conv.values[1:] - 1.0)))


def yosida_identity_residual(alpha, n, grid,
                             n_points=IDENTITY_GAUSS_POINTS):
    "max_m |s(t_m) + n (l * s)(t_m) - 1| for s = E_alpha(-n t^alpha)"
    kn = Kernel.kn(alpha, n)
    s = kn(grid.nodes) / n
    conv = convolve_kernels(Kernel.l(alpha), kn, grid, n_points=n_points)
    return float(np.max(np.abs(s + conv.values - 1.0)))


def _as_modal(u):
    """
    The coefficient series of a trajectory and the eigenvalues weighting
    its H^-1 norm (unit weights for scalar series)
    """
    if isinstance(u, GridSeries):
        series = u if u.shape else u.with_values(u.values[:, None])
        return series, np.ones(series.shape[0])
    if u.basis is not None:
        return u.series, u.basis.eigenvalues
    return u.series, np.ones(u.size)


class YosidaEntry(object):
    """
    Measurements for a single Yosida index n

    Parameters
    ----------
    n : int
        The index
    kernel_residual : float
        sup |s + n (l * s) - 1|
    distance : float
        D_n
    h : float
        h_n
    """

    def __init__(self, n, kernel_residual, distance, h):
        self._n = n
        self._kernel_residual = float(kernel_residual)
        self._distance = float(distance)
        self._h = float(h)

    @property
    def n(self):
        return self._n

    @property
    def kernel_residual(self):
        return self._kernel_residual

    @property
    def distance(self):
        return self._distance

    @property
    def h(self):
        return self._h

    def __eq__(self, other):
        try:
            return (self._n == other._n
                    and self._kernel_residual == other._kernel_residual
                    and self._distance == other._distance
                    and self._h == other._h)
        except AttributeError:
            return False

    def __repr__(self):
        return ("YosidaEntry(n={}, kernel_residual={}, distance={}, h={})"
                .format(self._n, self._kernel_residual, self._distance,
                        self._h))


class YosidaStudy(object):
    """
    The Yosida measurements along a strictly increasing list of indices
    """

    def __init__(self, alpha, entries):
        check_increasing([e.n for e in entries], 'Yosida indices')
        self._alpha = alpha
        self._entries = list(entries)

    @property
    def alpha(self):
        return self._alpha

    @property
    def entries(self):
        return self._entries

    @property
    def n_list(self):
        return [e.n for e in self._entries]

    @property
    def kernel_residuals(self):
        return [e.kernel_residual for e in self._entries]

    @property
    def distances(self):
        return [e.distance for e in self._entries]

    @property
    def h_values(self):
        return [e.h for e in self._entries]

    def is_decreasing(self, column='h'):
        "Whether 'h' or 'distance' strictly decreases along the indices"
        values = getattr(self, {'h': 'h_values',
                                'distance': 'distances'}[column])
        return all(b < a for a, b in zip(values[:-1], values[1:]))

    def rows(self):
        "(n, kernel residual, D_n, h_n) per index"
        return [(e.n, e.kernel_residual, e.distance, e.h)
                for e in self._entries]

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return "YosidaStudy(alpha={}, n={})".format(self._alpha,
                                                    self.n_list)


def yosida_entry(u, alpha, n):
    """
    Measures the Yosida approximation of index n on the trajectory u

    Parameters
    ----------
    u : ModalTrajectory | GridSeries
        Trajectory vanishing at t = 0
    alpha : float
        Fractional order
    n : int
        Yosida index

    Returns
    -------
    entry : YosidaEntry
        The measurements
    """
    series, eigenvalues = _as_modal(u)
    grid = series.grid
    kn = Kernel.kn(alpha, n)
    diff = (convolution_derivative(series, kn).values
            - convolution_derivative(series, Kernel.k(alpha)).values)
    # Node 0 of the derivatives is a copy of node 1 and isn't measured
    diff[0] = 0.0
    dual_sq = (diff ** 2 / eigenvalues).sum(axis=1)
    distance = np.sqrt(trapezoid(dual_sq, dx=grid.dt))
    pairing = np.abs((diff * series.values).sum(axis=1))
    h = trapezoid(pairing, dx=grid.dt)
    return YosidaEntry(n, yosida_identity_residual(alpha, n, grid),
                       distance, h)


def yosida_study(u, alpha, n_list, processor=None):
    """
    Measures the Yosida approximations of each index in n_list on the
    trajectory u

    Parameters
    ----------
    u : ModalTrajectory | GridSeries
        Trajectory vanishing at t = 0
    alpha : float
        Fractional order
    n_list : list[int]
        Strictly increasing positive indices
    processor : Processor | None
        Runs the indices (sequentially if None)

    Returns
    -------
    study : YosidaStudy
        The measurements
    """
    n_list = check_increasing(n_list, 'Yosida indices')
    if any(int(n) != n or n < 1 for n in n_list):
        raise FracGalInvalidParameterError(
            "Yosida indices must be positive integers ({} provided)"
            .format(n_list))
    if processor is None:
        processor = SingleProc()
    entries = processor.map(lambda n: yosida_entry(u, alpha, int(n)),
                            n_list, desc='Yosida indices')
    study = YosidaStudy(alpha, entries)
    logger.info("Yosida study of {}: h = {}".format(u, study.h_values))
    return study


def yosida_convexity_check(u, alpha, n, name=None):
    """
    1/2 d/dt (k_n * |u|^2) <= (d/dt (k_n * u), u) at the nodes m >= 1,
    exact for the piecewise-linear derivative weights of the nonincreasing
    kernel k_n when u(0) = 0. Reports the largest violation against a
    round-off allowance
    """
    series, _ = _as_modal(u)
    kn = Kernel.kn(alpha, n)
    du = convolution_derivative(series, kn).values
    sq = series.with_values((series.values ** 2).sum(axis=1))
    dsq = convolution_derivative(sq, kn).values
    violation = 0.5 * dsq - (du * series.values).sum(axis=1)
    scale = float(np.max(np.abs(dsq)))
    return EstimateEntry(
        name if name is not None else 'yosida_convexity_n{}'.format(n),
        max(0.0, float(np.max(violation[1:]))),
        CONVEXITY_REL_TOL * (1.0 + scale), constants={'n': n})
