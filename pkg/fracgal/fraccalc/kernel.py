"""
Convolution kernels and their product-integration weights.

A kernel kappa(s), s > 0, is convolved with functions sampled on a uniform
grid by integrating kappa exactly against the piecewise-linear interpolant
of the samples (product integration). This only needs the first two
moments of kappa,

    P0(x) = int_0^x kappa(s) ds,     P1(x) = int_0^x s kappa(s) ds,

so singular kernels (e.g. s^(alpha-1)) and kernels with thin layers at the
origin (the Yosida kernels n E_alpha(-n s^alpha)) are handled without
sampling them at s = 0.
"""
from builtins import object
import logging
from functools import lru_cache
import numpy as np
from scipy.special import roots_jacobi
from fracgal.exceptions import FracGalInvalidParameterError
from .special import gamma, mittag_leffler, MLParams
from .grid import GridSeries


logger = logging.getLogger('fracgal')


# Gauss-Legendre points per panel used for smooth parts of kernel products
GAUSS_POINTS = 4
# Number of geometric refinement levels used near the origin of kernels that
# aren't pure powers
GRADING_LEVELS = 40
# Dense (M + 1) x (M + 1) weight matrices kept per cache
WEIGHT_CACHE_SIZE = 4


class BaseKernel(object):
    """
    Base class of convolution kernels kappa(s) defined for s > 0
    """

    def __call__(self, s):
        raise NotImplementedError

    def primitive(self, x, degree):
        """
        Returns int_0^x s^degree kappa(s) ds for degree in (0, 1), evaluated
        elementwise on the array x
        """
        raise NotImplementedError

    def panel_rule(self, width, n_points=GAUSS_POINTS):
        """
        Quadrature rule (points, weights) on [0, width] that integrates
        kappa(s) g(s) for smooth g, i.e. int_0^width kappa(s) g(s) ds is
        approximated by sum(weights * g(points))
        """
        raise NotImplementedError

    @property
    def is_power(self):
        return False

    def weights(self, grid):
        """
        Product-integration matrix W of shape (M + 1, M + 1) for the grid
        such that (kappa * f)(t_m) = sum_i W[m, i] f(t_i) for piecewise
        linear f
        """
        return _cached_weights(self, grid)

    def derivative_weights(self, grid):
        """
        Matrix D of shape (M + 1, M + 1) of the exact derivative of the
        convolution of the kernel with the piecewise-linear interpolant of
        the samples,

            d/dt (kappa * f)(t_m) = kappa(t_m) f_0
                                    + sum_{j=1}^m a_{m-j} (f_j - f_{j-1}),
            a_d = (P0((d + 1) h) - P0(d h)) / h

        For a nonincreasing kernel the a_d are nonincreasing, so that
        2 f_m (D f)_m >= (D f^2)_m whenever f_0 = 0. Row 0 is a copy of row 1
        """
        return _cached_derivative_weights(self, grid)

    def _build_derivative_weights(self, grid):
        M = grid.steps
        h = grid.dt
        x = np.arange(M + 1) * h
        a = np.diff(np.asarray(self.primitive(x, 0), dtype=float)) / h
        rows = np.arange(M + 1)[:, None]
        cols = np.arange(M + 1)[None, :]
        lag = rows - cols
        D = (np.where((lag >= 0) & (cols >= 1), a[np.clip(lag, 0, M - 1)],
                      0.0)
             - np.where(lag >= 1, a[np.clip(lag - 1, 0, M - 1)], 0.0))
        D[1:, 0] += self(x[1:])
        D[0] = D[1]
        D.setflags(write=False)
        return D

    def _build_weights(self, grid):
        M = grid.steps
        h = grid.dt
        x = np.arange(M + 1) * h
        p0 = np.asarray(self.primitive(x, 0), dtype=float)
        p1 = np.asarray(self.primitive(x, 1), dtype=float)
        i0 = np.diff(p0)
        i1 = np.diff(p1)
        lower = x[:-1]
        upper = x[1:]
        # Coefficients of the samples at the near (small lag) and far (large
        # lag) ends of each lag interval [(d - 1)h, dh], d = 1..M
        near = np.zeros(M + 2)
        far = np.zeros(M + 2)
        near[1:M + 1] = (upper * i0 - i1) / h
        far[1:M + 1] = (i1 - lower * i0) / h
        rows = np.arange(M + 1)[:, None]
        cols = np.arange(M + 1)[None, :]
        lag = rows - cols
        lag_c = np.clip(lag, 0, M)
        W = (np.where(lag >= 1, far[lag_c], 0.0)
             + np.where((lag >= 0) & (cols >= 1), near[lag_c + 1], 0.0))
        W.setflags(write=False)
        return W


@lru_cache(maxsize=WEIGHT_CACHE_SIZE)
def _cached_weights(kernel, grid):
    logger.debug("Building product-integration weights for {} on {}"
                 .format(kernel, grid))
    return kernel._build_weights(grid)


@lru_cache(maxsize=WEIGHT_CACHE_SIZE)
def _cached_derivative_weights(kernel, grid):
    return kernel._build_derivative_weights(grid)


class PowerKernel(BaseKernel):
    """
    The Riemann-Liouville kernel s^(order - 1) / Gamma(order)

    Parameters
    ----------
    order : float
        Order of the fractional integral the kernel generates, in (0, 1]
    """

    def __init__(self, order):
        order = float(order)
        if not 0.0 < order <= 1.0:
            raise FracGalInvalidParameterError(
                "Power kernel order must be in (0, 1] ({} provided)"
                .format(order))
        self._order = order

    @property
    def order(self):
        return self._order

    @property
    def is_power(self):
        return True

    def __call__(self, s):
        return np.asarray(s, dtype=float) ** (self._order - 1.0) / gamma(
            self._order)

    def primitive(self, x, degree):
        x = np.asarray(x, dtype=float)
        q = self._order
        if degree == 0:
            return x ** q / gamma(q + 1.0)
        elif degree == 1:
            return x ** (q + 1.0) / ((q + 1.0) * gamma(q))
        raise FracGalInvalidParameterError(
            "Only moments of degree 0 and 1 are available ({})"
            .format(degree))

    def panel_rule(self, width, n_points=GAUSS_POINTS):
        # Gauss-Jacobi absorbs the s^(order - 1) singularity exactly
        p = self._order - 1.0
        x, w = roots_jacobi(n_points, 0.0, p)
        points = 0.5 * width * (1.0 + x)
        weights = w * (0.5 * width) ** (p + 1.0) / gamma(self._order)
        return points, weights

    def __eq__(self, other):
        return (type(self) is type(other) and self._order == other._order)

    def __hash__(self):
        return hash((type(self).__name__, self._order))

    def __repr__(self):
        return "PowerKernel(order={})".format(self._order)


class Kernel(BaseKernel):
    """
    The kernels of the fractional calculus on [0, T]

        K:      k(s) = s^-alpha / Gamma(1 - alpha)
        L:      l(s) = s^(alpha - 1) / Gamma(alpha)
        KN(n):  k_n(s) = n E_alpha(-n s^alpha)

    k generates the Riemann-Liouville derivative, d/dt (k * u), l the
    Riemann-Liouville integral, l * k = 1, and the k_n are the Yosida
    approximations of k, k_n = n s with s + n (l * s) = 1.

    Parameters
    ----------
    kind : str
        One of 'K', 'L' or 'KN'
    alpha : float
        Fractional order in (0, 1)
    n : int | None
        Index of the Yosida kernel, required for 'KN'
    """

    KINDS = ('K', 'L', 'KN')

    def __init__(self, kind, alpha, n=None):
        kind = str(kind).upper()
        if kind not in self.KINDS:
            raise FracGalInvalidParameterError(
                "Unrecognised kernel kind '{}', can be one of '{}'"
                .format(kind, "', '".join(self.KINDS)))
        alpha = float(alpha)
        if not 0.0 < alpha < 1.0:
            raise FracGalInvalidParameterError(
                "Kernel alpha must be in (0, 1) ({} provided)".format(alpha))
        if kind == 'KN':
            if n is None or int(n) != n or n < 1:
                raise FracGalInvalidParameterError(
                    "Yosida kernel index must be a positive integer ({} "
                    "provided)".format(n))
            n = int(n)
            self._power = None
        else:
            if n is not None:
                raise FracGalInvalidParameterError(
                    "Kernel index is only valid for 'KN' kernels")
            self._power = PowerKernel(1.0 - alpha if kind == 'K' else alpha)
        self._kind = kind
        self._alpha = alpha
        self._n = n

    @classmethod
    def k(cls, alpha):
        return cls('K', alpha)

    @classmethod
    def l(cls, alpha):  # noqa: E743
        return cls('L', alpha)

    @classmethod
    def kn(cls, alpha, n):
        return cls('KN', alpha, n=n)

    @property
    def kind(self):
        return self._kind

    @property
    def alpha(self):
        return self._alpha

    @property
    def n(self):
        return self._n

    @property
    def is_power(self):
        return self._power is not None

    def _ml(self, beta, z):
        return mittag_leffler(MLParams(self._alpha, beta), z)

    def __call__(self, s):
        if self._power is not None:
            return self._power(s)
        s = np.asarray(s, dtype=float)
        return self._n * self._ml(1.0, -self._n * s ** self._alpha)

    def primitive(self, x, degree):
        if self._power is not None:
            return self._power.primitive(x, degree)
        x = np.asarray(x, dtype=float)
        z = -self._n * x ** self._alpha
        if degree == 0:
            return self._n * x * self._ml(2.0, z)
        elif degree == 1:
            # int_0^x s E_a(-n s^a) ds = x^2 (E_{a,2}(z) - E_{a,3}(z))
            return self._n * x ** 2 * (self._ml(2.0, z) - self._ml(3.0, z))
        raise FracGalInvalidParameterError(
            "Only moments of degree 0 and 1 are available ({})"
            .format(degree))

    def panel_rule(self, width, n_points=GAUSS_POINTS):
        if self._power is not None:
            return self._power.panel_rule(width, n_points=n_points)
        # Geometrically graded Gauss-Legendre panels resolve the layer of
        # width n^(-1/alpha) at the origin
        x, w = np.polynomial.legendre.leggauss(n_points)
        edges = width * 2.0 ** -np.arange(GRADING_LEVELS + 1)
        edges = np.append(edges, 0.0)[::-1]
        lengths = np.diff(edges)
        points = (edges[:-1, None]
                  + 0.5 * lengths[:, None] * (1.0 + x[None, :])).ravel()
        weights = (0.5 * lengths[:, None] * w[None, :]).ravel()
        return points, weights * self(points)

    def __eq__(self, other):
        try:
            return (self._kind == other._kind and self._alpha == other._alpha
                    and self._n == other._n)
        except AttributeError:
            return False

    def __hash__(self):
        return hash((self._kind, self._alpha, self._n))

    def __repr__(self):
        if self._kind == 'KN':
            return "Kernel('KN', alpha={}, n={})".format(self._alpha,
                                                          self._n)
        return "Kernel('{}', alpha={})".format(self._kind, self._alpha)


def convolve(f, g):
    """
    Convolution (g * f)(t_m) = int_0^t_m g(t_m - tau) f(tau) dtau by
    product integration of the kernel against the piecewise-linear
    interpolant of f

    Parameters
    ----------
    f : GridSeries
        The sampled function (scalar, vector or matrix valued)
    g : BaseKernel
        The kernel

    Returns
    -------
    conv : GridSeries
        The convolution at every node (zero at node 0)
    """
    W = g.weights(f.grid)
    return f.with_values(np.tensordot(W, f.values, axes=(1, 0)))


def convolution_derivative(f, g):
    """
    Derivative d/dt (g * f)(t_m) of the convolution of the kernel with the
    piecewise-linear interpolant of f. For the kernel k of order alpha this
    is the L1 Riemann-Liouville derivative. Node 0 reports the node-1 value

    Parameters
    ----------
    f : GridSeries
        The sampled function (scalar or vector valued)
    g : BaseKernel
        The kernel

    Returns
    -------
    deriv : GridSeries
        The derivative at every node
    """
    D = g.derivative_weights(f.grid)
    return f.with_values(np.tensordot(D, f.values, axes=(1, 0)))


def convolve_kernels(a, b, grid, n_points=GAUSS_POINTS):
    """
    Convolution of two kernels, (a * b)(t_m) = int_0^t_m a(t_m - tau)
    b(tau) dtau, where both factors may be singular (or have layers) at
    their origins. The first and last panels use the kernel-weighted panel
    rules of the singular factor, interior panels Gauss-Legendre

    Parameters
    ----------
    a, b : BaseKernel
        The kernels to convolve
    grid : TimeGrid
        The grid to evaluate the convolution on

    Returns
    -------
    conv : GridSeries
        The convolution at every node (zero at node 0)
    """
    # Interior and first panel evaluations are of 'a' on the full grid, so
    # put the cheaper (power) kernel second
    if a.is_power and not b.is_power:
        a, b = b, a
    M = grid.steps
    h = grid.dt
    t = grid.nodes
    values = np.zeros(M + 1)
    if M == 0:
        return GridSeries(grid, values)
    # Node 1: a single panel singular at both ends, split at its midpoint
    pb, wb = b.panel_rule(0.5 * h, n_points)
    pa, wa = a.panel_rule(0.5 * h, n_points)
    values[1] = np.dot(wb, a(h - pb)) + np.dot(wa, b(h - pa))
    if M == 1:
        return GridSeries(grid, values)
    m = np.arange(2, M + 1)
    # Panel adjacent to tau = t_m (lag in [0, h]), singular in 'a'
    pa, wa = a.panel_rule(h, n_points)
    values[2:] += b(t[m][:, None] - pa[None, :]).dot(wa)
    # Panel adjacent to tau = 0, singular in 'b'
    pb, wb = b.panel_rule(h, n_points)
    values[2:] += a(t[m][:, None] - pb[None, :]).dot(wb)
    # Interior panels j = 1..m-2, lag index d = m - j >= 2
    x, w = np.polynomial.legendre.leggauss(n_points)
    theta = 0.5 * (1.0 + x)
    omega = 0.5 * w
    d = np.arange(M + 1)
    for th, om in zip(theta, omega):
        a_q = np.zeros(M + 1)
        a_q[2:] = a((d[2:] - th) * h)
        b_q = np.zeros(M + 1)
        b_q[1:] = om * b((d[1:] + th) * h)
        values += h * np.convolve(a_q, b_q)[:M + 1]
    return GridSeries(grid, values)
