"""
Discrete Riemann-Liouville integrals and Riemann-Liouville/Caputo
derivatives on uniform time grids.

Integrals use product integration of the weakly singular weight against the
piecewise-linear interpolant of the data. Derivatives use the L1 scheme.
Derivatives are undefined at the singular end node (t = 0 for right-handed,
t = T for left-handed operators), by convention the value at the adjacent
node is reported there.
"""
from functools import lru_cache
import numpy as np
from scipy.integrate import trapezoid
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalGridMismatchError)
from .special import gamma
from .kernel import PowerKernel, convolve, WEIGHT_CACHE_SIZE


def _check_order(alpha, allow_one=False):
    alpha = float(alpha)
    upper_ok = alpha <= 1.0 if allow_one else alpha < 1.0
    if not (alpha > 0.0 and upper_ok):
        raise FracGalInvalidParameterError(
            "Fractional order must be in (0, {}) ({} provided)".format(
                '1]' if allow_one else '1', alpha))
    return alpha


def rl_integral(x, alpha):
    """
    Right-handed Riemann-Liouville integral

        (I^alpha_{0+} x)(t) = 1/Gamma(alpha) int_0^t (t - tau)^(alpha-1)
                              x(tau) dtau

    at every node, exact for piecewise-linear x. Node 0 is 0.

    Parameters
    ----------
    x : GridSeries
        The integrand
    alpha : float
        Order of the integral in (0, 1]
    """
    alpha = _check_order(alpha, allow_one=True)
    return convolve(x, PowerKernel(alpha))


def rl_integral_left(x, alpha):
    """
    Left-handed Riemann-Liouville integral

        (I^alpha_{T-} x)(t) = 1/Gamma(alpha) int_t^T (tau - t)^(alpha-1)
                              x(tau) dtau

    computed as the reflection of the right-handed integral of x(T - t).
    Node M is 0.
    """
    return rl_integral(x.reflected(), alpha).reflected()


@lru_cache(maxsize=WEIGHT_CACHE_SIZE)
def l1_matrix(grid, alpha):
    """
    Matrix of the L1 discretisation of the Caputo derivative,

        D[m] = dt^-alpha / Gamma(2 - alpha)
               sum_{j=0}^{m-1} b_j (x_{m-j} - x_{m-j-1}),
        b_j = (j + 1)^(1-alpha) - j^(1-alpha)

    with row 0 a copy of row 1
    """
    M = grid.steps
    w0 = grid.dt ** -alpha / gamma(2.0 - alpha)
    j = np.arange(M + 1, dtype=float)
    b = (j + 1.0) ** (1.0 - alpha) - j ** (1.0 - alpha)
    rows = np.arange(M + 1)[:, None]
    cols = np.arange(M + 1)[None, :]
    lag = rows - cols
    lag_c = np.clip(lag, 0, M)
    lag_prev = np.clip(lag - 1, 0, M)
    D = w0 * (np.where((lag >= 0) & (cols >= 1), b[lag_c], 0.0)
              - np.where(lag >= 1, b[lag_prev], 0.0))
    D[0] = D[1]
    D.setflags(write=False)
    return D


def _check_steps(x):
    if x.grid.steps < 2:
        raise FracGalInvalidParameterError(
            "Fractional derivatives require at least 2 time steps ({} "
            "provided)".format(x.grid.steps))


def caputo_derivative(x, alpha):
    """
    Right-handed Caputo derivative ^C D^alpha_{0+} x by the L1 scheme,
    error O(dt^(2 - alpha)) for smooth x. Node 0 reports the node-1 value.

    Parameters
    ----------
    x : GridSeries
        The function to differentiate
    alpha : float
        Order in (0, 1)
    """
    alpha = _check_order(alpha)
    _check_steps(x)
    D = l1_matrix(x.grid, alpha)
    return x.with_values(np.tensordot(D, x.values, axes=(1, 0)))


def rl_derivative(x, alpha):
    """
    Right-handed Riemann-Liouville derivative via the splitting for
    absolutely continuous functions

        ^RL D^alpha_{0+} x(t) = ^C D^alpha_{0+} x(t)
                                + x(0) t^-alpha / Gamma(1 - alpha)

    Node 0 reports the node-1 value.
    """
    alpha = _check_order(alpha)
    caputo = caputo_derivative(x, alpha)
    t = x.grid.nodes.copy()
    t[0] = t[1]
    singular = t ** -alpha / gamma(1.0 - alpha)
    x0 = x.values[0]
    shape = (len(t),) + (1,) * x0.ndim
    return x.with_values(caputo.values + singular.reshape(shape) * x0)


def caputo_derivative_left(x, alpha):
    """
    Left-handed Caputo derivative ^C D^alpha_{T-} x, the reflection of the
    right-handed derivative of x(T - t). Node M reports the node M-1 value.
    """
    return caputo_derivative(x.reflected(), alpha).reflected()


def rl_derivative_left(x, alpha):
    """
    Left-handed Riemann-Liouville derivative

        ^RL D^alpha_{T-} x(t) = 1/Gamma(1 - alpha) [x(T) (T - t)^-alpha
                                - int_t^T x'(tau) (tau - t)^-alpha dtau]

    computed by reflection. Node M reports the node M-1 value.
    """
    return rl_derivative(x.reflected(), alpha).reflected()


def _check_pair(f, g):
    if f.grid != g.grid:
        raise FracGalGridMismatchError(
            "Series are defined on different grids ({} and {})"
            .format(f.grid, g.grid))
    if f.shape != () or g.shape != ():
        raise FracGalInvalidParameterError(
            "Pairings are only defined for scalar series ({} and {})"
            .format(f.shape, g.shape))


def _integrate(values, grid):
    return trapezoid(values, dx=grid.dt)


def integration_by_parts_residual(f, g, alpha):
    """
    Residual of the fractional integration by parts identity

        int_0^T (I^alpha_{0+} f) g dt = int_0^T f (I^alpha_{T-} g) dt

    with trapezoidal outer quadrature

    Parameters
    ----------
    f, g : GridSeries
        Scalar series on the same grid
    alpha : float
        Order in (0, 1]

    Returns
    -------
    residual : float
        |int (I f) g - int f (I_{T-} g)|
    """
    _check_pair(f, g)
    lhs = _integrate(rl_integral(f, alpha).values * g.values, f.grid)
    rhs = _integrate(f.values * rl_integral_left(g, alpha).values, f.grid)
    return abs(lhs - rhs)


def derivative_by_parts_residual(f, g, alpha):
    """
    Residual of the integration by parts identity for Riemann-Liouville
    derivatives

        int_0^T f ^RL D^alpha_{0+} g dt = int_0^T g ^RL D^alpha_{T-} f dt

    meaningful for f vanishing at T and g vanishing at 0
    """
    _check_pair(f, g)
    lhs = _integrate(f.values * rl_derivative(g, alpha).values, f.grid)
    rhs = _integrate(g.values * rl_derivative_left(f, alpha).values, f.grid)
    return abs(lhs - rhs)


def weak_derivative_residual(u, phi, alpha, atol=1e-12):
    """
    Residual of the weak Riemann-Liouville derivative pairing

        int_0^T phi ^RL D^alpha_{0+} u dt = int_0^T (^RL D^alpha_{T-} phi) u dt

    for a test function phi vanishing at both ends of the interval
    """
    if abs(phi.values[0]) > atol or abs(phi.values[-1]) > atol:
        raise FracGalInvalidParameterError(
            "Test functions must vanish at both ends of the interval "
            "(phi(0)={}, phi(T)={})".format(phi.values[0], phi.values[-1]))
    return derivative_by_parts_residual(phi, u, alpha)


def convexity_defect(x, alpha):
    """
    The defect 2 x ^C D^alpha x - ^C D^alpha (x^2) of the convexity
    inequality for the Caputo derivative, nonnegative for the continuous
    operator. Vector-valued series are summed over their components, i.e.
    the defect of (x, D x) >= 1/2 D |x|^2
    """
    alpha = _check_order(alpha)
    dx = caputo_derivative(x, alpha).values
    sq = x.with_values(x.values ** 2)
    dsq = caputo_derivative(sq, alpha).values
    defect = 2.0 * x.values * dx - dsq
    if defect.ndim > 1:
        defect = defect.reshape(len(x), -1).sum(axis=1)
    return x.with_values(defect)
