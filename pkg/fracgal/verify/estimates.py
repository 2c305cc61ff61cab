"""
A priori estimates of Galerkin solutions, evaluated on computed
trajectories.

With the Garding constants beta, nu (a(v, v) >= beta |Dv|^2 - nu |v|^2),
the continuity constant C2 and F = sup_t |f(t)|_{H^-1}:

    sup_t |u_N(t)|^2      <= T^alpha E_{alpha,alpha+1}(2 nu T^alpha)
                             F^2 / (2 beta)
    beta int |Du_N|^2     <= T F^2 / beta + 2 nu int |u_N|^2
    |D^alpha u_N(t)|_{H^-1} <= C2 |Du_N(t)| + |f(t)|_{H^-1}

and the comparison bound the first of these is derived from,

    |u_N(t)|^2 <= int_0^t (t - s)^(alpha-1)
                  E_{alpha,alpha}(2 nu (t - s)^alpha) |f(s)|_{H^-1}^2
                  / (2 beta) ds
"""
import logging
import numpy as np
from scipy.integrate import trapezoid
from fracgal.exceptions import FracGalGridMismatchError
from fracgal.fraccalc import (
    MLParams, mittag_leffler, convexity_defect, caputo_derivative)
from fracgal.fode import variation_of_constants
from .report import EstimateEntry

logger = logging.getLogger('fracgal')


# Relative round-off allowance of the discrete convexity inequality
CONVEXITY_REL_TOL = 1e-10
DEFAULT_SAMPLES = 100


def dual_norms(values, basis):
    "|g(t_m)|_{H^-1} of modal vectors g(t_m) (rows of 'values')"
    values = np.asarray(values, dtype=float)
    return np.sqrt((values ** 2 / basis.eigenvalues).sum(axis=-1))


def _check_series(traj, series):
    traj.grid.check_same(series.grid)
    if series.shape[:1] != (traj.size,):
        raise FracGalGridMismatchError(
            "Series of shape {} does not match trajectory with {} modes"
            .format(series.shape, traj.size))


def _constants(extra, **kwargs):
    constants = dict(extra) if extra else {}
    constants.update(kwargs)
    return constants


def energy_bound_check(traj, beta, nu, f_norm, constants=None,
                       name='energy_bound'):
    """
    sup_m |u_N(t_m)|_L2^2 <= T^alpha E_{alpha,alpha+1}(2 nu T^alpha)
    f_norm^2 / (2 beta)

    Parameters
    ----------
    traj : ModalTrajectory
        The Galerkin solution, with its basis
    beta, nu : float
        Garding constants
    f_norm : float
        sup_t |f(t)|_{H^-1}
    constants : dict | None
        Further constants to record with the entry

    Returns
    -------
    entry : EstimateEntry
        The check
    """
    alpha = traj.alpha
    T = traj.grid.horizon
    growth = float(mittag_leffler(MLParams(alpha, alpha + 1.0),
                                  2.0 * nu * T ** alpha))
    lhs = float(np.max(traj.norm_squares()[0]))
    rhs = T ** alpha * growth * f_norm ** 2 / (2.0 * beta)
    return EstimateEntry(name, lhs, rhs, constants=_constants(
        constants, beta=beta, nu=nu, f_norm=f_norm))


def h1_bound_check(traj, beta, nu, f_norm, constants=None, name='h1_bound'):
    """
    beta int_0^T |Du_N|^2 dt <= T f_norm^2 / beta + 2 nu int_0^T |u_N|^2 dt,
    both integrals by the trapezoidal rule
    """
    l2_sq, h10_sq, _ = traj.norm_squares()
    dt = traj.grid.dt
    T = traj.grid.horizon
    lhs = beta * trapezoid(h10_sq, dx=dt)
    rhs = T * f_norm ** 2 / beta + 2.0 * nu * trapezoid(l2_sq, dx=dt)
    return EstimateEntry(name, lhs, rhs, constants=_constants(
        constants, beta=beta, nu=nu, f_norm=f_norm))


def dual_derivative_bound_check(traj, A, f, C2, constants=None,
                                name='dual_derivative_bound'):
    """
    Bounds on the dual norm of the fractional derivative of the Galerkin
    solution, which by the Galerkin identity is |f(t_m) - A(t_m) c(t_m)|
    in H^-1 on the modal space:

        pointwise:  |f - A c|_{H^-1} <= C2 |Du_N| + |f|_{H^-1}
                    (reported at the node with the smallest margin)
        aggregate:  int |f - A c|_{H^-1}^2
                        <= 2 C2^2 int |Du_N|^2 + 2 int |f|_{H^-1}^2

    Parameters
    ----------
    traj : ModalTrajectory
        The Galerkin solution
    A : GridSeries
        Stiffness matrices of the system
    f : GridSeries
        Load vectors of the system
    C2 : float
        Continuity constant of the bilinear form

    Returns
    -------
    entries : list[EstimateEntry]
        The pointwise and the aggregated checks
    """
    _check_series(traj, A)
    _check_series(traj, f)
    basis = traj.basis
    c = traj.values
    residual = f.values - np.einsum('mij,mj->mi', A.values, c)
    lhs = dual_norms(residual, basis)
    h10 = traj.h10_norms()
    f_dual = dual_norms(f.values, basis)
    rhs = C2 * h10 + f_dual
    worst = int(np.argmin(rhs - lhs))
    dt = traj.grid.dt
    pointwise = EstimateEntry(
        name, lhs[worst], rhs[worst], constants=_constants(
            constants, C2=C2, node=worst))
    aggregate = EstimateEntry(
        name + '_l2', trapezoid(lhs ** 2, dx=dt),
        2.0 * C2 ** 2 * trapezoid(h10 ** 2, dx=dt)
        + 2.0 * trapezoid(f_dual ** 2, dx=dt),
        constants=_constants(constants, C2=C2))
    return [pointwise, aggregate]


def comparison_bound_check(traj, f, beta, nu, constants=None,
                           name='comparison_bound'):
    """
    Pointwise comparison |u_N(t_m)|^2 <= v(t_m), where v solves
    ^C D^alpha v - 2 nu v = |f|_{H^-1}^2 / (2 beta), v(0) = 0, reported at
    the node with the smallest margin
    """
    _check_series(traj, f)
    h = f.with_values(dual_norms(f.values, traj.basis) ** 2 / (2.0 * beta))
    bound = variation_of_constants(-2.0 * nu, h, traj.alpha).values
    l2_sq = traj.norm_squares()[0]
    worst = int(np.argmin(bound - l2_sq))
    return EstimateEntry(name, l2_sq[worst], bound[worst],
                         constants=_constants(constants, beta=beta, nu=nu,
                                              node=worst))


def convexity_check(traj, constants=None, name='convexity'):
    """
    Per-mode discrete convexity 2 c ^C D^alpha c >= ^C D^alpha (c^2) at the
    nodes m >= 1, which the L1 weights satisfy exactly for c(0) = 0.
    Reports the largest violation against a round-off allowance
    """
    worst = 0.0
    scale = 0.0
    for index in range(1, traj.size + 1):
        mode = traj.mode(index)
        defect = convexity_defect(mode, traj.alpha).values[1:]
        worst = max(worst, float(np.max(-defect)))
        sq = caputo_derivative(mode.with_values(mode.values ** 2),
                               traj.alpha).values
        scale = max(scale, float(np.max(np.abs(sq))))
    return EstimateEntry(name, worst, CONVEXITY_REL_TOL * (1.0 + scale),
                         constants=constants)


def _random_unit_vectors(basis, samples, rng):
    "Random modal vectors normalised to |Dv| = 1"
    v = rng.standard_normal((samples, basis.size))
    return v / np.sqrt((v ** 2 * basis.eigenvalues).sum(axis=1))[:, None]


def garding_check(A, basis, beta, nu, samples=DEFAULT_SAMPLES, seed=0,
                  constants=None, name='garding'):
    """
    a(v, v; t_m) >= beta |Dv|^2 - nu |v|^2 for random modal vectors v with
    |Dv| = 1 at every node, reported at the worst sample

    Parameters
    ----------
    A : GridSeries
        Stiffness matrices, A[i, j] = a(e_j, e_i; t_m)
    basis : SpectralBasis
        The basis the matrices were assembled on
    beta, nu : float
        Garding constants
    samples : int
        Number of random vectors
    seed : int
        Seed of the generator
    """
    rng = np.random.default_rng(seed)
    v = _random_unit_vectors(basis, samples, rng)
    form = np.einsum('ki,mij,kj->mk', v, A.values, v)
    lower = beta - nu * (v ** 2).sum(axis=1)[None, :]
    m, k = np.unravel_index(np.argmin(form - lower), form.shape)
    return EstimateEntry(name, lower[0, k], form[m, k],
                         constants=_constants(constants, beta=beta, nu=nu,
                                              node=int(m)))


def continuity_check(A, basis, C2, samples=DEFAULT_SAMPLES, seed=0,
                     constants=None, name='continuity'):
    """
    |a(w, v; t_m)| <= C2 |Dv| |Dw| for pairs of random modal vectors with
    |Dv| = |Dw| = 1 at every node
    """
    rng = np.random.default_rng(seed)
    v = _random_unit_vectors(basis, samples, rng)
    w = _random_unit_vectors(basis, samples, rng)
    form = np.abs(np.einsum('ki,mij,kj->mk', v, A.values, w))
    return EstimateEntry(name, float(np.max(form)), C2,
                         constants=_constants(constants, C2=C2))
