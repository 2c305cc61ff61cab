import logging
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalSingularStepError, FracGalNaNError)
from fracgal.fraccalc import l1_matrix, gamma as gamma_fn
from .trajectory import ModalTrajectory

logger = logging.getLogger('fracgal')


FORMS = ('caputo', 'riemann-liouville')

# Reciprocal condition number below which a step matrix is treated as
# singular
SINGULAR_RCOND = 1e-14


def starting_correction(grid, alpha):
    """
    Weights sigma_m of the starting correction sigma_m (x_1 - x_0) that
    makes the L1 derivative exact for t^alpha,

        sigma_m = (Gamma(1 + alpha) - (D t^alpha)_m) / dt^alpha

    Solutions with zero initial data start as t^alpha / Gamma(1 + alpha)
    times the forcing, a layer the uncorrected scheme resolves only to
    O(dt^alpha) at the first nodes. Entry 0 is unused and set to zero

    Parameters
    ----------
    grid : TimeGrid
        The grid
    alpha : float
        Fractional order in (0, 1)
    """
    D = l1_matrix(grid, alpha)
    power = grid.nodes ** alpha
    sigma = (gamma_fn(1.0 + alpha) - D.dot(power)) / power[1]
    sigma[0] = 0.0
    return sigma


def l1_solve(ivp, form='caputo', corrected=True):
    """
    Solves the system with the fully implicit L1 scheme, marching
    m = 1..M with

        (w_m I + A(t_m)) c_m = f(t_m) - history_m

    where the history collects the L1 weights of c_0..c_{m-1}. The diagonal
    weight is w0 = dt^-alpha / Gamma(2 - alpha), plus sigma_1 at the first
    step of the corrected scheme, whose history also carries
    sigma_m (c_1 - c_0)

    Parameters
    ----------
    ivp : FractionalIVP
        The system
    form : str
        'caputo' for the L1 Caputo derivative, 'riemann-liouville' adds the
        c(0) t^-alpha / Gamma(1 - alpha) term of the Riemann-Liouville
        derivative (which vanishes for the zero initial data of the system)
    corrected : bool
        Whether to add the starting correction (see starting_correction)

    Returns
    -------
    trajectory : ModalTrajectory
        The solution
    """
    if form not in FORMS:
        raise FracGalInvalidParameterError(
            "Unrecognised derivative form '{}', can be one of '{}'".format(
                form, "', '".join(FORMS)))
    grid = ivp.grid
    alpha = ivp.alpha
    D = l1_matrix(grid, alpha)
    w0 = D[1, 1]
    if corrected:
        sigma = starting_correction(grid, alpha)
    else:
        sigma = np.zeros(len(grid))
    A = ivp.A.values
    f = ivp.f.values
    identity = np.eye(ivp.dim)
    c = np.zeros((len(grid), ivp.dim))
    logger.info("Starting L1 solve of {} (corrected={})".format(
        ivp, corrected))
    for m in range(1, len(grid)):
        rhs = f[m] - D[m, :m].dot(c[:m])
        if form == 'riemann-liouville':
            rhs -= c[0] * grid.nodes[m] ** -alpha / gamma_fn(1.0 - alpha)
        if m == 1:
            diag = w0 + sigma[1]
            rhs += sigma[1] * c[0]
        else:
            diag = w0
            rhs -= sigma[m] * (c[1] - c[0])
        step = diag * identity + A[m]
        if not np.linalg.cond(step) < 1.0 / SINGULAR_RCOND:
            eigs = np.linalg.eigvals(A[m])
            eig = eigs[np.argmin(np.abs(eigs + diag))]
            raise FracGalSingularStepError(
                m, eig, "Singular L1 step matrix at node {} (t={}): A has "
                "eigenvalue {} close to -{}".format(
                    m, grid.nodes[m], eig, diag))
        c[m] = np.linalg.solve(step, rhs)
        if not np.all(np.isfinite(c[m])):
            raise FracGalNaNError(
                m, "Non-finite L1 solution at node {} (t={})".format(
                    m, grid.nodes[m]))
    return ModalTrajectory(grid, c, alpha, 'l1', basis=ivp.basis)
