"""
Picard iteration for the Volterra form of the Galerkin system

    c(t) = 1/Gamma(alpha) int_0^t (t - tau)^(alpha-1) (f(tau) - A(tau) c(tau))
           dtau

which is a contraction in the weighted norm |phi|_gamma =
max_t |phi(t)| exp(-gamma t) with factor M_A / gamma^alpha.
"""
from builtins import object
import math
import logging
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalConvergenceError, FracGalNaNError)
from fracgal.fraccalc import PowerKernel
from .trajectory import ModalTrajectory

logger = logging.getLogger('fracgal')


AUTO = 'auto'


class PicardConfig(object):
    """
    Settings of the Picard iteration

    Parameters
    ----------
    gamma : float | str
        Exponent of the weighted norm, or 'auto' for (2 M_A)^(1/alpha),
        which gives a contraction factor of 1/2
    max_iters : int
        Maximum number of iterations
    tol : float
        Stopping tolerance on the weighted norm of successive differences
    """

    DEFAULT_MAX_ITERS = 200
    DEFAULT_TOL = 1e-10
    # Factor of the auto rule, the contraction factor is its reciprocal
    AUTO_FACTOR = 2.0

    def __init__(self, gamma=AUTO, max_iters=DEFAULT_MAX_ITERS,
                 tol=DEFAULT_TOL):
        if gamma != AUTO:
            try:
                gamma = float(gamma)
            except (TypeError, ValueError):
                raise FracGalInvalidParameterError(
                    "Picard gamma must be a positive number or '{}' ({} "
                    "provided)".format(AUTO, gamma))
            if not (math.isfinite(gamma) and gamma > 0.0):
                raise FracGalInvalidParameterError(
                    "Picard gamma must be positive ({} provided)".format(
                        gamma))
        if int(max_iters) != max_iters or max_iters < 1:
            raise FracGalInvalidParameterError(
                "Maximum number of Picard iterations must be a positive "
                "integer ({} provided)".format(max_iters))
        if not float(tol) > 0.0:
            raise FracGalInvalidParameterError(
                "Picard tolerance must be positive ({} provided)".format(
                    tol))
        self._gamma = gamma
        self._max_iters = int(max_iters)
        self._tol = float(tol)

    @property
    def gamma(self):
        return self._gamma

    @property
    def is_auto(self):
        return self._gamma == AUTO

    @property
    def max_iters(self):
        return self._max_iters

    @property
    def tol(self):
        return self._tol

    def resolve_gamma(self, ivp):
        "The explicit gamma, or the auto choice for the system"
        if not self.is_auto:
            return self._gamma
        return auto_gamma(ivp, factor=self.AUTO_FACTOR)

    def __eq__(self, other):
        try:
            return (self._gamma == other._gamma
                    and self._max_iters == other._max_iters
                    and self._tol == other._tol)
        except AttributeError:
            return False

    def __repr__(self):
        return "PicardConfig(gamma={}, max_iters={}, tol={})".format(
            self._gamma, self._max_iters, self._tol)


def auto_gamma(ivp, factor=PicardConfig.AUTO_FACTOR):
    """
    gamma = (factor M_A)^(1/alpha). Systems with A = 0 contract for any
    gamma and get gamma = 1
    """
    m_a = ivp.max_operator_norm()
    if m_a == 0.0:
        return 1.0
    return (factor * m_a) ** (1.0 / ivp.alpha)


def contraction_bound(ivp, gamma):
    """
    Contraction factor M_A / gamma^alpha of the Picard map in the weighted
    norm, with M_A = max_m |A(t_m)|_2

    Parameters
    ----------
    ivp : FractionalIVP
        The system
    gamma : float
        Exponent of the weighted norm, positive
    """
    if not gamma > 0.0:
        raise FracGalInvalidParameterError(
            "Weighted norm exponent must be positive ({} provided)".format(
                gamma))
    return ivp.max_operator_norm() / gamma ** ivp.alpha


def weighted_norm(values, grid, gamma):
    """
    max_m |phi(t_m)| exp(-gamma t_m), with the Euclidean norm over modes
    """
    norms = np.linalg.norm(values.reshape(len(grid), -1), axis=1)
    with np.errstate(divide='ignore'):
        log_norms = np.log(norms)
    return float(np.max(np.exp(log_norms - gamma * grid.nodes)))


def is_resolved(ivp, gamma, margin=1.0):
    """
    Whether the weighted norm is resolved by the time grid, gamma dt <=
    margin. On under-resolved grids the discrete map is dominated by the
    lag-zero product-integration weight and may not contract
    """
    return gamma * ivp.grid.dt <= margin


class PicardLog(object):
    """
    Weighted-norm differences |c^{k+1} - c^k|_gamma of successive Picard
    iterates and the factor they are expected to decay with
    """

    def __init__(self, gamma, bound):
        self._gamma = gamma
        self._bound = bound
        self._differences = []

    @property
    def gamma(self):
        return self._gamma

    @property
    def bound(self):
        return self._bound

    @property
    def differences(self):
        return list(self._differences)

    @property
    def iterations(self):
        return len(self._differences)

    def append(self, difference):
        self._differences.append(difference)

    @property
    def ratios(self):
        "Observed ratios of successive differences (nonzero ones only)"
        d = self._differences
        return [b / a for a, b in zip(d[:-1], d[1:]) if a > 0.0]

    @property
    def last_ratio(self):
        ratios = self.ratios
        return ratios[-1] if ratios else None

    @property
    def max_ratio(self):
        ratios = self.ratios
        return max(ratios) if ratios else 0.0

    def to_dict(self):
        return {'gamma': self._gamma,
                'contraction_bound': self._bound,
                'iterations': self.iterations,
                'differences': self.differences,
                'max_ratio': self.max_ratio}

    def __repr__(self):
        return "PicardLog(gamma={}, iterations={}, max_ratio={})".format(
            self._gamma, self.iterations, self.max_ratio)


def picard_map(ivp, values):
    """
    One application of the Picard map, I^alpha (f - A c), with the
    Riemann-Liouville integral by product integration
    """
    W = PowerKernel(ivp.alpha).weights(ivp.grid)
    residual = ivp.f.values - np.einsum('mij,mj->mi', ivp.A.values, values)
    return W.dot(residual)


def picard_solve(ivp, cfg=None):
    """
    Solves the system by Picard iteration from c^0 = 0 until the weighted
    norm of successive differences drops below the tolerance

    Parameters
    ----------
    ivp : FractionalIVP
        The system
    cfg : PicardConfig | None
        The iteration settings (defaults if None)

    Returns
    -------
    trajectory : ModalTrajectory
        The last iterate
    log : PicardLog
        The weighted-norm differences of the iterates
    """
    if cfg is None:
        cfg = PicardConfig()
    gamma = cfg.resolve_gamma(ivp)
    bound = contraction_bound(ivp, gamma)
    if not is_resolved(ivp, gamma):
        logger.warning(
            "Weighted norm exponent gamma={} is not resolved by the time "
            "step {} (gamma * dt = {}), the discrete Picard map may not "
            "contract".format(gamma, ivp.grid.dt, gamma * ivp.grid.dt))
    logger.info("Starting Picard iteration for {} with gamma={} "
                "(contraction bound {})".format(ivp, gamma, bound))
    log = PicardLog(gamma, bound)
    current = np.zeros((len(ivp.grid), ivp.dim))
    for _ in range(cfg.max_iters):
        with np.errstate(over='ignore', invalid='ignore'):
            updated = picard_map(ivp, current)
        bad = ~np.all(np.isfinite(updated), axis=1)
        if np.any(bad):
            node = int(np.argmax(bad))
            raise FracGalNaNError(
                node, "Non-finite Picard iterate at node {} (t={}) after {} "
                "iterations".format(node, ivp.grid.nodes[node],
                                    log.iterations + 1))
        difference = weighted_norm(updated - current, ivp.grid, gamma)
        log.append(difference)
        logger.debug("Picard iteration {}: weighted difference {}".format(
            log.iterations, difference))
        current = updated
        if difference < cfg.tol:
            break
    else:
        raise FracGalConvergenceError(
            log.last_ratio,
            "Picard iteration did not converge within {} iterations "
            "(last weighted difference {}, last ratio {}, bound {})".format(
                cfg.max_iters, log.differences[-1], log.last_ratio, bound))
    logger.info("Picard iteration converged in {} iterations (max observed "
                "ratio {})".format(log.iterations, log.max_ratio))
    return (ModalTrajectory(ivp.grid, current, ivp.alpha, 'picard',
                            basis=ivp.basis), log)


def fixed_point_residual(trajectory, ivp, gamma):
    "|c - T c|_gamma for a trajectory c of the system"
    return weighted_norm(trajectory.values - picard_map(ivp,
                                                        trajectory.values),
                         ivp.grid, gamma)
