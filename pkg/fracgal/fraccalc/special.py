"""
Special functions used throughout the package: the Gamma function and the
two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real arguments
"""
from builtins import object
import math
import logging
import numpy as np
from scipy import special as sp_special
from scipy.integrate import quad
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalOverflowError)


logger = logging.getLogger('fracgal')


def gamma(x):
    """
    The Gamma function. All Gamma constants in the package are routed
    through this function so they are computed consistently
    """
    return sp_special.gamma(x)


def rgamma(x):
    "Reciprocal Gamma function, zero at the non-positive integers"
    return sp_special.rgamma(x)


class MLParams(object):
    """
    Parameters of a Mittag-Leffler evaluation

    Parameters
    ----------
    alpha : float
        First parameter of E_{alpha,beta}, in (0, 1]
    beta : float
        Second parameter of E_{alpha,beta}, positive
    tol : float
        Relative accuracy requested from the evaluation, in (0, 1)
    """

    DEFAULT_TOL = 1e-12

    def __init__(self, alpha, beta=1.0, tol=DEFAULT_TOL):
        alpha = float(alpha)
        beta = float(beta)
        tol = float(tol)
        if not 0.0 < alpha <= 1.0:
            raise FracGalInvalidParameterError(
                "Mittag-Leffler alpha must be in (0, 1] ({} provided)"
                .format(alpha))
        if not beta > 0.0:
            raise FracGalInvalidParameterError(
                "Mittag-Leffler beta must be positive ({} provided)"
                .format(beta))
        if not 0.0 < tol < 1.0:
            raise FracGalInvalidParameterError(
                "Mittag-Leffler tolerance must be in (0, 1) ({} provided)"
                .format(tol))
        self._alpha = alpha
        self._beta = beta
        self._tol = tol

    @property
    def alpha(self):
        return self._alpha

    @property
    def beta(self):
        return self._beta

    @property
    def tol(self):
        return self._tol

    def with_beta(self, beta):
        return type(self)(self.alpha, beta, tol=self.tol)

    def __eq__(self, other):
        try:
            return (self.alpha == other.alpha and self.beta == other.beta
                    and self.tol == other.tol)
        except AttributeError:
            return False

    def __hash__(self):
        return hash((self.alpha, self.beta, self.tol))

    def __repr__(self):
        return "MLParams(alpha={}, beta={}, tol={})".format(
            self.alpha, self.beta, self.tol)


# Beyond this modulus the asymptotic expansions are used
ASYMPTOTIC_SWITCH = 40.0
# Negative arguments beyond this modulus are evaluated with the integral
# representation instead of the power series, which cancels catastrophically
SERIES_NEGATIVE_LIMIT = 1.0
MAX_SERIES_TERMS = 20000
MAX_ASYMPTOTIC_TERMS = 60
# log of the largest finite double
LOG_FLOAT_MAX = math.log(np.finfo(float).max)


def mittag_leffler(p, z):
    """
    Evaluates the Mittag-Leffler function

        E_{alpha,beta}(z) = sum_{k>=0} z^k / Gamma(alpha k + beta)

    for real z (scalar or array-like, evaluated elementwise)

    Parameters
    ----------
    p : MLParams
        The alpha, beta and tolerance of the evaluation
    z : float | array-like
        The argument(s)

    Returns
    -------
    value : float | np.ndarray
        The function value(s)
    """
    if np.ndim(z):
        return _vectorized_ml(p, np.asarray(z, dtype=float))
    return _mittag_leffler_scalar(p, float(z))


def _mittag_leffler_scalar(p, z):
    if not math.isfinite(z):
        raise FracGalInvalidParameterError(
            "Mittag-Leffler argument must be finite ({})".format(z))
    alpha, beta = p.alpha, p.beta
    if z == 0.0:
        return float(rgamma(beta))
    if alpha == 1.0 and beta == 1.0:
        if z > LOG_FLOAT_MAX:
            raise FracGalOverflowError(
                "E_1({}) = exp({}) exceeds the floating point range"
                .format(z, z))
        return math.exp(z)
    if z > 0.0:
        if z ** (1.0 / alpha) > LOG_FLOAT_MAX:
            raise FracGalOverflowError(
                "z^(1/alpha) = {} exceeds the floating point range for "
                "E_{{{},{}}}({})".format(z ** (1.0 / alpha), alpha, beta, z))
        if z > ASYMPTOTIC_SWITCH:
            return _exponential_asymptotic(p, z)
        return _power_series(p, z)
    if z < -ASYMPTOTIC_SWITCH:
        return _algebraic_asymptotic(p, z)
    if z >= -SERIES_NEGATIVE_LIMIT:
        return _power_series(p, z)
    if alpha == 1.0:
        return _exponential_recurrence(p, z)
    if alpha < 0.3 and z < -0.5 * ASYMPTOTIC_SWITCH:
        logger.debug(
            "Mittag-Leffler evaluation with alpha={} near the asymptotic "
            "switch (z={}) may lose accuracy".format(alpha, z))
    return _integral_representation(p, z)


def _vectorized_ml(p, z):
    return np.vectorize(lambda x: _mittag_leffler_scalar(p, x),
                        otypes=[float])(z)


def _power_series(p, z):
    """
    Power series summed with compensated (exact) summation. Terms are
    formed in log-space so large Gamma values never overflow
    """
    alpha, beta = p.alpha, p.beta
    log_abs_z = math.log(abs(z))
    sign = -1.0 if z < 0.0 else 1.0
    terms = []
    # Index past which terms decrease monotonically
    peak = abs(z) ** (1.0 / alpha) / alpha + 1.0
    for k in range(MAX_SERIES_TERMS):
        log_term = k * log_abs_z - sp_special.gammaln(alpha * k + beta)
        term = (sign ** k) * math.exp(log_term)
        terms.append(term)
        if k > peak and abs(term) <= p.tol * 1e-3 * abs(math.fsum(terms)):
            break
    return math.fsum(terms)


def _algebraic_asymptotic(p, z):
    """
    E_{alpha,beta}(z) ~ -sum_{k=1}^K z^-k / Gamma(beta - alpha k) for
    z -> -infinity. Summation stops at the smallest term as the expansion
    is divergent
    """
    alpha, beta = p.alpha, p.beta
    terms = []
    last = float('inf')
    for k in range(1, MAX_ASYMPTOTIC_TERMS + 1):
        term = -(z ** -k) * rgamma(beta - alpha * k)
        mag = abs(term)
        if mag == 0.0:
            # Pole of Gamma, term vanishes identically
            continue
        if mag > last:
            break
        terms.append(term)
        last = mag
        if mag <= p.tol * 1e-3 * abs(math.fsum(terms)):
            break
    return math.fsum(terms)


def _exponential_asymptotic(p, z):
    alpha, beta = p.alpha, p.beta
    lead = (z ** ((1.0 - beta) / alpha)) * math.exp(z ** (1.0 / alpha)) / alpha
    correction = _algebraic_asymptotic(p, z)
    return lead + correction


def _exponential_recurrence(p, z):
    """
    alpha == 1 with negative argument. Integer betas are reduced to
    E_{1,1}(z) = exp(z) by E_{1,b}(z) = (E_{1,b-1}(z) - 1/Gamma(b-1)) / z,
    other betas fall back to the series
    """
    beta = p.beta
    if beta != round(beta):
        return _power_series(p, z)
    value = math.exp(z)
    for b in range(2, int(round(beta)) + 1):
        value = (value - rgamma(b - 1)) / z
    return value


def _integral_representation(p, z):
    """
    Integral representation valid for negative z (|arg z| = pi > alpha pi)
    and 0 < beta < 1 + alpha,

        E_{alpha,beta}(z) = int_0^inf K(chi) dchi,
        K(chi) = chi^((1-beta)/alpha) exp(-chi^(1/alpha))
                 (chi sin(pi(1-beta)) - z sin(pi(1-beta+alpha)))
                 / (alpha pi (chi^2 - 2 chi z cos(alpha pi) + z^2))

    Larger betas are reduced with the recurrence
    E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z
    """
    alpha, beta = p.alpha, p.beta
    betas = []
    while beta >= 1.0 + alpha:
        betas.append(beta)
        beta -= alpha
    s1 = math.sin(math.pi * (1.0 - beta))
    s2 = math.sin(math.pi * (1.0 - beta + alpha))
    c = math.cos(alpha * math.pi)
    expo = (1.0 - beta) / alpha

    def integrand(chi):
        if chi == 0.0:
            chi = 1e-300
        return ((chi ** expo) * math.exp(-chi ** (1.0 / alpha))
                * (chi * s1 - z * s2)
                / (alpha * math.pi * (chi * chi - 2.0 * chi * z * c + z * z)))

    upper = 50.0 ** alpha
    points = [abs(z)] if abs(z) < upper else None
    value, _ = quad(integrand, 0.0, upper, points=points, limit=400,
                    epsabs=0.0, epsrel=max(p.tol * 0.1, 1e-14))
    for b in reversed(betas):
        value = (value - rgamma(b - alpha)) / z
    return value
