"""
Deterministic batteries of randomised problems satisfying the standing
assumptions: bounded smooth coefficients, a symmetric diffusion matrix
with ellipticity constant at least 1 - 0.4 T and forcing bounded in time.
"""
import logging
import numpy as np
from fracgal.exceptions import FracGalInvalidParameterError
from fracgal.fode import is_resolved
from fracgal.problem import make_problem
from .checks import CROSS_CHECK_GAMMA_DT

logger = logging.getLogger('fracgal')


DEFAULT_HORIZON = 1.0
ALPHA_RANGE = (0.3, 0.8)
FORCED_MODES = 3
# Box side per mode of the Picard-resolved tier, keeping M_A of order one
RESOLVED_LENGTH_PER_MODE = 4.0


def signed(value, digits=4):
    "Formats a number as the right operand of a sum, e.g. '- 0.2500'"
    return '{} {:.{}f}'.format('-' if value < 0 else '+', abs(value), digits)


def _diffusion(rng, var):
    a0 = rng.uniform(1.0, 2.0)
    a1 = rng.uniform(-0.4, 0.4)
    return '{:.4f} {} * sin(pi * {}) * t'.format(a0, signed(a1), var)


def _draw(rng, dim):
    "Draws the order and the coefficient and forcing expressions"
    variables = ('x', 'y')[:dim]
    alpha = float(np.round(rng.uniform(*ALPHA_RANGE), 4))
    a = {(i, i): _diffusion(rng, v) for i, v in enumerate(variables, 1)}
    b = ['{:.4f} * cos(pi * {})'.format(rng.uniform(-0.5, 0.5), v)
         for v in variables]
    c = '{:.4f} {} * t'.format(rng.uniform(-0.5, 1.0),
                               signed(rng.uniform(0.0, 0.5)))
    forcing = {j: '{:.4f} {} * t'.format(rng.uniform(-1.0, 1.0),
                                         signed(rng.uniform(-1.0, 1.0)))
               for j in range(1, FORCED_MODES + 1)}
    return alpha, {'a': a, 'b': b, 'c': c, 'forcing': forcing}


def battery_problem(rng, name, modes=4, steps=256, dim=1, lengths=None,
                    horizon=DEFAULT_HORIZON, picard_resolved=False):
    """
    Draws a single randomised problem

        a_ii = a0 + a1 sin(pi x_i) t,   a0 in [1, 2], |a1| <= 0.4
        b_j  = b cos(pi x_j),           |b| <= 0.5
        c    = c0 + c1 t,               c0 in [-0.5, 1], c1 in [0, 0.5]
        f^j  = p + q t,                 j = 1..3

    Parameters
    ----------
    rng : np.random.Generator
        The generator to draw from
    name : str
        Name of the problem
    picard_resolved : bool
        Whether to draw from the tier whose time grid resolves the weighted
        norm of the Picard iteration (gamma dt <= CROSS_CHECK_GAMMA_DT).
        The box sides default to RESOLVED_LENGTH_PER_MODE times the number
        of modes and the horizon is shortened until the grid resolves gamma
    """
    if horizon > 2.0:
        raise FracGalInvalidParameterError(
            "Battery problems are only elliptic for T <= 2 ({} provided)"
            .format(horizon))
    if lengths is None:
        length = RESOLVED_LENGTH_PER_MODE * modes if picard_resolved else 1.0
        lengths = (length,) * dim
    alpha, exprs = _draw(rng, dim)
    problem = make_problem(alpha, horizon, lengths, modes=modes, steps=steps,
                           name=name, **exprs)
    while picard_resolved:
        ivp = problem.ivp()
        gamma = problem.picard.resolve_gamma(ivp)
        if is_resolved(ivp, gamma, margin=CROSS_CHECK_GAMMA_DT):
            break
        # Coefficients are affine in t so shortening the horizon never
        # increases M_A, and with it gamma
        horizon = 0.99 * CROSS_CHECK_GAMMA_DT * steps / gamma
        logger.debug("Shortening the horizon of {} to {} to resolve gamma={}"
                     .format(name, horizon, gamma))
        problem = make_problem(alpha, horizon, lengths, modes=modes,
                               steps=steps, name=name, **exprs)
    return problem


def random_battery(count, seed=0, modes=4, steps=256, dim=1, lengths=None,
                   horizon=DEFAULT_HORIZON, picard_resolved=False):
    """
    A reproducible list of randomised problems named 'battery-{seed}-{i}'

    Parameters
    ----------
    count : int
        Number of problems
    seed : int
        Seed of the generator
    modes : int | list[int]
        Number of modes of each problem, a list is cycled over the problems
    steps : int
        Number of time steps of each problem
    dim : int
        Spatial dimension, 1 or 2
    lengths : tuple[float] | None
        Side lengths of the box (see battery_problem if None)
    horizon : float
        Final time, an upper bound for the Picard-resolved tier
    picard_resolved : bool
        Whether to draw from the Picard-resolved tier (see battery_problem)

    Returns
    -------
    problems : list[Problem]
        The problems
    """
    if dim not in (1, 2):
        raise FracGalInvalidParameterError(
            "Battery problems are one or two dimensional ({} provided)"
            .format(dim))
    if isinstance(modes, int):
        modes = [modes]
    rng = np.random.default_rng(seed)
    problems = [battery_problem(rng, 'battery-{}-{}'.format(seed, i),
                                modes=modes[i % len(modes)], steps=steps,
                                dim=dim, lengths=lengths, horizon=horizon,
                                picard_resolved=picard_resolved)
                for i in range(count)]
    logger.debug("Generated battery of {} problems with seed {}".format(
        count, seed))
    return problems
