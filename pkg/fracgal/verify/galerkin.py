from builtins import object
import logging
import numpy as np
from scipy.integrate import trapezoid
from fracgal.exceptions import FracGalInvalidParameterError
from fracgal.processor import SingleProc

logger = logging.getLogger('fracgal')


def l2_distance(traj_a, traj_b):
    """
    |u_a - u_b|_{L2(0, T; L2)} of two trajectories on the same grid and
    basis, time integral by the trapezoidal rule
    """
    traj_a.check_comparable(traj_b)
    diff = ((traj_a.values - traj_b.values) ** 2).sum(axis=1)
    return float(np.sqrt(trapezoid(diff, dx=traj_a.grid.dt)))


class ConvergenceStudy(object):
    """
    Cauchy differences d_N = |u_N' - u_N|_{L2(0, T; L2)} of Galerkin
    solutions for consecutive mode counts N < N' of a refinement sequence,
    the coarser solution zero-padded into the finer space

    Parameters
    ----------
    mode_counts : list[int]
        The mode counts, strictly increasing
    steps : int
        Number of time steps of every solve
    distances : list[float]
        d_N for each mode count but the last
    """

    def __init__(self, mode_counts, steps, distances):
        if len(distances) != len(mode_counts) - 1:
            raise FracGalInvalidParameterError(
                "Expected {} distances for mode counts {} ({} provided)"
                .format(len(mode_counts) - 1, mode_counts, len(distances)))
        self._mode_counts = list(mode_counts)
        self._steps = steps
        self._distances = [float(d) for d in distances]

    @property
    def mode_counts(self):
        return self._mode_counts

    @property
    def steps(self):
        return self._steps

    @property
    def distances(self):
        return self._distances

    def is_decreasing(self):
        d = self._distances
        return all(b < a for a, b in zip(d[:-1], d[1:]))

    def rows(self):
        "(N, N', M, d_N) for each consecutive pair"
        return [(n, n_next, self._steps, d) for n, n_next, d in zip(
            self._mode_counts[:-1], self._mode_counts[1:], self._distances)]

    def __repr__(self):
        return "ConvergenceStudy(N={}, M={}, d={})".format(
            self._mode_counts, self._steps, self._distances)


def check_increasing(values, name):
    values = list(values)
    if not values or any(b <= a for a, b in zip(values[:-1], values[1:])):
        raise FracGalInvalidParameterError(
            "{} must be a non-empty, strictly increasing list ({} provided)"
            .format(name, values))
    return values


def galerkin_convergence(problem, mode_counts, steps=None, scheme=None,
                         processor=None):
    """
    Solves the problem for each mode count and measures the distances
    between consecutive Galerkin solutions

    Parameters
    ----------
    problem : Problem
        The problem
    mode_counts : list[int]
        Strictly increasing mode counts
    steps : int | None
        Number of time steps, the problem's if None
    scheme : str | None
        The solver, the problem's if None
    processor : Processor | None
        Runs the solves (sequentially if None)

    Returns
    -------
    study : ConvergenceStudy
        The distances
    """
    mode_counts = check_increasing(mode_counts, 'Mode counts')
    if processor is None:
        processor = SingleProc()
    variants = [problem.with_overrides(modes=n, steps=steps)
                for n in mode_counts]

    def solve(variant):
        return variant.solve(scheme=scheme)[0]

    trajectories = processor.map(solve, variants, desc='Galerkin solves')
    finest = variants[-1].basis
    padded = [t.embedded(finest) for t in trajectories]
    distances = [l2_distance(a, b) for a, b in zip(padded[:-1], padded[1:])]
    study = ConvergenceStudy(mode_counts, variants[0].steps, distances)
    logger.info("Galerkin convergence of {}: {}".format(problem, study))
    return study
