import logging
import numpy as np
from fracgal.exceptions import FracGalInvalidParameterError
from fracgal.fraccalc import Kernel, convolve
from .report import EstimateEntry

logger = logging.getLogger('fracgal')


def scheme_distance(traj_a, traj_b):
    "max_m |u_a(t_m) - u_b(t_m)|_L2 of two solutions of the same problem"
    traj_a.check_comparable(traj_b)
    return float(np.max(np.linalg.norm(traj_a.values - traj_b.values,
                                       axis=1)))


def gronwall_uniqueness_check(traj_a, traj_b, nu, slack,
                              name='gronwall_uniqueness'):
    """
    The difference w(t) = |u_a(t) - u_b(t)|^2 of two solutions of the same
    problem satisfies w <= 2 nu (l * w), which only admits w = 0. For
    discrete solutions the inequality is checked up to the scheme error
    budget,

        max_m (w(t_m) - 2 nu (l * w)(t_m)) <= slack

    and the uniqueness defect sup_m w(t_m) is checked against the same
    budget. The second check fails for distinct solutions even when nu is
    large enough for the first to hold

    Parameters
    ----------
    traj_a, traj_b : ModalTrajectory
        Solutions of the same problem on the same grid and basis
    nu : float
        Garding shift
    slack : float
        Budget for the scheme error, e.g. the square of the tolerance of the
        agreement between the schemes

    Returns
    -------
    entries : list[EstimateEntry]
        The inequality and the defect, named '<name>' and '<name>_defect'
    """
    if not slack >= 0.0:
        raise FracGalInvalidParameterError(
            "Scheme error budget must be nonnegative ({} provided)".format(
                slack))
    traj_a.check_comparable(traj_b)
    w = traj_a.series.with_values(
        ((traj_a.values - traj_b.values) ** 2).sum(axis=1))
    lw = convolve(w, Kernel.l(traj_a.alpha)).values
    defect = float(np.max(w.values))
    lhs = float(np.max(w.values - 2.0 * nu * lw))
    logger.debug("Uniqueness defect between {} and {}: {} (budget {})"
                 .format(traj_a, traj_b, defect, slack))
    constants = {'nu': nu, 'defect': defect, 'slack': slack}
    return [EstimateEntry(name, lhs, slack, constants=constants),
            EstimateEntry(name + '_defect', defect, slack,
                          constants=constants)]
