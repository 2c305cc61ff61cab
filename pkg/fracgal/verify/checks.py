import logging
import math
import numpy as np
from fracgal.fode import (
    ModalTrajectory, is_resolved, picard_solve, fixed_point_residual)
from fracgal.processor import SingleProc
from .report import EstimateEntry, EstimateReport
from .estimates import (
    dual_norms, energy_bound_check, h1_bound_check,
    dual_derivative_bound_check, comparison_bound_check, convexity_check,
    garding_check, continuity_check, DEFAULT_SAMPLES)
from .galerkin import l2_distance
from .uniqueness import scheme_distance, gronwall_uniqueness_check
from .yosida import yosida_convexity_check

logger = logging.getLogger('fracgal')


# Allowance of the observed Picard ratios over the contraction bound
CONTRACTION_SLACK = 0.05
# Largest gamma dt the Picard cross-checks are run at. Coarser grids are
# refined by an integer factor up to MAX_PICARD_STEPS
CROSS_CHECK_GAMMA_DT = 0.25
MAX_PICARD_STEPS = 2048
# Relative tolerance on gamma dt for roundoff in M_A
RATIO_RTOL = 1e-9
# Sup distance allowed between the Picard and L1 solutions, relative to
# 1 + sup |u|. Its square budgets the uniqueness inequality
AGREEMENT_TOL = 5e-3
YOSIDA_INDICES = (1, 10, 100)


def picard_refinement(problem, ivp=None):
    """
    Finds the smallest integer refinement of the time grid of the problem
    with gamma dt <= CROSS_CHECK_GAMMA_DT for the Picard iteration

    Parameters
    ----------
    problem : Problem
        The problem
    ivp : FractionalIVP | None
        The system of the problem, assembled if not provided

    Returns
    -------
    refined : Problem | None
        The problem on the refined grid, None if it would need more than
        MAX_PICARD_STEPS steps
    refined_ivp : FractionalIVP | None
        Its system
    factor : int
        The refinement factor, every factor-th node of the refined grid is
        a node of the original one
    """
    if ivp is None:
        ivp = problem.ivp()
    gamma = problem.picard.resolve_gamma(ivp)
    ratio = gamma * ivp.grid.dt / CROSS_CHECK_GAMMA_DT
    factor = max(1, int(math.ceil(ratio * (1.0 - RATIO_RTOL))))
    if factor == 1:
        return problem, ivp, factor
    if factor * problem.steps > MAX_PICARD_STEPS:
        return None, None, factor
    refined = problem.with_overrides(steps=factor * problem.steps)
    refined_ivp = refined.ivp()
    gamma = problem.picard.resolve_gamma(refined_ivp)
    if not is_resolved(refined_ivp, gamma,
                       margin=CROSS_CHECK_GAMMA_DT * (1.0 + RATIO_RTOL)):
        return None, None, factor
    logger.debug("Refining the time grid of {} by {} for Picard "
                 "iteration".format(problem, factor))
    return refined, refined_ivp, factor


def run_checks(problem, samples=DEFAULT_SAMPLES, seed=0,
               yosida_indices=YOSIDA_INDICES):
    """
    Validates the problem, solves it and checks every a priori estimate on
    the solution. The problem is also solved by Picard iteration, on a refined
    time grid if needed (see picard_refinement), and the two solutions are
    cross-checked on the nodes of the original grid (contraction, fixed point,
    agreement and uniqueness)

    Parameters
    ----------
    problem : Problem
        The problem
    samples : int
        Number of random vectors of the Garding and continuity checks
    seed : int
        Seed of the random vectors
    yosida_indices : tuple[int]
        Indices of the Yosida kernels whose convexity is checked

    Returns
    -------
    report : EstimateReport
        The checks
    info : dict
        Solver details per scheme
    """
    theta_hat = problem.validate()
    theta = problem.theta
    beta, nu = problem.garding_constants()
    C2 = problem.continuity_constant()
    ivp = problem.ivp()
    basis = problem.basis
    f_norm = float(np.max(dual_norms(ivp.f.values, basis)))
    constants = {'theta': theta, 'theta_hat': theta_hat, 'beta': beta,
                 'nu': nu, 'C2': C2, 'f_norm': f_norm}
    logger.info("Checking estimates of {} ({})".format(problem, constants))
    traj, l1_info = problem.solve('l1', ivp=ivp)
    info = {'l1': l1_info}
    report = EstimateReport()
    report.append(energy_bound_check(traj, beta, nu, f_norm,
                                     constants=constants))
    report.append(h1_bound_check(traj, beta, nu, f_norm, constants=constants))
    report.extend(dual_derivative_bound_check(traj, ivp.A, ivp.f, C2,
                                              constants=constants))
    report.append(comparison_bound_check(traj, ivp.f, beta, nu,
                                         constants=constants))
    report.append(convexity_check(traj))
    report.append(garding_check(ivp.A, basis, beta, nu, samples=samples,
                                seed=seed, constants=constants))
    report.append(continuity_check(ivp.A, basis, C2, samples=samples,
                                   seed=seed, constants=constants))
    for n in yosida_indices:
        report.append(yosida_convexity_check(traj, problem.alpha, n))
    picard_problem, picard_ivp, factor = picard_refinement(problem, ivp)
    if picard_problem is not None:
        fine, log = picard_solve(picard_ivp, problem.picard)
        gamma = log.gamma
        picard = ModalTrajectory(ivp.grid, fine.values[::factor],
                                 fine.alpha, 'picard', basis=fine.basis)
        info['picard'] = dict(log.to_dict(), scheme='picard',
                              refinement=factor)
        report.append(EstimateEntry(
            'picard_contraction', log.max_ratio,
            log.bound + CONTRACTION_SLACK,
            constants={'gamma': gamma, 'bound': log.bound,
                       'iterations': log.iterations,
                       'refinement': factor}))
        report.append(EstimateEntry(
            'picard_fixed_point',
            fixed_point_residual(fine, picard_ivp, gamma),
            problem.picard.tol, constants={'gamma': gamma}))
        scale = 1.0 + float(np.max(traj.l2_norms()))
        budget = AGREEMENT_TOL * scale
        report.append(EstimateEntry(
            'scheme_agreement', scheme_distance(picard, traj), budget,
            constants={'scale': scale,
                       'l2_distance': l2_distance(picard, traj)}))
        report.extend(gronwall_uniqueness_check(picard, traj, nu,
                                                budget ** 2))
    else:
        logger.warning(
            "Skipping Picard cross-checks of {}: resolving gamma would need "
            "{} times the {} time steps (at most {} are used)".format(
                problem, factor, problem.steps, MAX_PICARD_STEPS))
        info['picard'] = {'scheme': 'picard', 'skipped': True,
                          'refinement': factor}
    if not report.passed:
        logger.warning("{} of {} checks failed for {}: {}".format(
            len(report.failures), len(report), problem,
            ', '.join(e.name for e in report.failures)))
    return report, info


def run_battery(problems, processor=None, **kwargs):
    """
    Runs the checks on each problem of a battery

    Returns
    -------
    reports : list[EstimateReport]
        The reports in the order of the problems
    """
    if processor is None:
        processor = SingleProc()
    results = processor.map(lambda p: run_checks(p, **kwargs), problems,
                            desc='Battery')
    return [report for report, _ in results]
