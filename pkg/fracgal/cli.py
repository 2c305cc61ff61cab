"""
Command-line interface

    fracgal mlf --alpha A --beta B --z Z
    fracgal solve PROBLEM [--scheme {l1,picard}] [--modes N] [--steps M]
                          [--gamma G] [--out DIR]
    fracgal verify PROBLEM [...]
    fracgal converge PROBLEM --modes 4,8,16 --steps 256,512 [...]
    fracgal yosida PROBLEM --n 1,10,100 [...]

Exit codes: 0 success, 1 failed verification, 2 invalid usage, problem
file or violated assumption, 3 solver failure.
"""
import sys
import time
import logging
import argparse
from fracgal.__about__ import __version__
from fracgal.exceptions import (
    FracGalUsageError, FracGalExpressionError, FracGalSolverError,
    FracGalOverflowError)
from fracgal.utils import parse_list
from fracgal.fraccalc import MLParams, mittag_leffler
from fracgal.fode import PicardConfig, is_resolved, picard_solve
from fracgal.problem import load_problem
from fracgal.processor import get_processor
from fracgal.provenance import RunRecord
from fracgal.output import OutputDir, write_csv, format_float
from fracgal.verify import (
    run_checks, galerkin_convergence, yosida_study, scheme_distance)
from fracgal.verify.galerkin import check_increasing

logger = logging.getLogger('fracgal')


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SOLVER = 3

DEFAULT_OUT = 'fracgal-output'
TRAJECTORY_FNAME = 'trajectory.csv'
REPORT_FNAME = 'report.json'
CONVERGENCE_FNAME = 'convergence.csv'
YOSIDA_FNAME = 'yosida.csv'
LOG_FORMAT = "%(levelname)s - %(message)s"


def int_list(text):
    "Parses a comma-separated list of positive integers"
    try:
        values = parse_list(text, int)
    except FracGalUsageError as e:
        raise argparse.ArgumentTypeError(e.msg)
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(
            "Expected a comma-separated list of positive integers ('{}')"
            .format(text))
    return values


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(
            "Expected a positive integer ('{}')".format(text))
    return value


def _add_problem_args(parser, list_discretisation=False):
    parser.add_argument('problem', help="Path to the problem file")
    parser.add_argument('--out', default=DEFAULT_OUT,
                        help="Output directory (default '{}')".format(
                            DEFAULT_OUT))
    if list_discretisation:
        parser.add_argument('--modes', type=int_list, required=True,
                            help="Comma-separated, increasing mode counts")
        parser.add_argument('--steps', type=int_list, default=None,
                            help="Comma-separated numbers of time steps")
    else:
        parser.add_argument('--modes', type=positive_int, default=None,
                            help="Number of Galerkin modes")
        parser.add_argument('--steps', type=positive_int, default=None,
                            help="Number of time steps")
    parser.add_argument('--scheme', choices=('l1', 'picard'), default=None,
                        help="Time-stepping scheme")
    parser.add_argument('--gamma', default=None,
                        help="Weighted norm exponent of the Picard solver "
                        "(number or 'auto')")
    parser.add_argument('--jobs', type=positive_int, default=1,
                        help="Number of worker threads")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='fracgal',
        description=("Spectral-Galerkin solution and verification of "
                     "time-fractional elliptic problems"))
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('--loglevel', default='warning',
                        choices=('debug', 'info', 'warning', 'error'),
                        help="Logging level")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    mlf = subparsers.add_parser(
        'mlf', help="Evaluate the Mittag-Leffler function E_{alpha,beta}(z)")
    mlf.add_argument('--alpha', type=float, required=True)
    mlf.add_argument('--beta', type=float, default=1.0)
    mlf.add_argument('--z', type=float, required=True)
    mlf.set_defaults(func=cmd_mlf)
    solve = subparsers.add_parser('solve', help="Solve a problem")
    _add_problem_args(solve)
    solve.set_defaults(func=cmd_solve)
    verify = subparsers.add_parser(
        'verify', help="Solve a problem and check the a priori estimates")
    _add_problem_args(verify)
    verify.add_argument('--samples', type=positive_int, default=100,
                        help="Random vectors of the form checks")
    verify.add_argument('--seed', type=int, default=0,
                        help="Seed of the random vectors")
    verify.set_defaults(func=cmd_verify)
    converge = subparsers.add_parser(
        'converge', help="Galerkin convergence and scheme agreement")
    _add_problem_args(converge, list_discretisation=True)
    converge.set_defaults(func=cmd_converge)
    yosida = subparsers.add_parser(
        'yosida', help="Yosida approximation study of the solution")
    _add_problem_args(yosida)
    yosida.add_argument('--n', type=int_list, required=True, dest='n_list',
                        help="Comma-separated, increasing Yosida indices")
    yosida.set_defaults(func=cmd_yosida)
    return parser


def _picard_config(problem, gamma):
    if gamma is None:
        return problem.picard
    return PicardConfig(gamma=gamma, max_iters=problem.picard.max_iters,
                        tol=problem.picard.tol)


def _load(args, modes=None, steps=None):
    problem = load_problem(args.problem)
    problem = problem.with_overrides(
        modes=modes, steps=steps, scheme=args.scheme,
        picard=_picard_config(problem, args.gamma))
    problem.validate()
    return problem


def _record(args, problem, **options):
    config = {'problem': problem.to_dict()}
    config.update(options)
    return RunRecord(args.command, config)


def cmd_mlf(args):
    value = mittag_leffler(MLParams(args.alpha, args.beta), args.z)
    print('{:.17g}'.format(float(value)))
    return EXIT_OK


def trajectory_rows(trajectory):
    l2 = trajectory.l2_norms()
    h10 = trajectory.h10_norms()
    for t, c, a, b in zip(trajectory.grid.nodes, trajectory.values, l2,
                          h10):
        yield [t] + list(c) + [a, b]


def trajectory_header(trajectory):
    return (['t'] + ['c{}'.format(i) for i in range(1, trajectory.size + 1)]
            + ['l2_norm', 'h10_norm'])


def cmd_solve(args):
    problem = _load(args, modes=args.modes, steps=args.steps)
    record = _record(args, problem)
    with OutputDir(args.out, record) as out:
        start = time.perf_counter()
        trajectory, info = problem.solve()
        record.record_timing('solve', time.perf_counter() - start)
        record.record_solver(**info)
        write_csv(out.join(TRAJECTORY_FNAME), trajectory_header(trajectory),
                  trajectory_rows(trajectory))
    logger.info("Wrote solution of {} to '{}'".format(problem, args.out))
    return EXIT_OK


def cmd_verify(args):
    problem = _load(args, modes=args.modes, steps=args.steps)
    record = _record(args, problem, samples=args.samples, seed=args.seed)
    with OutputDir(args.out, record) as out:
        start = time.perf_counter()
        report, info = run_checks(problem, samples=args.samples,
                                  seed=args.seed)
        record.record_timing('verify', time.perf_counter() - start)
        record.record_solver(**info)
        report.save(out.join(REPORT_FNAME))
    for entry in report:
        print('{:<28} {:>5}  lhs={}  rhs={}'.format(
            entry.name, 'pass' if entry.passed else 'FAIL',
            format_float(entry.lhs), format_float(entry.rhs)))
    return EXIT_OK if report.passed else EXIT_FAILED


def _picard_l1_distance(variant):
    ivp = variant.ivp()
    gamma = variant.picard.resolve_gamma(ivp)
    if not is_resolved(ivp, gamma):
        return float('nan')
    picard, _ = picard_solve(ivp, variant.picard)
    l1, _ = variant.solve('l1', ivp=ivp)
    return scheme_distance(picard, l1)


def cmd_converge(args):
    problem = _load(args)
    modes = check_increasing(args.modes, 'Mode counts')
    steps_list = args.steps if args.steps is not None else [problem.steps]
    processor = get_processor(args.jobs)
    record = _record(args, problem, modes=modes, steps=steps_list)
    rows = []
    with OutputDir(args.out, record) as out:
        start = time.perf_counter()
        for steps in steps_list:
            study = galerkin_convergence(problem, modes, steps=steps,
                                         processor=processor)
            variants = [problem.with_overrides(modes=n, steps=steps)
                        for n in modes[:-1]]
            agreement = processor.map(_picard_l1_distance, variants,
                                      desc='Scheme agreement')
            for (n, n_next, m, d), dist in zip(study.rows(), agreement):
                rows.append([n, n_next, m, d, dist])
        record.record_timing('converge', time.perf_counter() - start)
        write_csv(out.join(CONVERGENCE_FNAME),
                  ['N', 'N_next', 'M', 'd_N', 'picard_l1_distance'], rows)
    return EXIT_OK


def cmd_yosida(args):
    problem = _load(args, modes=args.modes, steps=args.steps)
    n_list = check_increasing(args.n_list, 'Yosida indices')
    record = _record(args, problem, n=n_list)
    with OutputDir(args.out, record) as out:
        start = time.perf_counter()
        trajectory, info = problem.solve()
        study = yosida_study(trajectory, problem.alpha, n_list,
                             processor=get_processor(args.jobs))
        record.record_timing('yosida', time.perf_counter() - start)
        record.record_solver(**info)
        write_csv(out.join(YOSIDA_FNAME),
                  ['n', 'kernel_residual', 'D_n', 'h_n'], study.rows())
    return EXIT_OK


def _configure_logging(level):
    logger.setLevel(getattr(logging, level.upper()))
    if not any(getattr(h, '_fracgal_cli', False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._fracgal_cli = True
        logger.addHandler(handler)


def main(argv=None):
    """
    Runs a command

    Parameters
    ----------
    argv : list[str] | None
        The arguments (sys.argv[1:] if None)

    Returns
    -------
    exit_code : int
        The exit code of the command
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_OK
    _configure_logging(args.loglevel)
    try:
        return args.func(args)
    except (FracGalUsageError, FracGalExpressionError,
            FracGalOverflowError) as e:
        print('error: {}'.format(e.msg), file=sys.stderr)
        return EXIT_USAGE
    except FracGalSolverError as e:
        print('solver error: {}'.format(e.msg), file=sys.stderr)
        return EXIT_SOLVER


if __name__ == '__main__':
    sys.exit(main())
