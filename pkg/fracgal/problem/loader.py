"""
Reading of problem files.

Problem files are sectioned key/value documents, e.g.::

    [problem]
    format = 1
    alpha = 0.5
    T = 1.0

    [domain]
    dim = 1
    lengths = 1.0

    [coefficients]
    a11 = 1 + 0.5 * sin(pi * x) * t
    b1 = 0
    c = 0

    [forcing]
    1 = 1
    3 = sin(t)

    [discretization]
    modes = 8
    steps = 256
    scheme = l1

Coefficients are expressions in t, x (and y for two-dimensional domains),
forcing amplitudes expressions in t keyed by the (1-based) mode they
multiply.
"""
import os.path
import configparser
import logging
from fracgal.exceptions import (
    FracGalProblemFileError, FracGalExpressionError,
    FracGalInvalidParameterError)
from fracgal.spectral import DomainGeometry, CoefficientSet, ModalForcing
from fracgal.fode import PicardConfig, AUTO
from .parameter import ParamSpec, SwitchSpec
from .definition import Problem

logger = logging.getLogger('fracgal')


FORMAT_VERSION = 1

PARAM_SPECS = {
    'problem': [
        ParamSpec('format', None, dtype=int, choices=(FORMAT_VERSION,),
                  desc="Version of the problem file format"),
        ParamSpec('alpha', None, dtype=float,
                  desc="Fractional order in (0, 1)"),
        ParamSpec('T', None, dtype=float, desc="Final time"),
        ParamSpec('theta_min', Problem.DEFAULT_THETA_MIN, dtype=float,
                  desc=("Lower bound the sampled ellipticity constant must "
                        "reach"))],
    'domain': [
        ParamSpec('dim', None, dtype=int, choices=(1, 2),
                  desc="Spatial dimension"),
        ParamSpec('lengths', None, dtype=float, array=True,
                  desc="Side lengths of the box")],
    'discretization': [
        ParamSpec('modes', None, dtype=int, desc="Number of Galerkin modes"),
        ParamSpec('steps', None, dtype=int, desc="Number of time steps"),
        SwitchSpec('scheme', Problem.DEFAULT_SCHEME, choices=Problem.SCHEMES,
                   desc="Time-stepping scheme"),
        ParamSpec('gamma', AUTO, dtype=str,
                  desc="Weighted norm exponent of the Picard iteration"),
        ParamSpec('max_iters', PicardConfig.DEFAULT_MAX_ITERS, dtype=int,
                  desc="Maximum number of Picard iterations"),
        ParamSpec('tol', PicardConfig.DEFAULT_TOL, dtype=float,
                  desc="Stopping tolerance of the Picard iteration")]}

SECTIONS = ('problem', 'domain', 'coefficients', 'forcing',
            'discretization')


def _read_params(parser, section, context):
    values = {}
    known = set()
    for spec in PARAM_SPECS[section]:
        known.add(spec.name)
        if parser.has_option(section, spec.name):
            values[spec.name] = spec.parse(
                parser.get(section, spec.name),
                context="[{}] of {}".format(section, context)).value
        elif spec.required:
            raise FracGalProblemFileError(
                "Required key '{}' is missing from section [{}] of {}"
                .format(spec.name, section, context))
        else:
            values[spec.name] = spec.default
    unknown = set(parser.options(section)) - known
    if unknown:
        raise FracGalProblemFileError(
            "Unrecognised key(s) '{}' in section [{}] of {}".format(
                "', '".join(sorted(unknown)), section, context))
    return values


def _coefficient_keys(dim):
    keys = ['a{}{}'.format(i, j) for i in range(1, dim + 1)
            for j in range(1, dim + 1)]
    keys.extend('b{}'.format(j) for j in range(1, dim + 1))
    keys.append('c')
    return keys


def parse_problem(text, name=None):
    """
    Parses the text of a problem file

    Parameters
    ----------
    text : str
        The contents of the file
    name : str | None
        Name used in error messages and run records

    Returns
    -------
    problem : Problem
        The problem, not yet validated against the standing assumptions
    """
    context = "'{}'".format(name) if name is not None else 'problem file'
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=name or '<problem>')
    except configparser.Error as e:
        raise FracGalProblemFileError(
            "Could not parse {}: {}".format(context, e))
    missing = [s for s in SECTIONS if not parser.has_section(s)]
    if missing:
        raise FracGalProblemFileError(
            "Section(s) [{}] missing from {}".format("], [".join(missing),
                                                     context))
    extra = [s for s in parser.sections() if s not in SECTIONS]
    if extra:
        raise FracGalProblemFileError(
            "Unrecognised section(s) [{}] in {}".format("], [".join(extra),
                                                        context))
    try:
        prob = _read_params(parser, 'problem', context)
        dom = _read_params(parser, 'domain', context)
        disc = _read_params(parser, 'discretization', context)
    except FracGalInvalidParameterError as e:
        raise FracGalProblemFileError(e.msg)
    if len(dom['lengths']) != dom['dim']:
        raise FracGalProblemFileError(
            "Number of side lengths ({}) does not match the dimension ({}) "
            "in {}".format(len(dom['lengths']), dom['dim'], context))
    dim = dom['dim']
    coeff_keys = _coefficient_keys(dim)
    unknown = set(parser.options('coefficients')) - set(coeff_keys)
    if unknown:
        raise FracGalProblemFileError(
            "Unrecognised coefficient(s) '{}' in {} (expected '{}')".format(
                "', '".join(sorted(unknown)), context,
                "', '".join(coeff_keys)))
    coeffs = dict(parser.items('coefficients'))
    if 'a11' not in coeffs:
        raise FracGalProblemFileError(
            "Required coefficient 'a11' is missing from {}".format(context))
    try:
        geometry = DomainGeometry(dom['lengths'])
        a = {(int(k[1]), int(k[2])): v for k, v in coeffs.items()
             if k.startswith('a')}
        b = [coeffs.get('b{}'.format(j), '0') for j in range(1, dim + 1)]
        coefficient_set = CoefficientSet(geometry.lengths, prob['T'], a=a,
                                         b=b, c=coeffs.get('c', '0'))
        forcing = _read_forcing(parser, context)
        picard = PicardConfig(gamma=disc['gamma'],
                              max_iters=disc['max_iters'], tol=disc['tol'])
        problem = Problem(prob['alpha'], prob['T'], geometry,
                          coefficient_set, forcing, disc['modes'],
                          disc['steps'], scheme=disc['scheme'],
                          picard=picard, theta_min=prob['theta_min'],
                          name=name)
    except FracGalExpressionError as e:
        raise FracGalProblemFileError(
            "Invalid expression in {}: {}".format(context, e.msg))
    logger.debug("Read {} from {}".format(problem, context))
    return problem


def _read_forcing(parser, context):
    amplitudes = {}
    for key, expr in parser.items('forcing'):
        try:
            mode = int(key)
        except ValueError:
            mode = 0
        if mode < 1:
            raise FracGalProblemFileError(
                "[a4] Forcing keys must be positive mode indices ('{}' in "
                "{})".format(key, context))
        amplitudes[mode] = expr
    return ModalForcing(amplitudes)


def load_problem(path):
    """
    Reads a problem file

    Parameters
    ----------
    path : str
        Path to the file

    Returns
    -------
    problem : Problem
        The problem
    """
    if not os.path.exists(path):
        raise FracGalProblemFileError(
            "Problem file '{}' does not exist".format(path))
    with open(path, encoding='utf-8') as f:
        text = f.read()
    return parse_problem(text, name=os.path.basename(path))
